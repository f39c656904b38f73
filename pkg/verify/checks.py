"""
Numerical checks, one per verifiable identity.

Every check returns a CheckRecord whose budget is

    max(derived error, rel_tol * scale, abs_tol)

where the derived error comes from the tails of the evaluations involved and
the step-size behaviour of the finite differences.
"""

import logging
import math
import time
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from config.models import EvalParams, FiniteDifferenceSettings
from core.arithmetic import as_discriminant
from core.errors import DomainError, WallCollisionError
from core.modular import cocycle
from core.polynomials import poly_mod_reduce
from core.types import IDENTITY, Mat2, Point, S, T
from hecke.relations import verify_hecke, verify_hecke_holomorphic, verify_hecke_primitive
from modeval.eichler import eichler_holo, eichler_nonholo
from modeval.evaluators import Evaluation, eval_F, eval_fkD
from modeval.fourier import DEFAULT_HEIGHT, fourier_coeffs
from periods.rationality import check_rationality_detailed, rational_rhs
from qforms.forms import QForm, matrix_AQ, q_eval
from qforms.geometry import walls_through
from schemas.records import CheckRecord
from special.series import (
    LSeriesSpec,
    dirichlet_L,
    dirichlet_L_error,
    zagier_zeta_check,
    zeta,
    zeta_error,
)
from walls.constants import c_inf_term
from walls.ival import ival_closed_form, ival_quadrature
from walls.local import wall_jump

logger = logging.getLogger(__name__)

PointLike = Union[Point, Sequence[float], complex]

GAMMAS: Dict[str, Mat2] = {"I": IDENTITY, "S": S, "T": T, "ST": S @ T, "TS": T @ S}

COCYCLE_SEED = 20140521


def as_point(tau: PointLike) -> Point:
    if isinstance(tau, Point):
        return tau
    if isinstance(tau, complex):
        return Point.from_complex(tau)
    x, y = tau
    return Point(float(x), float(y))


def as_gamma(gamma: Union[str, Mat2, Sequence[int]]) -> Mat2:
    if isinstance(gamma, Mat2):
        return gamma
    if isinstance(gamma, str):
        try:
            return GAMMAS[gamma]
        except KeyError:
            raise DomainError(f"unknown matrix name {gamma!r}; expected one of {sorted(GAMMAS)}")
    a, b, c, d = gamma
    return Mat2(a, b, c, d)


def _budget(derived: float, rel_tol: float, scale: float, abs_tol: float) -> float:
    return max(derived, rel_tol * scale, abs_tol)


def _screen(D: int, points: Sequence[Point], margin: float) -> None:
    for pt in points:
        hits = walls_through(D, pt, margin)
        if hits:
            raise WallCollisionError(f"{pt} lies within {margin:g} of a wall", hits)


def _record(
    name: str,
    residual: float,
    derived: float,
    rel_tol: float,
    scale: float,
    abs_tol: float,
    started: float,
    params: Dict[str, Any],
    **details: Any,
) -> CheckRecord:
    budget = _budget(derived, rel_tol, scale, abs_tol)
    details.setdefault("derived_error", derived)
    details.setdefault("scale", scale)
    return CheckRecord.judge(
        name, float(residual), float(budget),
        params=params, runtime=time.perf_counter() - started, details=details,
    )


def _richardson(values: Sequence[complex]) -> Tuple[complex, float]:
    """
    Extrapolate values taken at steps w, w/2, w/4, ... to step 0.

    Assumes an expansion in integer powers of the step. Returns the last
    diagonal entry and its distance to the previous one.
    """
    table = [[complex(v)] for v in values]
    for i in range(1, len(values)):
        for j in range(1, i + 1):
            prev = table[i][j - 1]
            table[i].append(prev + (prev - table[i - 1][j - 1]) / (2 ** j - 1))
    best = table[-1][-1]
    if len(values) < 2:
        return best, math.inf
    return best, abs(best - table[-2][-1])


# ============================================================================
# CUSP FORMS AND CONSTANTS
# ============================================================================

def check_vanishing(
    k: int,
    D: int,
    params: EvalParams,
    tau: PointLike = (0.0, 1.0),
    rel_tol: float = 1e-3,
    abs_tol: float = 0.0,
) -> CheckRecord:
    """|f_{k,D}(tau)| within its tail, for weights where no cusp forms exist."""
    started = time.perf_counter()
    tau = as_point(tau)
    ev = eval_fkD(k, D, tau, params)
    return _record(
        "vanishing", abs(ev.value), ev.tail, rel_tol, 0.0, abs_tol, started,
        {"k": k, "D": D, "tau": [tau.x, tau.y]},
        value_re=ev.real, value_im=ev.imag,
    )


def check_constant(
    k: int,
    D: int,
    params: EvalParams,
    tau: PointLike = (0.0, 2.0),
    rel_tol: float = 1e-3,
    abs_tol: float = 0.0,
) -> CheckRecord:
    """F_{1-k,D} equals c_inf above every wall."""
    started = time.perf_counter()
    tau = as_point(tau)
    disc = as_discriminant(D)
    if tau.y <= disc.sqrt / 2:
        raise DomainError(f"{tau} is not above the walls (need y > {disc.sqrt / 2:g})")
    constant = c_inf_term(disc, k, params)
    ev = eval_F(k, disc, tau, params)
    details: Dict[str, Any] = {"F": [ev.real, ev.imag], "c_inf": constant.value, "closed_form": constant.closed_form}
    if k % 2 == 0:
        spec = LSeriesSpec(disc.delta, float(k))
        details.update({
            "zeta_k": zeta(float(k)),
            "zeta_2k": zeta(2.0 * k),
            "L_delta_k": dirichlet_L(spec),
        })
    return _record(
        "constant", abs(ev.value - constant.value), ev.tail + constant.error,
        rel_tol, abs(constant.value), abs_tol, started,
        {"k": k, "D": disc.D, "tau": [tau.x, tau.y]}, **details,
    )


def check_growth(
    k: int,
    D: int,
    params: EvalParams,
    y_values: Sequence[float] = (3.0, 5.0, 10.0, 20.0, 30.0),
    rel_tol: float = 1e-3,
    abs_tol: float = 0.0,
) -> CheckRecord:
    """|F(iy) - c_inf| stays within the tails far up the imaginary axis."""
    started = time.perf_counter()
    disc = as_discriminant(D)
    constant = c_inf_term(disc, k, params)
    deviations, tails = [], []
    for y in y_values:
        ev = eval_F(k, disc, Point(0.0, float(y)), params)
        deviations.append(abs(ev.value - constant.value))
        tails.append(ev.tail)
    return _record(
        "growth", max(deviations), max(tails) + constant.error,
        rel_tol, abs(constant.value), abs_tol, started,
        {"k": k, "D": disc.D, "y_values": list(y_values)},
        deviations=deviations,
    )


# ============================================================================
# EXPANSION AND DIFFERENTIAL OPERATORS
# ============================================================================

def check_expansion(
    k: int,
    D: int,
    tau: PointLike,
    params: EvalParams,
    m_max: int = 4,
    coeff_height: float = DEFAULT_HEIGHT,
    method: str = "quadrature",
    rel_tol: float = 1e-3,
    abs_tol: float = 0.0,
) -> CheckRecord:
    """
    F = c_inf + D^(1/2-k) f* - D^(1/2-k) (2k-2)!/(4 pi)^(2k-1) E_f above the walls.

    Raises:
        DomainError: If tau is not above every wall
    """
    started = time.perf_counter()
    tau = as_point(tau)
    disc = as_discriminant(D)
    if tau.y <= disc.sqrt / 2:
        raise DomainError(f"{tau} is not above the walls (need y > {disc.sqrt / 2:g})")
    series = fourier_coeffs(k, disc, m_max, coeff_height, params)
    constant = c_inf_term(disc, k, params)
    F = eval_F(k, disc, tau, params)
    fstar = eichler_nonholo(series, tau, params, method)
    holo = eichler_holo(series, tau)
    scale_f = disc.D ** (0.5 - k)
    scale_e = scale_f * math.factorial(2 * k - 2) / (4 * math.pi) ** (2 * k - 1)
    predicted = constant.value + scale_f * fstar.value - scale_e * holo.value
    derived = F.tail + constant.error + scale_f * fstar.tail + scale_e * holo.tail
    return _record(
        "expansion", abs(F.value - predicted), derived,
        rel_tol, max(abs(F.value), abs(constant.value)), abs_tol, started,
        {"k": k, "D": disc.D, "tau": [tau.x, tau.y], "m_max": m_max, "coeff_height": coeff_height},
        F=[F.real, F.imag], predicted=[predicted.real, predicted.imag],
        a_1=[series.coeffs[0].real, series.coeffs[0].imag], coeff_error=series.est_error,
    )


def _stencil(k: int, D: int, tau: Point, h: float, params: EvalParams) -> Dict[str, Evaluation]:
    """F at tau and its four axis neighbours, all on the window anchored at tau.x."""
    x, y = tau.x, tau.y
    points = {
        "c": tau,
        "e": Point(x + h, y),
        "w": Point(x - h, y),
        "n": Point(x, y + h),
        "s": Point(x, y - h),
    }
    return {key: eval_F(k, D, pt, params, anchor=x) for key, pt in points.items()}


def _derivatives(st: Dict[str, Evaluation], h: float) -> Tuple[complex, complex, complex, complex]:
    fx = (st["e"].value - st["w"].value) / (2 * h)
    fy = (st["n"].value - st["s"].value) / (2 * h)
    fxx = (st["e"].value - 2 * st["c"].value + st["w"].value) / (h * h)
    fyy = (st["n"].value - 2 * st["c"].value + st["s"].value) / (h * h)
    return fx, fy, fxx, fyy


def _noise(st: Dict[str, Evaluation]) -> float:
    return max(ev.rounding for ev in st.values())


def xi_operator(k: int, D: int, tau: Point, h: float, params: EvalParams) -> Tuple[complex, float]:
    """2i y^(2-2k) conj(dF/d tau-bar) by central differences, with its rounding error."""
    st = _stencil(k, D, tau, h, params)
    fx, fy, _, _ = _derivatives(st, h)
    dbar = 0.5 * (fx + 1j * fy)
    factor = 2 * tau.y ** (2 - 2 * k)
    return 1j * factor * dbar.conjugate(), factor * _noise(st) / h


def check_xi(
    k: int,
    D: int,
    tau: PointLike,
    params: EvalParams,
    fd: Optional[FiniteDifferenceSettings] = None,
    rel_tol: float = 1e-2,
    abs_tol: float = 0.0,
) -> CheckRecord:
    """xi_{2-2k} F_{1-k,D} = D^(1/2-k) f_{k,D} off the walls."""
    started = time.perf_counter()
    fd = fd or FiniteDifferenceSettings()
    tau = as_point(tau)
    disc = as_discriminant(D)
    h = fd.h_first
    _screen(disc.D, [tau], max(params.wall_margin, 4 * h))
    steps = [h / 2 ** j for j in range(fd.richardson_levels + 2)]
    estimates = [xi_operator(k, disc.D, tau, step, params) for step in steps]
    values = [v for v, _ in estimates]
    noise = max(n for _, n in estimates)
    # central differences: error in h^2, so extrapolate with the ratio 4
    best = values[0] if fd.richardson_levels == 0 else (4 * values[1] - values[0]) / 3
    target = eval_fkD(k, disc, tau, params).scaled(disc.D ** (0.5 - k))
    derived = abs(values[1] - values[0]) / 3 + noise + target.tail
    diffs = [abs(values[i] - values[i + 1]) for i in range(len(values) - 1)]
    ratios = [diffs[i] / diffs[i + 1] for i in range(len(diffs) - 1) if diffs[i + 1] > 0]
    return _record(
        "xi", abs(best - target.value), derived,
        rel_tol, abs(target.value), abs_tol, started,
        {"k": k, "D": disc.D, "tau": [tau.x, tau.y], "h": h},
        xi=[best.real, best.imag], target=[target.real, target.imag], step_halving_ratios=ratios,
    )


def laplacian(k: int, D: int, tau: Point, h: float, params: EvalParams) -> Tuple[complex, float, float]:
    """
    Five-point Delta_{2-2k} F at tau.

    Returns:
        (value, local function scale, rounding error)
    """
    st = _stencil(k, D, tau, h, params)
    fx, fy, fxx, fyy = _derivatives(st, h)
    y = tau.y
    kappa = 2 - 2 * k
    value = -y * y * (fxx + fyy) + 1j * kappa * y * (fx + 1j * fy)
    scale = max(abs(st["c"].value), y * y * (abs(fxx) + abs(fyy)), abs(kappa) * y * (abs(fx) + abs(fy)))
    noise = _noise(st) * (8 * y * y / (h * h) + 2 * abs(kappa) * y / h)
    return value, scale, noise


def check_laplacian(
    k: int,
    D: int,
    tau: PointLike,
    params: EvalParams,
    fd: Optional[FiniteDifferenceSettings] = None,
    rel_tol: float = 1e-3,
    abs_tol: float = 0.0,
) -> CheckRecord:
    """Delta_{2-2k} F_{1-k,D} = 0 off the walls, relative to the local scale."""
    started = time.perf_counter()
    fd = fd or FiniteDifferenceSettings()
    tau = as_point(tau)
    disc = as_discriminant(D)
    h = fd.h_second
    _screen(disc.D, [tau], max(params.wall_margin, 4 * h))
    coarse, scale, noise = laplacian(k, disc.D, tau, h, params)
    if fd.richardson_levels == 0:
        best, derived = coarse, noise
    else:
        fine, _, fine_noise = laplacian(k, disc.D, tau, h / 2, params)
        best = (4 * fine - coarse) / 3
        derived = abs(fine - coarse) / 3 + max(noise, fine_noise)
    return _record(
        "laplacian", abs(best), derived, rel_tol, scale, abs_tol, started,
        {"k": k, "D": disc.D, "tau": [tau.x, tau.y], "h": h},
        laplacian=[best.real, best.imag],
    )


def check_modularity(
    k: int,
    D: int,
    gamma: Union[str, Mat2, Sequence[int]],
    tau: PointLike,
    params: EvalParams,
    rel_tol: float = 1e-3,
    abs_tol: float = 0.0,
) -> CheckRecord:
    """(F |_{2-2k} gamma)(tau) = F(tau) at an off-wall point."""
    started = time.perf_counter()
    tau = as_point(tau)
    disc = as_discriminant(D)
    matrix = as_gamma(gamma)
    image, factor = cocycle(matrix, tau, 2 - 2 * k)
    _screen(disc.D, [tau, image], params.wall_margin)
    at_tau = eval_F(k, disc, tau, params)
    at_image = eval_F(k, disc, image, params)
    slashed = factor * at_image.value
    return _record(
        "modularity", abs(slashed - at_tau.value), abs(factor) * at_image.tail + at_tau.tail,
        rel_tol, abs(at_tau.value), abs_tol, started,
        {"k": k, "D": disc.D, "gamma": gamma if isinstance(gamma, str) else [matrix.a, matrix.b, matrix.c, matrix.d], "tau": [tau.x, tau.y]},
        F=[at_tau.real, at_tau.imag], slashed=[slashed.real, slashed.imag],
    )


# ============================================================================
# WALLS
# ============================================================================

def _wall_point(Q: QForm, tau: Optional[PointLike]) -> Point:
    """tau, or the apex of S_Q."""
    return as_point(tau) if tau is not None else Point(Q.center, Q.radius)


def _vertical_samples(k: int, D: int, tau: Point, params: EvalParams, w0: float, levels: int):
    below, above = [], []
    for j in range(levels + 1):
        w = w0 / 2 ** j
        below.append(eval_F(k, D, Point(tau.x, tau.y - w), params, anchor=tau.x))
        above.append(eval_F(k, D, Point(tau.x, tau.y + w), params, anchor=tau.x))
    return below, above


def check_wall_jump(
    k: int,
    D: int,
    Q: Sequence[int],
    params: EvalParams,
    tau: Optional[PointLike] = None,
    w0: float = 1e-2,
    levels: int = 4,
    rel_tol: float = 1e-3,
    abs_tol: float = 0.0,
) -> CheckRecord:
    """The extrapolated two-sided limit F(tau - iw) - F(tau + iw) matches the jump formula."""
    started = time.perf_counter()
    disc = as_discriminant(D)
    form = QForm(*Q)
    point = _wall_point(form, tau)
    predicted = wall_jump(k, disc, form, point, params)
    below, above = _vertical_samples(k, disc.D, point, params, w0, levels)
    measured, extrapolation_error = _richardson([b.value - a.value for b, a in zip(below, above)])
    derived = extrapolation_error + below[-1].tail + above[-1].tail
    return _record(
        "wall_jump", abs(measured - predicted), derived,
        rel_tol, abs(predicted), abs_tol, started,
        {"k": k, "D": disc.D, "Q": form.to_list(), "tau": [point.x, point.y], "w0": w0, "levels": levels},
        predicted=[predicted.real, predicted.imag], measured=[measured.real, measured.imag],
    )


def check_wall_average(
    k: int,
    D: int,
    Q: Sequence[int],
    params: EvalParams,
    tau: Optional[PointLike] = None,
    w0: float = 1e-2,
    levels: int = 4,
    rel_tol: float = 1e-6,
    abs_tol: float = 0.0,
) -> CheckRecord:
    """The on-wall value equals the extrapolated mean of the two one-sided limits."""
    started = time.perf_counter()
    disc = as_discriminant(D)
    form = QForm(*Q)
    point = _wall_point(form, tau)
    below, above = _vertical_samples(k, disc.D, point, params, w0, levels)
    mean, extrapolation_error = _richardson([0.5 * (b.value + a.value) for b, a in zip(below, above)])
    on_wall = eval_F(k, disc, point, params, anchor=point.x)
    derived = extrapolation_error + on_wall.tail + 0.5 * (below[-1].tail + above[-1].tail)
    return _record(
        "wall_average", abs(on_wall.value - mean), derived,
        rel_tol, abs(on_wall.value), abs_tol, started,
        {"k": k, "D": disc.D, "Q": form.to_list(), "tau": [point.x, point.y], "w0": w0, "levels": levels},
        on_wall=[on_wall.real, on_wall.imag], mean=[mean.real, mean.imag],
    )


# ============================================================================
# PERIODS, HECKE, IDENTITIES
# ============================================================================

def cusp_dimension(weight: int) -> int:
    """dim S_weight for SL2(Z), weight even."""
    if weight % 2 or weight < 4:
        return 0
    base = weight // 12
    return base - 1 if weight % 12 == 2 else base


def check_rationality(
    k: int,
    D: int,
    params: EvalParams,
    m_max: int = 4,
    coeff_height: float = DEFAULT_HEIGHT,
    rel_tol: float = 1e-3,
    abs_tol: float = 0.0,
) -> CheckRecord:
    """
    r+(f_{k,D}) = -2 sum_{a<0<c} Q(X,1)^(k-1) modulo X^(2k-2) - 1.

    Where no cusp forms exist r+ = 0 and the right side alone must reduce to
    a multiple of X^(2k-2) - 1; that case is decided in integer arithmetic.
    """
    started = time.perf_counter()
    disc = as_discriminant(D)
    run_params = {"k": k, "D": disc.D, "m_max": m_max}
    if cusp_dimension(2 * k) == 0:
        rhs = rational_rhs(k, disc)
        reduced, constant = poly_mod_reduce(rhs, k)
        residual = reduced.max_abs_coeff()
        return CheckRecord.judge(
            "rationality", float(residual), 0.0,
            params=run_params, runtime=time.perf_counter() - started,
            details={"exact": True, "fitted_constant": float(complex(constant).real), "rational_rhs": [int(c) for c in rhs.coeffs]},
        )
    result = check_rationality_detailed(k, disc, params, m_max, coeff_height)
    return _record(
        "rationality", result.residual, result.budget,
        rel_tol, float(result.rhs.max_abs_coeff()), abs_tol, started, run_params,
        exact=False, fitted_constant=result.fitted_constant, rational_rhs=[int(c) for c in result.rhs.coeffs],
    )


_HECKE_RELATIONS = {
    "full": verify_hecke,
    "holomorphic": verify_hecke_holomorphic,
    "primitive": verify_hecke_primitive,
}


def check_hecke(
    k: int,
    D: int,
    p: int,
    tau: PointLike,
    params: EvalParams,
    relation: str = "full",
    rel_tol: float = 1e-6,
    abs_tol: float = 0.0,
) -> CheckRecord:
    """Both sides of a Hecke relation agree within the tails of the p + 2 evaluations."""
    started = time.perf_counter()
    try:
        verify = _HECKE_RELATIONS[relation]
    except KeyError:
        raise DomainError(f"unknown Hecke relation {relation!r}; expected one of {sorted(_HECKE_RELATIONS)}")
    tau = as_point(tau)
    result = verify(k, D, p, tau, params)
    return _record(
        "hecke", result.residual, result.budget,
        rel_tol, max(abs(result.lhs), abs(result.rhs)), abs_tol, started,
        {"k": k, "D": int(D), "p": p, "tau": [tau.x, tau.y], "relation": relation},
        lhs=[result.lhs.real, result.lhs.imag], rhs=[result.rhs.real, result.rhs.imag],
        tau_used=[result.tau.x, result.tau.y], nudges=result.nudges, terms=list(result.terms),
    )


def check_zagier(
    D: int,
    params: EvalParams,
    s: float = 2.0,
    a_max: int = 100_000,
    rel_tol: float = 1e-6,
    abs_tol: float = 0.0,
) -> CheckRecord:
    """The truncated form count sum matches zeta(s)/zeta(2s) L_Delta(s) (conductor factor)."""
    started = time.perf_counter()
    disc = as_discriminant(D)
    lhs, rhs = zagier_zeta_check(disc, s, a_max)
    series_error = rhs * (
        zeta_error(s, 10 ** 6) / zeta(s) + zeta_error(2 * s, 10 ** 6) / zeta(2 * s)
        + dirichlet_L_error(LSeriesSpec(disc.delta, s)) / abs(dirichlet_L(LSeriesSpec(disc.delta, s)))
    )
    return _record(
        "zagier", abs(lhs - rhs), series_error, rel_tol, abs(rhs), abs_tol, started,
        {"D": disc.D, "s": s, "a_max": a_max},
        lhs=lhs, rhs=rhs,
    )


def check_ival(
    a: int,
    D: int,
    k: int,
    params: EvalParams,
    y_values: Sequence[float] = (1.5, 2.0, 3.0),
    rel_tol: float = 1e-5,
    abs_tol: float = 0.0,
) -> CheckRecord:
    """Quadrature of the one-pair integral matches its closed form at several heights."""
    started = time.perf_counter()
    closed = ival_closed_form(a, D, k)
    values, errors = [], []
    for y in y_values:
        value, error = ival_quadrature(a, D, k, float(y), params.quad_points)
        values.append(value)
        errors.append(error)
    residual = max(abs(v - closed) for v in values)
    return _record(
        "ival", residual, max(errors), rel_tol, abs(closed), abs_tol, started,
        {"a": a, "D": int(D), "k": k, "y_values": list(y_values)},
        closed_form=closed, quadrature=values, spread=max(values) - min(values),
    )


def _random_forms(rng: np.random.Generator, count: int, bound: int) -> List[QForm]:
    forms: List[QForm] = []
    while len(forms) < count:
        a, b, c = (int(v) for v in rng.integers(-bound, bound + 1, size=3))
        D = b * b - 4 * a * c
        if a == 0 or D <= 0 or math.isqrt(D) ** 2 == D:
            continue
        forms.append(QForm(a, b, c))
    return forms


def check_cocycle(
    params: EvalParams,
    samples: int = 1000,
    bound: int = 30,
    seed: int = COCYCLE_SEED,
    rel_tol: float = 1e-10,
    abs_tol: float = 0.0,
) -> CheckRecord:
    """(A_Q tau) j(A_Q, tau)^2 = -Q(tau, 1)/sqrt(D) at random forms and points."""
    started = time.perf_counter()
    rng = np.random.default_rng(seed)
    forms = _random_forms(rng, samples, bound)
    xs = rng.uniform(-2.0, 2.0, size=samples)
    ys = rng.uniform(0.1, 3.0, size=samples)
    worst = 0.0
    for Q, x, y in zip(forms, xs, ys):
        tau = Point(float(x), float(y))
        image, factor = cocycle(matrix_AQ(Q), tau, -2)
        lhs = factor * image.tau
        rhs = -q_eval(Q, tau) / math.sqrt(Q.disc)
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    return _record(
        "cocycle", worst, 0.0, rel_tol, 1.0, abs_tol, started,
        {"samples": samples, "bound": bound, "seed": seed},
    )
