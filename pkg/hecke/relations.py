"""
Numerical checks of the Hecke relations

    F_D  | T_p = F_{Dp^2} + p^(-k) (D/p) F_D + p^(1-2k) F_{D/p^2}                   (weight 2-2k)
    f_D  | T_p = f_{Dp^2} + p^(k-1) (D/p) f_D + p^(2k-1) f_{D/p^2}                  (weight 2k)
    F'_D | T_p = p^(-k) F'_{Dp^2} + p^(-k) (1 + (D/p)) F'_D                  if p does not divide f
               = p^(-k) F'_{Dp^2} + p^(-k) (p - ((D/p^2)/p)) F'_{D/p^2}      if p divides f

where the F_{D/p^2} terms are absent unless D/p^2 is a discriminant.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Iterator, List, Tuple

from config.models import EvalParams
from core.arithmetic import as_discriminant, is_discriminant, kronecker
from core.errors import WallCollisionError
from core.types import Point
from hecke.operators import Evaluator, check_prime, hecke_points, hecke_Tp
from modeval.evaluators import DiscLike, Evaluation, check_weight, eval_F, eval_F_primitive, eval_fkD
from qforms.geometry import walls_through
from utils.parallel import ordered_map

logger = logging.getLogger(__name__)

MAX_NUDGES = 8
NUDGE_STEP = 0.0137


@dataclass(frozen=True)
class HeckeResult:
    """Both sides of a Hecke relation at the point actually used."""
    lhs: complex
    rhs: complex
    budget: float
    tau: Point
    nudges: int = 0
    terms: Tuple[str, ...] = field(default=())

    @property
    def residual(self) -> float:
        return abs(self.lhs - self.rhs)

    @property
    def passed(self) -> bool:
        return self.residual <= self.budget

    def __iter__(self) -> Iterator[complex]:
        yield self.lhs
        yield self.rhs

    def to_dict(self) -> dict:
        return {
            "lhs_re": self.lhs.real,
            "lhs_im": self.lhs.imag,
            "rhs_re": self.rhs.real,
            "rhs_im": self.rhs.imag,
            "residual": self.residual,
            "error_estimate": self.budget,
            "tau": [self.tau.x, self.tau.y],
            "nudges": self.nudges,
            "terms": list(self.terms),
        }


def _related_discriminants(D: int, p: int) -> List[int]:
    out = [D, D * p * p]
    if D % (p * p) == 0 and is_discriminant(D // (p * p)):
        out.append(D // (p * p))
    return out


def _collides(discs: List[int], points: List[Point], margin: float) -> bool:
    return any(walls_through(d, pt, margin) for d in discs for pt in points)


def screened_point(D: int, p: int, tau: Point, params: EvalParams) -> Tuple[Point, int]:
    """
    tau, or the first nudge of it whose Hecke points avoid every relevant wall.

    Raises:
        WallCollisionError: If no nudge within MAX_NUDGES clears the walls
    """
    discs = _related_discriminants(D, p)
    candidate = tau
    for attempt in range(MAX_NUDGES + 1):
        if attempt:
            candidate = Point(tau.x + attempt * NUDGE_STEP, tau.y + 0.5 * attempt * NUDGE_STEP)
        if not _collides(discs, [candidate] + hecke_points(p, candidate), params.wall_margin):
            if attempt:
                logger.warning(f"Hecke point {tau} nudged to {candidate} to avoid a wall")
            return candidate, attempt
    raise WallCollisionError(f"no wall-free Hecke point near {tau} after {MAX_NUDGES} nudges")


def _combine(terms: List[Tuple[complex, Evaluation]]) -> Evaluation:
    value = sum((c * ev.value for c, ev in terms), 0j)
    tail = sum(abs(c) * ev.tail for c, ev in terms)
    return Evaluation(value, tail)


def _verify(
    D: DiscLike,
    p: int,
    tau: Point,
    params: EvalParams,
    weight: int,
    make: Callable[[int], Callable[[Point, EvalParams], Evaluation]],
    coefficients: Callable[[int, int], List[Tuple[complex, int, str]]],
    label: str,
) -> HeckeResult:
    check_prime(p)
    disc = as_discriminant(D)
    tau, nudges = screened_point(disc.D, p, tau, params)
    lhs = hecke_Tp(Evaluator(make(disc.D), weight, f"{label}_{disc.D}"), p, tau, params)
    plan = coefficients(disc.D, p)
    evaluations = ordered_map(lambda item: make(item[1])(tau, params), plan)
    rhs = _combine([(c, ev) for (c, _, _), ev in zip(plan, evaluations)])
    result = HeckeResult(lhs.value, rhs.value, lhs.tail + rhs.tail, tau, nudges, tuple(t for _, _, t in plan))
    logger.info(
        f"Hecke {label} D={disc.D} p={p} at {tau}: |lhs - rhs| = {result.residual:.3g} "
        f"(budget {result.budget:.3g})"
    )
    return result


def verify_hecke(k: int, D: DiscLike, p: int, tau: Point, params: EvalParams) -> HeckeResult:
    """
    Both sides of the weight 2-2k relation for F_{1-k,D}.

    Raises:
        WallCollisionError: If the evaluation points cannot be moved off the walls
    """
    check_weight(k)

    def coefficients(D: int, p: int) -> List[Tuple[complex, int, str]]:
        plan = [(1.0, D * p * p, f"F_{D * p * p}"), (p ** -k * kronecker(D, p), D, f"F_{D}")]
        if D % (p * p) == 0 and is_discriminant(D // (p * p)):
            plan.append((float(p) ** (1 - 2 * k), D // (p * p), f"F_{D // (p * p)}"))
        return [item for item in plan if item[0] != 0]

    return _verify(D, p, tau, params, 2 - 2 * k, lambda d: (lambda t, q: eval_F(k, d, t, q)), coefficients, "F")


def verify_hecke_holomorphic(k: int, D: DiscLike, p: int, tau: Point, params: EvalParams) -> HeckeResult:
    """Both sides of the weight 2k relation for f_{k,D}."""
    check_weight(k)

    def coefficients(D: int, p: int) -> List[Tuple[complex, int, str]]:
        plan = [(1.0, D * p * p, f"f_{D * p * p}"), (float(p) ** (k - 1) * kronecker(D, p), D, f"f_{D}")]
        if D % (p * p) == 0 and is_discriminant(D // (p * p)):
            plan.append((float(p) ** (2 * k - 1), D // (p * p), f"f_{D // (p * p)}"))
        return [item for item in plan if item[0] != 0]

    return _verify(D, p, tau, params, 2 * k, lambda d: (lambda t, q: eval_fkD(k, d, t, q)), coefficients, "f")


def verify_hecke_primitive(k: int, D: DiscLike, p: int, tau: Point, params: EvalParams) -> HeckeResult:
    """
    Both sides of the relation for the primitive-form sum F'_{1-k,D}.

    The branch is chosen by whether p divides the conductor f of D, i.e.
    whether D/p^2 is a discriminant with the same fundamental part.
    """
    check_weight(k)

    def coefficients(D: int, p: int) -> List[Tuple[complex, int, str]]:
        scale = float(p) ** -k
        plan = [(scale, D * p * p, f"F'_{D * p * p}")]
        if as_discriminant(D).f % p:
            plan.append((scale * (1 + kronecker(D, p)), D, f"F'_{D}"))
        else:
            lower = D // (p * p)
            plan.append((scale * (p - kronecker(lower, p)), lower, f"F'_{lower}"))
        return [item for item in plan if item[0] != 0]

    return _verify(
        D, p, tau, params, 2 - 2 * k,
        lambda d: (lambda t, q: eval_F_primitive(k, d, t, q)), coefficients, "F'",
    )
