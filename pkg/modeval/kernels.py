"""
Vectorised lattice sums over forms of discriminant D.

Every form with a > 0 is [a, b0 + 2an, c] with b0 a residue from
qforms.residue_table, and its value at tau depends only on

    u = tau + n + b0/2a = w + iy,   Q(tau, 1) = a u^2 - D/4a,
    a|tau|^2 + bx + c = a|u|^2 - D/4a =: g,   |Q|^2 = D y^2 + g^2.

The negative -Q contributes (-1)^k times the term of Q, in both the harmonic
summand sgn(g) Q^(k-1) psi(D y^2/|Q|^2) and the cusp summand Q^(-k). Each
residue pair (a, b0) therefore carries an integer weight, and only a > 0 is
summed.

For each pair the translates n are taken from a window of half-width n_max
around the evaluation point. The translates outside the window are replaced
by their leading asymptotic C_a |w|^(-2k), integrated from the window edges.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from config.models import EvalParams
from core.errors import BudgetInfeasibleError
from core.types import Point
from qforms.enumeration import residue_table
from qforms.forms import ON_WALL_RTOL
from qforms.reduction import NarrowClass, r_ab
from special.functions import psi
from utils.parallel import chunk_slices, deterministic_sum, ordered_map

logger = logging.getLogger(__name__)

_WINDOW_SLACK = 1e-9
# floating-point error of a sum is taken as this many ulps of the sum of |terms|
ROUNDING_FACTOR = 16


class SumKind(str, Enum):
    """Which summand a lattice sum uses."""
    HARMONIC = "harmonic"
    CUSP = "cusp"


@dataclass(frozen=True)
class PairTable:
    """Residue pairs (a, b0) with their integer weights; zero-weight pairs dropped."""
    a: np.ndarray
    b0: np.ndarray
    weights: np.ndarray

    @property
    def size(self) -> int:
        return int(self.a.size)

    @property
    def max_weight(self) -> float:
        return float(np.max(np.abs(self.weights))) if self.size else 0.0


@dataclass(frozen=True)
class LatticeSum:
    """Raw weighted sum (before any prefactor) and its window residual."""
    value: complex
    window_tail: float
    rounding: float
    pairs: int
    terms: int


def _freeze(a: np.ndarray, b0: np.ndarray, weights: np.ndarray) -> PairTable:
    keep = weights != 0
    arrays = [np.ascontiguousarray(arr[keep]) for arr in (a, b0, weights)]
    for arr in arrays:
        arr.setflags(write=False)
    return PairTable(*arrays)


@lru_cache(maxsize=64)
def full_table(D: int, a_max: int, k: int, primitive: bool = False) -> PairTable:
    """Pairs of all forms (or all primitive forms), weight 1 + (-1)^k."""
    a, b0 = residue_table(D, a_max, primitive)
    weights = np.full(a.shape, 1.0 + (-1) ** k)
    return _freeze(a, b0, weights)


@lru_cache(maxsize=64)
def class_table(A: NarrowClass, k: int, a_max: int) -> PairTable:
    """Pairs weighted by r_ab(A): how many of Q, -Q lie in the class, with sign (-1)^k for -Q."""
    a, b0 = residue_table(A.D, a_max)
    weights = np.array([r_ab(A, int(ai), int(bi), k) for ai, bi in zip(a.tolist(), b0.tolist())], dtype=float)
    logger.debug(f"class table {A.representative} k={k} a_max={a_max}: {int(np.count_nonzero(weights))} active pairs")
    return _freeze(a, b0, weights)


def _int_power(z: np.ndarray, n: int) -> np.ndarray:
    """z**n for integer n by repeated squaring."""
    if n < 0:
        return 1.0 / _int_power(z, -n)
    result = np.ones_like(z)
    base = z
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


def _chunk_sum(
    kind: SumKind,
    k: int,
    D: int,
    a: np.ndarray,
    b0: np.ndarray,
    weights: np.ndarray,
    x: float,
    y: float,
    anchor: float,
    n_max: int,
) -> Tuple[complex, float, float, int]:
    a_f = a.astype(float)
    shift = b0 / (2.0 * a_f)
    centre = np.rint(-shift - anchor)
    j = np.arange(-n_max - 1, n_max + 2, dtype=float)
    n = centre[:, None] + j[None, :]
    # window chosen around the anchor so finite-difference stencils share it
    mask = np.abs(anchor + n + shift[:, None]) <= n_max + 0.5 + _WINDOW_SLACK
    w = x + n + shift[:, None]
    aa = a_f[:, None]
    u = w + 1j * y
    quarter = D / (4.0 * aa)
    Q = aa * u * u - quarter

    if kind is SumKind.CUSP:
        terms = _int_power(Q, -k)
        c_a = a_f ** (-k)
    else:
        big = aa * (w * w + y * y)
        g = big - quarter
        dy2 = D * y * y
        t = dy2 / (dy2 + g * g)
        sgn = np.sign(g)
        # on the wall sgn = 0
        sgn[np.abs(g) <= ON_WALL_RTOL * (big + quarter)] = 0.0
        terms = sgn * _int_power(Q, k - 1) * psi(t, k)
        c_a = (math.sqrt(D) * y) ** (2 * k - 1) / ((2 * k - 1) * a_f ** k)

    per_pair = np.where(mask, terms, 0.0).sum(axis=1)

    L_plus = np.where(mask, w, -np.inf).max(axis=1) + 0.5
    L_minus = 0.5 - np.where(mask, w, np.inf).min(axis=1)
    p = 1 - 2 * k
    corr = c_a * (L_plus ** p + L_minus ** p) / (2 * k - 1)
    L_min = np.minimum(L_plus, L_minus)
    residual = np.abs(corr) * (2 * k + 1) * (y * y + D + 1) / L_min ** 2

    value = complex(np.sum(weights * (per_pair + corr)))
    window_tail = float(np.sum(np.abs(weights) * residual))
    abs_sum = float(np.sum(np.abs(weights) * np.where(mask, np.abs(terms), 0.0).sum(axis=1)))
    return value, window_tail, abs_sum, int(np.count_nonzero(mask))


def lattice_sum(
    kind: SumKind,
    k: int,
    D: int,
    table: PairTable,
    tau: Point,
    params: EvalParams,
    anchor: Optional[float] = None,
) -> LatticeSum:
    """
    Weighted sum over the pair table at tau.

    Args:
        kind: Harmonic or cusp summand
        k: Weight parameter
        D: Discriminant
        table: Pairs and weights
        tau: Evaluation point
        params: Truncation parameters (n_max, chunk_size)
        anchor: Real part the translate window is centred on (default tau.x)

    Returns:
        LatticeSum with the corrected value and the estimated window residual
    """
    anchor = tau.x if anchor is None else anchor
    if table.size == 0:
        return LatticeSum(0j, 0.0, 0.0, 0, 0)

    def work(sl: slice) -> Tuple[complex, float, float, int]:
        return _chunk_sum(
            kind, k, D, table.a[sl], table.b0[sl], table.weights[sl],
            tau.x, tau.y, anchor, params.n_max,
        )

    parts = ordered_map(work, chunk_slices(table.size, params.chunk_size))
    value = deterministic_sum(p[0] for p in parts)
    window_tail = math.fsum(p[1] for p in parts)
    abs_sum = math.fsum(p[2] for p in parts)
    terms = sum(p[3] for p in parts)
    logger.debug(f"{kind.value} sum k={k} D={D} tau={tau}: {table.size} pairs, {terms} terms")
    rounding = ROUNDING_FACTOR * np.finfo(float).eps * abs_sum
    return LatticeSum(value, window_tail, rounding, table.size, terms)


def poisson_constant(k: int, D: int) -> float:
    """
    Integral over w of the harmonic summand of one pair, divided by a^(-k).

    The integral is (-1)^(k+1) D^(k-1/2) pi / (a^k 2^(2k-2) (2k-1)) for every
    height y > sqrt(D)/2a.
    """
    return (-1) ** (k + 1) * D ** (k - 0.5) * math.pi / (2.0 ** (2 * k - 2) * (2 * k - 1))


def cusp_majorant(k: int, y: float) -> float:
    """Bound for sum_n |tau + n|^(-2k): y^(-2k) + y^(1-2k) sqrt(pi) Gamma(k-1/2)/Gamma(k)."""
    return y ** (-2 * k) + y ** (1 - 2 * k) * math.sqrt(math.pi) * math.gamma(k - 0.5) / math.gamma(k)


def harmonic_factor(k: int, D: int, y: float) -> float:
    """|harmonic summand| <= harmonic_factor |Q|^(-k) whenever D y^2/|Q|^2 <= 1/2."""
    return math.sqrt(2.0) * (math.sqrt(D) * y) ** (2 * k - 1) / (2 * k - 1)


def a_tail_estimate(
    kind: SumKind,
    k: int,
    D: int,
    y: float,
    a_max: int,
    count_tail: float,
    max_weight: float,
    completed: bool = False,
) -> float:
    """
    Bound for the pairs with a > a_max (before the prefactor).

    Uses |Q| >= a|u|^2 (1 - D/4a^2y^2) and the count tail
    sum_{a > a_max} N(a) a^(-k). For a completed harmonic sum only the
    non-constant Fourier modes remain; they are bounded on the line at
    height y/2, which gives the extra factor 2 e^(-pi y)/(1 - e^(-pi y)).

    Raises:
        BudgetInfeasibleError: If the bound's preconditions fail for this a_max and y
    """
    if max_weight == 0 or count_tail == 0:
        return 0.0
    a_next = a_max + 1
    eps = D / (4.0 * a_next * a_next * y * y)
    if eps > 0.5:
        raise BudgetInfeasibleError(
            f"a_max={a_max} too small for y={y:g}: need a_max >= sqrt(D/2)/y"
        )
    base = max_weight * (1 - eps) ** (-k) * cusp_majorant(k, y) * count_tail
    if kind is SumKind.CUSP:
        return base
    if a_next * y * (1 - eps) < math.sqrt(2.0 * D):
        raise BudgetInfeasibleError(
            f"a_max={a_max} too small for the harmonic tail bound at y={y:g}"
        )
    K = harmonic_factor(k, D, y)
    if not completed:
        return K * base
    eps_half = 4 * eps
    if eps_half > 0.5:
        raise BudgetInfeasibleError(
            f"a_max={a_max} too small for the completed tail bound at y={y:g}"
        )
    decay = 2 * math.exp(-math.pi * y) / (1 - math.exp(-math.pi * y))
    return (
        K * 2.0 ** k * max_weight * (1 - eps_half) ** (-k)
        * cusp_majorant(k, 0.5 * y) * decay * count_tail
    )
