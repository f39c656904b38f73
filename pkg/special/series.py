"""
Dirichlet series: the Riemann zeta function, L-series of quadratic
characters, and the zeta function of forms of discriminant D

    Z_D(s) = sum_a N(a) a^(-s)
           = zeta(s)/zeta(2s) L_delta(s) sum_{d | f} mu(d) chi(d) d^(-s) sigma_{1-2s}(f/d),

with N(a) the number of b mod 2a with b^2 = D mod 4a.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple, Union

import numpy as np
from sympy import divisors

from core.arithmetic import as_discriminant, kronecker, moebius, sigma
from core.errors import DomainError
from core.types import Discriminant
from qforms.enumeration import residue_counts, residue_table

logger = logging.getLogger(__name__)

DEFAULT_TERMS = 1_000_000


@dataclass(frozen=True)
class LSeriesSpec:
    """L(s, chi_delta) truncated after `terms` terms."""
    delta: int
    s: float
    terms: int = DEFAULT_TERMS

    def __post_init__(self):
        if not self.s > 1:
            raise DomainError(f"L-series needs s > 1, got {self.s}")
        if self.terms < 1:
            raise DomainError("terms must be >= 1")


def _check_s(s: float) -> None:
    if not s > 1:
        raise DomainError(f"s must exceed 1, got {s}")


def zeta_error(s: float, terms: int) -> float:
    """Size of the first omitted Euler-Maclaurin correction."""
    return s * (s + 1) * (s + 2) * float(terms) ** (-s - 3) / 720.0


@lru_cache(maxsize=256)
def zeta(s: float, terms: int = DEFAULT_TERMS) -> float:
    """
    Riemann zeta for s > 1.

    Direct sum to N = terms with the Euler-Maclaurin tail
    N^(1-s)/(s-1) - N^(-s)/2 + s N^(-s-1)/12; the error is below zeta_error.
    """
    _check_s(s)
    n = np.arange(terms, 0, -1, dtype=float)
    head = float(np.sum(n ** (-s)))
    N = float(terms)
    tail = N ** (1 - s) / (s - 1) - N ** (-s) / 2 + s * N ** (-s - 1) / 12
    return head + tail


@lru_cache(maxsize=64)
def _character_table(delta: int) -> np.ndarray:
    period = abs(delta)
    table = np.array([kronecker(delta, n) for n in range(period)], dtype=float)
    table.setflags(write=False)
    return table


def dirichlet_L_error(spec: LSeriesSpec) -> float:
    """Bound on the omitted tail: by Abel summation |tail| <= |delta| N^(-s)."""
    if abs(spec.delta) == 1:
        return zeta_error(spec.s, spec.terms)
    return abs(spec.delta) * float(spec.terms) ** (-spec.s)


@lru_cache(maxsize=256)
def dirichlet_L(spec: LSeriesSpec) -> float:
    """L(s, chi_delta) by direct summation (trivial character delegates to zeta)."""
    if abs(spec.delta) == 1:
        return zeta(spec.s, spec.terms)
    table = _character_table(spec.delta)
    n = np.arange(spec.terms, 0, -1, dtype=np.int64)
    chi = table[n % table.size]
    return float(np.sum(chi * n.astype(float) ** (-spec.s)))


def conductor_factor(disc: Discriminant, s: float) -> float:
    """sum_{d | f} mu(d) chi_delta(d) d^(-s) sigma_{1-2s}(f/d)."""
    terms = []
    for d in divisors(disc.f):
        d = int(d)
        mu = moebius(d)
        if mu == 0:
            continue
        chi = kronecker(disc.delta, d)
        if chi == 0:
            continue
        terms.append(mu * chi * d ** (-s) * sigma(1 - 2 * s, disc.f // d))
    return math.fsum(terms)


@lru_cache(maxsize=256)
def _zagier_zeta(D: int, s: float) -> float:
    disc = as_discriminant(D)
    ratio = zeta(s) / zeta(2 * s)
    L = dirichlet_L(LSeriesSpec(disc.delta, s))
    return ratio * L * conductor_factor(disc, s)


def zagier_zeta(D: Union[int, Discriminant], s: float) -> float:
    """Z_D(s) from the closed product of zeta and L-values."""
    _check_s(s)
    return _zagier_zeta(as_discriminant(D).D, float(s))


@lru_cache(maxsize=256)
def partial_zagier_zeta(D: int, s: float, a_max: int) -> float:
    """sum_{a <= a_max} N(a) a^(-s)."""
    counts = residue_counts(D, a_max)[1:]
    a = np.arange(a_max, 0, -1, dtype=float)
    return float(np.sum(counts[::-1] * a ** (-s)))


def zagier_tail(D: Union[int, Discriminant], s: float, a_max: int) -> float:
    """sum_{a > a_max} N(a) a^(-s), as closed value minus partial sum (clamped at 0)."""
    disc = as_discriminant(D)
    return max(zagier_zeta(disc, s) - partial_zagier_zeta(disc.D, float(s), a_max), 0.0)


def zagier_zeta_check(D: Union[int, Discriminant], s: float, a_max: int) -> Tuple[float, float]:
    """
    Both sides of the form-counting identity: (truncated count sum, closed form).
    """
    _check_s(s)
    disc = as_discriminant(D)
    lhs = partial_zagier_zeta(disc.D, float(s), a_max)
    rhs = zagier_zeta(disc, s)
    logger.debug(f"Zagier identity D={disc.D} s={s} a_max={a_max}: lhs={lhs:.12g} rhs={rhs:.12g}")
    return lhs, rhs


@lru_cache(maxsize=256)
def _primitive_zagier_zeta(D: int, s: float) -> float:
    # Z_D = sum over contents g (g^2 | D, D/g^2 a discriminant) of g^(-s) Z'_{D/g^2}
    total = _zagier_zeta(D, s)
    g = 2
    while g * g <= D:
        if D % (g * g) == 0 and (D // (g * g)) % 4 in (0, 1):
            total -= g ** (-s) * _primitive_zagier_zeta(D // (g * g), s)
        g += 1
    return total


def primitive_zagier_zeta(D: Union[int, Discriminant], s: float) -> float:
    """sum_a N'(a) a^(-s), counting only primitive forms."""
    _check_s(s)
    return _primitive_zagier_zeta(as_discriminant(D).D, float(s))


@lru_cache(maxsize=256)
def partial_primitive_zagier_zeta(D: int, s: float, a_max: int) -> float:
    a_arr, _ = residue_table(D, a_max, True)
    return math.fsum((a_arr.astype(float) ** (-s)).tolist())


def primitive_zagier_tail(D: Union[int, Discriminant], s: float, a_max: int) -> float:
    disc = as_discriminant(D)
    return max(primitive_zagier_zeta(disc, s) - partial_primitive_zagier_zeta(disc.D, float(s), a_max), 0.0)
