"""
Elementary arithmetic on integers: the Kronecker symbol, Moebius and divisor
functions, splitting D = delta * f**2 and the Pell equation t**2 - D u**2 = 4.

Factorisation and Jacobi symbols come from sympy; results that are reused in
inner loops are memoised with lru_cache.
"""

import logging
import math
from functools import lru_cache
from typing import Union

from sympy import divisors, factorint, jacobi_symbol
from sympy.solvers.diophantine.diophantine import diop_DN

from core.errors import DomainError
from core.types import Discriminant, PellSolution

logger = logging.getLogger(__name__)

# Brute-force search bound for the Pell solver before handing over to sympy
PELL_SEARCH_LIMIT = 100_000


def _kronecker_two(a: int) -> int:
    if a % 2 == 0:
        return 0
    return 1 if a % 8 in (1, 7) else -1


@lru_cache(maxsize=65536)
def kronecker(delta: int, n: int) -> int:
    """
    Kronecker symbol (delta / n).

    Odd parts go through the Jacobi symbol; the factor 2 uses the
    supplementary law and negative n the sign character.
    """
    if n == 0:
        return 1 if abs(delta) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if delta < 0:
            result = -result
    while n % 2 == 0:
        n //= 2
        result *= _kronecker_two(delta)
        if result == 0:
            return 0
    if n == 1:
        return result
    return result * int(jacobi_symbol(delta % n, n))


@lru_cache(maxsize=4096)
def moebius(n: int) -> int:
    if n < 1:
        raise DomainError(f"moebius needs n >= 1, got {n}")
    exponents = factorint(n).values()
    if any(e > 1 for e in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


def sigma(s: float, n: int) -> Union[int, float]:
    """
    Divisor power sum sum_{d | n} d**s.

    Exact integer for non-negative integer s, float otherwise.
    """
    if n < 1:
        raise DomainError(f"sigma needs n >= 1, got {n}")
    ds = divisors(n)
    if float(s).is_integer() and s >= 0:
        return sum(int(d) ** int(s) for d in ds)
    return math.fsum(float(d) ** s for d in ds)


def is_discriminant(D: int) -> bool:
    """True for positive non-square integers congruent to 0 or 1 mod 4."""
    if not isinstance(D, int) or D <= 0 or D % 4 not in (0, 1):
        return False
    r = math.isqrt(D)
    return r * r != D


@lru_cache(maxsize=1024)
def fundamental_factor(D: int) -> Discriminant:
    """
    Split D = delta * f**2 with delta a fundamental discriminant.

    Args:
        D: Positive non-square discriminant

    Returns:
        Discriminant(D, delta, f)

    Raises:
        DomainError: If D is not positive, is a square, or is 2, 3 mod 4
    """
    if not is_discriminant(D):
        raise DomainError(f"{D} is not a positive non-square discriminant")
    f0 = 1
    for p, e in factorint(D).items():
        f0 *= p ** (e // 2)
    core_part = D // (f0 * f0)
    if core_part % 4 == 1:
        return Discriminant(D, core_part, f0)
    # core_part is 2 or 3 mod 4, so the square part carries a factor 2
    return Discriminant(D, 4 * core_part, f0 // 2)


def as_discriminant(D: Union[int, Discriminant]) -> Discriminant:
    """Accept either a raw integer or an already split Discriminant."""
    if isinstance(D, Discriminant):
        return D
    if isinstance(D, bool) or not isinstance(D, int):
        raise DomainError(f"discriminant must be an integer, got {D!r}")
    return fundamental_factor(D)


@lru_cache(maxsize=1024)
def _pell(D: int) -> PellSolution:
    for u in range(1, PELL_SEARCH_LIMIT + 1):
        t2 = D * u * u + 4
        t = math.isqrt(t2)
        if t * t == t2:
            return PellSolution(t, u)

    logger.debug(f"Pell search for D={D} exceeded {PELL_SEARCH_LIMIT}, using sympy diop_DN")
    candidates = []
    for N in (4, 1):
        scale = 2 if N == 1 else 1
        for x, y in diop_DN(D, N):
            if y != 0:
                candidates.append((abs(int(y)) * scale, abs(int(x)) * scale))
    u, t = min(candidates)
    return PellSolution(t, u)


def pell_fundamental(D: Union[int, Discriminant]) -> PellSolution:
    """Minimal positive solution (t, u) of t**2 - D u**2 = 4."""
    disc = as_discriminant(D)
    return _pell(disc.D)
