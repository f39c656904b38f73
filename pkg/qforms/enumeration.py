"""
Enumeration of forms of discriminant D in the (a, b mod 2a, n) parametrisation.

Every form [a, b, c] with a > 0 is written uniquely as b = b0 + 2an with
0 <= b0 < 2a a square root of D modulo 4a. The residue tables built here feed
the vectorised lattice sums in modeval.
"""

import logging
import math
from functools import lru_cache
from typing import Iterator, List, Tuple, Union

import numpy as np
from sympy import divisors

from config.models import EvalParams
from core.arithmetic import as_discriminant, kronecker
from core.types import Discriminant
from qforms.forms import QForm

logger = logging.getLogger(__name__)


@lru_cache(maxsize=65536)
def residues(D: int, a: int) -> Tuple[int, ...]:
    """All b0 in [0, 2a) with b0^2 = D mod 4a."""
    b = np.arange(2 * a, dtype=np.int64)
    mask = (b * b - D) % (4 * a) == 0
    return tuple(int(v) for v in b[mask])


@lru_cache(maxsize=64)
def residue_table(D: int, a_max: int, primitive: bool = False) -> Tuple[np.ndarray, np.ndarray]:
    """
    Arrays (a, b0) of every residue pair with 1 <= a <= a_max, ordered by (a, b0).

    With primitive=True only pairs whose forms have gcd(a, b, c) = 1 are kept;
    this property does not depend on the translate n.
    """
    a_list: List[int] = []
    b_list: List[int] = []
    for a in range(1, a_max + 1):
        for b0 in residues(D, a):
            if primitive:
                c = (b0 * b0 - D) // (4 * a)
                if math.gcd(math.gcd(a, b0), c) != 1:
                    continue
            a_list.append(a)
            b_list.append(b0)
    a_arr = np.asarray(a_list, dtype=np.int64)
    b_arr = np.asarray(b_list, dtype=np.int64)
    a_arr.setflags(write=False)
    b_arr.setflags(write=False)
    return a_arr, b_arr


@lru_cache(maxsize=256)
def _local_root_count(D: int, p: int, e: int) -> int:
    """#{x mod p^e : x^2 = D mod p^e} for a prime p dividing 2D."""
    m = p ** e
    x = np.arange(m, dtype=np.int64)
    return int(np.count_nonzero((x * x - D) % m == 0))


def _smallest_prime_factors(n: int) -> np.ndarray:
    spf = np.zeros(n + 1, dtype=np.int64)
    for p in range(2, math.isqrt(n) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    idx = np.nonzero(spf == 0)[0]
    spf[idx] = idx
    return spf


@lru_cache(maxsize=16)
def residue_counts(D: int, a_max: int) -> np.ndarray:
    """
    N(a) = #{b mod 2a : b^2 = D mod 4a} for a = 1..a_max (index 0 unused).

    N(a) is half the number of square roots of D modulo 4a, and that count is
    multiplicative over prime powers. For p not dividing 2D it is 1 + (D/p).
    """
    spf = _smallest_prime_factors(4 * a_max)
    counts = np.zeros(a_max + 1, dtype=np.int64)
    two_d = 2 * D
    for a in range(1, a_max + 1):
        m = 4 * a
        total = 1
        while m > 1 and total:
            p = int(spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            if two_d % p == 0:
                total *= _local_root_count(D, p, e)
            else:
                total *= 1 + kronecker(D, p)
        counts[a] = total // 2
    counts.setflags(write=False)
    return counts


def residue_count(D: Union[int, Discriminant], a: int) -> int:
    """N(a) for a single a; agrees with len(residues(D, a))."""
    return int(residue_counts(as_discriminant(D).D, a)[a])


def forms_truncated(
    D: Union[int, Discriminant],
    params: EvalParams,
    primitive: bool = False,
) -> Iterator[QForm]:
    """
    Yield [a, b0 + 2an, .] and its negative for 1 <= a <= a_max, |n| <= n_max.

    Ordered by (a, b0, n); each form is followed by its negative.
    """
    disc = as_discriminant(D)
    a_arr, b_arr = residue_table(disc.D, params.a_max, primitive)
    for a, b0 in zip(a_arr.tolist(), b_arr.tolist()):
        for n in range(-params.n_max, params.n_max + 1):
            Q = QForm.from_ab(disc.D, a, b0 + 2 * a * n)
            yield Q
            yield -Q


def forms_a_neg_c_pos(D: Union[int, Discriminant]) -> List[QForm]:
    """All [a, b, c] of discriminant D with a < 0 < c, sorted."""
    disc = as_discriminant(D)
    D = disc.D
    s = math.isqrt(D)
    out = []
    for b in range(-s, s + 1):
        if (b - D) % 2:
            continue
        m = (D - b * b) // 4
        for d in divisors(m):
            out.append(QForm(-int(d), b, m // int(d)))
    return sorted(out)


