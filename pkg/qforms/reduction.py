"""
Reduction theory for indefinite forms: reduced forms, the neighbour step rho,
cycles and narrow (SL2(Z)) classes.

[a, b, c] is reduced iff 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b.
All tests are done in exact integer arithmetic with s = isqrt(D).
"""

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import FrozenSet, List, Tuple, Union

from sympy import divisors

from core.arithmetic import as_discriminant
from core.errors import DomainError, LochmfError
from core.types import Discriminant
from qforms.forms import QForm

logger = logging.getLogger(__name__)

MAX_REDUCTION_STEPS = 100_000


@dataclass(frozen=True)
class NarrowClass:
    """A proper equivalence class, represented by its cycle of reduced forms."""
    representative: QForm
    cycle: Tuple[QForm, ...]
    members: FrozenSet[QForm] = field(repr=False, compare=False, default=frozenset())

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.cycle))

    @property
    def D(self) -> int:
        return self.representative.disc

    def contains(self, Q: QForm) -> bool:
        """True iff Q is properly equivalent to the representative."""
        if Q.disc != self.D:
            return False
        return reduce_cycle(Q).representative == self.representative

    def negated(self) -> "NarrowClass":
        """The class of -Q for Q in this class."""
        return reduce_cycle(-self.representative)

    def __repr__(self) -> str:
        return f"NarrowClass({self.representative}, cycle length {len(self.cycle)})"


def is_reduced(Q: QForm) -> bool:
    D = Q.disc
    s = math.isqrt(D)
    twice_a = 2 * abs(Q.a)
    return 0 < Q.b <= s and twice_a + Q.b >= s + 1 and twice_a - Q.b <= s


def _normalize_r(b: int, c: int, D: int) -> int:
    """The integer r = -b mod 2|c| placed in the window that keeps rho reducing."""
    s = math.isqrt(D)
    m = 2 * abs(c)
    r = (-b) % m
    if abs(c) < math.sqrt(D):
        # s - 2|c| < r <= s
        low = s - m + 1
    else:
        # -|c| < r <= |c|
        low = -abs(c) + 1
    return low + (r - low) % m


def rho(Q: QForm) -> QForm:
    """
    Neighbour step [a, b, c] -> [c, r, (r^2 - D)/4c].

    This is Q o [[0, -1], [1, t]] with r = -b + 2ct, so it stays in the class.
    """
    D = Q.disc
    r = _normalize_r(Q.b, Q.c, D)
    return QForm(Q.c, r, (r * r - D) // (4 * Q.c))


@lru_cache(maxsize=200_000)
def reduce_cycle(Q: QForm) -> NarrowClass:
    """
    Reduce Q and return its narrow class.

    Raises:
        DomainError: If the discriminant is not a positive non-square
    """
    as_discriminant(Q.disc)
    current = Q
    steps = 0
    while not is_reduced(current):
        current = rho(current)
        steps += 1
        if steps > MAX_REDUCTION_STEPS:
            raise LochmfError(f"reduction of {Q} did not terminate")

    cycle = [current]
    nxt = rho(current)
    while nxt != cycle[0]:
        cycle.append(nxt)
        nxt = rho(nxt)
        if len(cycle) > MAX_REDUCTION_STEPS:
            raise LochmfError(f"cycle of {Q} did not close")

    start = cycle.index(min(cycle))
    ordered = tuple(cycle[start:] + cycle[:start])
    return NarrowClass(representative=ordered[0], cycle=ordered)


def equivalent(Q1: QForm, Q2: QForm) -> bool:
    """
    Proper equivalence test.

    Raises:
        DomainError: If the discriminants differ
    """
    if Q1.disc != Q2.disc:
        raise DomainError(f"discriminants differ: {Q1.disc} vs {Q2.disc}")
    return reduce_cycle(Q1).representative == reduce_cycle(Q2).representative


def reduced_forms(D: Union[int, Discriminant]) -> List[QForm]:
    """All reduced forms of discriminant D, sorted."""
    disc = as_discriminant(D)
    D = disc.D
    s = math.isqrt(D)
    out = []
    for b in range(1, s + 1):
        if (b - D) % 2:
            continue
        m = (D - b * b) // 4
        for a in divisors(m):
            for sign in (1, -1):
                Q = QForm(sign * int(a), b, -sign * (m // int(a)))
                if is_reduced(Q):
                    out.append(Q)
    return sorted(out)


@lru_cache(maxsize=256)
def _class_reps(D: int) -> Tuple[NarrowClass, ...]:
    seen = set()
    classes = []
    for Q in reduced_forms(D):
        if Q in seen:
            continue
        cls = reduce_cycle(Q)
        seen.update(cls.cycle)
        classes.append(cls)
    logger.debug(f"D={D}: {len(classes)} narrow classes")
    return tuple(sorted(classes, key=lambda c: c.representative))


def narrow_class_reps(D: Union[int, Discriminant]) -> List[NarrowClass]:
    """Complete duplicate-free list of narrow classes, ordered by representative."""
    return list(_class_reps(as_discriminant(D).D))


def r_ab(A: NarrowClass, a: int, b: int, k: int) -> int:
    """
    Multiplicity of the pair {Q, -Q}, Q = [a, b, (b^2 - D)/4a], inside class A.

    Returns 1 + (-1)^k when both lie in A, 1 when only Q does, (-1)^k when
    only -Q does, and 0 otherwise.
    """
    Q = QForm.from_ab(A.D, a, b)
    sign = -1 if k % 2 else 1
    in_pos = A.contains(Q)
    in_neg = A.contains(-Q)
    return (1 if in_pos else 0) + (sign if in_neg else 0)
