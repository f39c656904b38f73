"""
Hecke operators on translation-invariant evaluators.

For an evaluator e of weight kappa and a prime p,

    (e | T_p)(tau) = p^(kappa-1) e(p tau) + p^(-1) sum_{r mod p} e((tau + r)/p),

which is p^(1-2k) e(p tau) + ... in weight 2-2k and p^(2k-1) e(p tau) + ...
in weight 2k.
"""

import logging
from dataclasses import dataclass
from typing import Callable, List

from sympy import isprime

from config.models import EvalParams
from core.errors import DomainError
from core.types import Point
from modeval.evaluators import Evaluation
from utils.parallel import ordered_map

logger = logging.getLogger(__name__)

EvalFn = Callable[[Point, EvalParams], Evaluation]


@dataclass(frozen=True)
class Evaluator:
    """A T-invariant function of tau together with its weight."""
    fn: EvalFn
    weight: int
    label: str = "e"

    def __call__(self, tau: Point, params: EvalParams) -> Evaluation:
        return self.fn(tau, params)

    @classmethod
    def constant(cls, value: complex, weight: int, label: str = "const") -> "Evaluator":
        return cls(lambda tau, params: Evaluation(complex(value), 0.0), weight, label)

    def __add__(self, other: "Evaluator") -> "Evaluator":
        if self.weight != other.weight:
            raise DomainError("cannot add evaluators of different weights")

        def fn(tau: Point, params: EvalParams) -> Evaluation:
            u, v = self(tau, params), other(tau, params)
            return Evaluation(u.value + v.value, u.tail + v.tail)

        return Evaluator(fn, self.weight, f"({self.label} + {other.label})")

    def scaled(self, factor: complex) -> "Evaluator":
        return Evaluator(lambda tau, params: self(tau, params).scaled(factor), self.weight, f"{factor}*{self.label}")


def check_prime(p: int) -> None:
    if isinstance(p, bool) or not isinstance(p, int) or not isprime(p):
        raise DomainError(f"p must be a prime, got {p!r}")


def hecke_points(p: int, tau: Point) -> List[Point]:
    """p tau followed by (tau + r)/p for r = 0..p-1."""
    return [Point(p * tau.x, p * tau.y)] + [Point((tau.x + r) / p, tau.y / p) for r in range(p)]


def hecke_Tp(e: Evaluator, p: int, tau: Point, params: EvalParams) -> Evaluation:
    """
    Apply T_p to e at tau.

    The p + 1 evaluations run on the worker pool; their tails combine with
    the absolute values of the weights.

    Raises:
        DomainError: If p is not prime
    """
    check_prime(p)
    points = hecke_points(p, tau)
    values = ordered_map(lambda pt: e(pt, params), points)
    weights = [float(p) ** (e.weight - 1)] + [1.0 / p] * p
    value = sum((w * v.value for w, v in zip(weights, values)), 0j)
    tail = sum(w * v.tail for w, v in zip(weights, values))
    logger.debug(f"T_{p} {e.label} at {tau}: {value:.10g}")
    return Evaluation(value, tail)
