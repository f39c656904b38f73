"""
Truncated evaluation of the cusp forms f_{k,D}, f_{k,D,A} and the locally
harmonic forms F_{1-k,D}, F_{1-k,D,A}, F'_{1-k,D}.

    f_{k,D}     = D^(k-1/2) / (C pi)          sum_Q Q(tau,1)^(-k)
    F_{1-k,D}   = D^(1/2-k) / (C pi)          sum_Q sgn(g_Q) Q(tau,1)^(k-1) psi(D y^2/|Q(tau,1)|^2)
    F'_{1-k,D}  = D^((1-k)/2) / (C pi)        same sum over primitive Q only

with C = binomial(2k-2, k-1). The class versions carry an extra (-1)^k and
run over Q in A only.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Union

from config.models import EvalParams
from core.arithmetic import as_discriminant
from core.errors import DomainError
from core.types import Discriminant, Point
from modeval.kernels import (
    PairTable,
    SumKind,
    a_tail_estimate,
    class_table,
    full_table,
    lattice_sum,
    poisson_constant,
)
from qforms.reduction import NarrowClass
from special.series import primitive_zagier_tail, zagier_tail

logger = logging.getLogger(__name__)

DiscLike = Union[int, Discriminant]


@dataclass(frozen=True)
class Evaluation:
    """A value together with its estimated truncation error."""
    value: complex
    tail: float
    a_tail: float = 0.0
    window_tail: float = 0.0
    pairs: int = 0

    def __complex__(self) -> complex:
        return self.value

    @property
    def real(self) -> float:
        return self.value.real

    @property
    def imag(self) -> float:
        return self.value.imag

    @property
    def rounding(self) -> float:
        """Part of the tail that is floating-point noise rather than truncation."""
        return max(self.tail - self.a_tail - self.window_tail, 0.0)

    def scaled(self, factor: complex) -> "Evaluation":
        return Evaluation(
            self.value * factor, self.tail * abs(factor),
            self.a_tail * abs(factor), self.window_tail * abs(factor), self.pairs,
        )

    def to_dict(self) -> dict:
        return {
            "value_re": self.value.real,
            "value_im": self.value.imag,
            "tail_estimate": self.tail,
        }


ZERO = Evaluation(0j, 0.0)


def check_weight(k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int) or k < 2:
        raise DomainError(f"k must be an integer >= 2, got {k!r}")


def central_binomial(k: int) -> int:
    return math.comb(2 * k - 2, k - 1)


def _as_point(tau: Union[Point, complex]) -> Point:
    return tau if isinstance(tau, Point) else Point.from_complex(complex(tau))


def _assemble(
    kind: SumKind,
    k: int,
    D: int,
    table: PairTable,
    tau: Point,
    params: EvalParams,
    prefactor: float,
    count_tail: float,
    completion: float,
    anchor: Optional[float],
) -> Evaluation:
    ls = lattice_sum(kind, k, D, table, tau, params, anchor)
    a_tail = a_tail_estimate(
        kind, k, D, tau.y, params.a_max, count_tail, table.max_weight,
        completed=completion != 0.0,
    )
    pref = abs(prefactor)
    value = prefactor * (ls.value + completion)
    return Evaluation(
        value=value,
        tail=pref * (a_tail + ls.window_tail + ls.rounding),
        a_tail=pref * a_tail,
        window_tail=pref * ls.window_tail,
        pairs=ls.pairs,
    )


def eval_F(
    k: int,
    D: DiscLike,
    tau: Union[Point, complex],
    params: EvalParams,
    complete: bool = True,
    anchor: Optional[float] = None,
) -> Evaluation:
    """
    F_{1-k,D}(tau), truncated at a_max with a translate window of half-width n_max.

    With complete=True the pairs with a > a_max are replaced by their exact
    Fourier constant term, leaving an error that decays like e^(-pi y).
    On-wall points are legal; their value is the average of the two sides.
    """
    check_weight(k)
    disc = as_discriminant(D)
    tau = _as_point(tau)
    table = full_table(disc.D, params.a_max, k)
    if table.size == 0:
        return ZERO
    count_tail = zagier_tail(disc, k, params.a_max)
    completion = table.max_weight * poisson_constant(k, disc.D) * count_tail if complete else 0.0
    prefactor = disc.D ** (0.5 - k) / (central_binomial(k) * math.pi)
    return _assemble(SumKind.HARMONIC, k, disc.D, table, tau, params, prefactor, count_tail, completion, anchor)


def eval_F_primitive(
    k: int,
    D: DiscLike,
    tau: Union[Point, complex],
    params: EvalParams,
    complete: bool = True,
    anchor: Optional[float] = None,
) -> Evaluation:
    """F'_{1-k,D}(tau): the harmonic sum over primitive forms only."""
    check_weight(k)
    disc = as_discriminant(D)
    tau = _as_point(tau)
    table = full_table(disc.D, params.a_max, k, primitive=True)
    if table.size == 0:
        return ZERO
    count_tail = primitive_zagier_tail(disc, k, params.a_max)
    completion = table.max_weight * poisson_constant(k, disc.D) * count_tail if complete else 0.0
    prefactor = disc.D ** ((1 - k) / 2) / (central_binomial(k) * math.pi)
    return _assemble(SumKind.HARMONIC, k, disc.D, table, tau, params, prefactor, count_tail, completion, anchor)


def eval_FA(
    k: int,
    A: NarrowClass,
    tau: Union[Point, complex],
    params: EvalParams,
    anchor: Optional[float] = None,
) -> Evaluation:
    """F_{1-k,D,A}(tau); summing (-1)^k eval_FA over all classes gives eval_F."""
    check_weight(k)
    tau = _as_point(tau)
    D = A.D
    table = class_table(A, k, params.a_max)
    if table.size == 0:
        return ZERO
    count_tail = zagier_tail(D, k, params.a_max)
    prefactor = (-1) ** k * D ** (0.5 - k) / (central_binomial(k) * math.pi)
    return _assemble(SumKind.HARMONIC, k, D, table, tau, params, prefactor, count_tail, 0.0, anchor)


def eval_fkD(
    k: int,
    D: DiscLike,
    tau: Union[Point, complex],
    params: EvalParams,
    anchor: Optional[float] = None,
) -> Evaluation:
    """f_{k,D}(tau); identically zero for odd k."""
    check_weight(k)
    disc = as_discriminant(D)
    tau = _as_point(tau)
    table = full_table(disc.D, params.a_max, k)
    if table.size == 0:
        return ZERO
    count_tail = zagier_tail(disc, k, params.a_max)
    prefactor = disc.D ** (k - 0.5) / (central_binomial(k) * math.pi)
    return _assemble(SumKind.CUSP, k, disc.D, table, tau, params, prefactor, count_tail, 0.0, anchor)


def eval_fkDA(
    k: int,
    A: NarrowClass,
    tau: Union[Point, complex],
    params: EvalParams,
    anchor: Optional[float] = None,
) -> Evaluation:
    """f_{k,D,A}(tau), the class-restricted cusp form with prefactor (-1)^k."""
    check_weight(k)
    tau = _as_point(tau)
    D = A.D
    table = class_table(A, k, params.a_max)
    if table.size == 0:
        return ZERO
    count_tail = zagier_tail(D, k, params.a_max)
    prefactor = (-1) ** k * D ** (k - 0.5) / (central_binomial(k) * math.pi)
    return _assemble(SumKind.CUSP, k, D, table, tau, params, prefactor, count_tail, 0.0, anchor)
