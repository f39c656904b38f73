"""
The constant term c_inf of F_{1-k,D} in the component containing i*infinity,
and its class version c_inf(A).

    c_inf    = -(1 + (-1)^k) / (2^(2k-2) (2k-1) C) * Z_D(k)
    c_inf(A) = -1 / (2^(2k-2) (2k-1) C) * sum_a a^(-k) sum_b r_ab(A)

with C = binomial(2k-2, k-1) and Z_D(s) = sum_a a^(-s) #{b mod 2a : b^2 = D mod 4a},
which Zagier's identity writes through zeta(s)/zeta(2s), L_Delta(s) and the
conductor factor.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from config.models import EvalParams
from core.arithmetic import as_discriminant
from modeval.evaluators import DiscLike, central_binomial, check_weight
from modeval.kernels import class_table
from qforms.reduction import NarrowClass, narrow_class_reps
from special.series import zagier_tail, zagier_zeta

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConstantTerm:
    """A constant together with its truncation error and whether it is a closed form."""
    value: float
    error: float = 0.0
    closed_form: bool = True

    def to_dict(self) -> dict:
        return {"value": self.value, "error": self.error, "closed_form": self.closed_form}


def _normaliser(k: int) -> float:
    return 2.0 ** (2 * k - 2) * (2 * k - 1) * central_binomial(k)


def c_inf_class_term(A: NarrowClass, k: int, params: Optional[EvalParams] = None) -> ConstantTerm:
    """c_inf(A) truncated at a_max, with the bound max|r_ab| sum_{a > a_max} N(a) a^(-k)."""
    check_weight(k)
    params = params or EvalParams()
    table = class_table(A, k, params.a_max)
    if table.size == 0:
        return ConstantTerm(0.0, 0.0, closed_form=False)
    total = math.fsum((table.weights * table.a.astype(float) ** (-k)).tolist())
    error = table.max_weight * zagier_tail(A.D, k, params.a_max) / _normaliser(k)
    return ConstantTerm(-total / _normaliser(k), error, closed_form=False)


def c_inf_class(A: NarrowClass, k: int, params: Optional[EvalParams] = None) -> float:
    """Constant term of F_{1-k,D,A} in the cusp component, truncated at params.a_max."""
    return c_inf_class_term(A, k, params).value


def c_inf_term(D: DiscLike, k: int, params: Optional[EvalParams] = None) -> ConstantTerm:
    """
    c_inf(D, k) with its error.

    For even k this is the closed form through Zagier's identity. For odd k the
    full constant is (-1)^k sum_A c_inf(A), which is computed numerically and
    flagged as such.
    """
    check_weight(k)
    disc = as_discriminant(D)
    if k % 2 == 0:
        value = -2.0 * zagier_zeta(disc, k) / _normaliser(k)
        return ConstantTerm(value, 0.0, closed_form=True)
    logger.warning(f"c_inf for odd k={k}, D={disc.D} is numeric only (class sum)")
    terms = [c_inf_class_term(A, k, params) for A in narrow_class_reps(disc)]
    value = -math.fsum(t.value for t in terms)
    return ConstantTerm(value, math.fsum(t.error for t in terms), closed_form=False)


def c_inf(D: DiscLike, k: int, params: Optional[EvalParams] = None) -> float:
    """Constant value of F_{1-k,D} above every wall (y > sqrt(D)/2)."""
    return c_inf_term(D, k, params).value


def c_inf_classes(D: DiscLike, k: int, params: Optional[EvalParams] = None) -> np.ndarray:
    """c_inf(A) for every narrow class, in narrow_class_reps order."""
    return np.array([c_inf_class(A, k, params) for A in narrow_class_reps(D)])
