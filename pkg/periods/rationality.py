"""
Rationality of the even periods of f_{k,D}: for even k,

    r+(f_{k,D}; X) = -2 sum_{[a,b,c], a < 0 < c} (aX^2 + bX + c)^(k-1)   mod (X^(2k-2) - 1).

The sign is tied to f* being the xi-preimage of f (see modeval.eichler):
with that normalisation P_{C0} = c_inf - 2^(2-2k) D^(1/2-k) r+ + C (X^(2k-2) - 1),
so r+ meets the rational sum with a minus sign. rational_rhs keeps the
positive sum and the residual is taken of r+ + rational_rhs.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from config.models import EvalParams
from core.arithmetic import as_discriminant
from core.errors import DomainError
from core.polynomials import CPoly, poly_mod_reduce, poly_sum
from modeval.evaluators import DiscLike, check_weight
from modeval.fourier import DEFAULT_HEIGHT, CoeffSeries
from periods.polynomials import PeriodSet, even_period_error, even_period_poly, periods
from qforms.enumeration import forms_a_neg_c_pos

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RationalityResult:
    """Outcome of comparing r+ with the rational sum modulo X^(2k-2) - 1."""
    k: int
    D: int
    residual: float
    fitted_constant: float
    budget: float
    rhs: CPoly
    r_plus: CPoly

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "D": self.D,
            "residual": self.residual,
            "fitted_constant": self.fitted_constant,
            "error_estimate": self.budget,
            "rational_rhs": [int(c) for c in self.rhs.coeffs],
        }


def _require_even(k: int) -> None:
    check_weight(k)
    if k % 2:
        raise DomainError(f"the rationality congruence needs even k, got {k}")


def rational_rhs(k: int, D: DiscLike) -> CPoly:
    """2 sum_{a<0<c} Q(X,1)^(k-1), with exact integer coefficients."""
    _require_even(k)
    return poly_sum(CPoly.from_quadratic(*Q) ** (k - 1) for Q in forms_a_neg_c_pos(D)).scale(2)


def rationality_residual(k: int, D: DiscLike, period_set: PeriodSet) -> RationalityResult:
    """Reduce r+ + rational_rhs modulo X^(2k-2) - 1 and measure what is left."""
    _require_even(k)
    rhs = rational_rhs(k, D)
    r_plus = even_period_poly(period_set)
    reduced, constant = poly_mod_reduce(r_plus + rhs, k)
    residual = reduced.max_abs_coeff()
    budget = 2.0 * even_period_error(period_set)
    return RationalityResult(k, as_discriminant(D).D, float(residual), float(complex(constant).real), budget, rhs, r_plus)


def check_rationality(
    k: int,
    D: DiscLike,
    params: EvalParams,
    m_max: int = 4,
    y: float = DEFAULT_HEIGHT,
    series: Optional[CoeffSeries] = None,
) -> Tuple[float, float]:
    """
    (residual, fitted_constant) of the congruence for f_{k,D}.

    The residual is the largest coefficient of (r+ + rational_rhs) after
    removing the multiple of X^(2k-2) - 1; the fitted constant is that multiple.
    """
    result = check_rationality_detailed(k, D, params, m_max, y, series)
    return result.residual, result.fitted_constant


def check_rationality_detailed(
    k: int,
    D: DiscLike,
    params: EvalParams,
    m_max: int = 4,
    y: float = DEFAULT_HEIGHT,
    series: Optional[CoeffSeries] = None,
) -> RationalityResult:
    _require_even(k)
    period_set = periods(k, D, params, m_max=m_max, y=y, series=series)
    result = rationality_residual(k, D, period_set)
    logger.info(
        f"rationality k={k} D={result.D}: residual {result.residual:.3g}, "
        f"constant {result.fitted_constant:.6g}, budget {result.budget:.3g}"
    )
    return result
