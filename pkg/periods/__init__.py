"""
Period polynomials of f_{k,D} and the rationality of their even part.

Usage:
    from periods import check_rationality, rational_rhs

    rational_rhs(2, 5)                     # -4 X^2 + 4
    residual, constant = check_rationality(6, 5, params)
"""

from periods.polynomials import (
    PeriodSet,
    periods,
    periods_from_series,
    even_period_poly,
    even_period_error,
)

from periods.rationality import (
    RationalityResult,
    rational_rhs,
    rationality_residual,
    check_rationality,
    check_rationality_detailed,
)

__all__ = [
    "PeriodSet",
    "periods",
    "periods_from_series",
    "even_period_poly",
    "even_period_error",
    "RationalityResult",
    "rational_rhs",
    "rationality_residual",
    "check_rationality",
    "check_rationality_detailed",
]
