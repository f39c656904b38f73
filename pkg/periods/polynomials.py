"""
Period integrals of a cusp form f = sum a_m q^m of weight 2k,

    r_n(f) = integral_0^inf f(it) t^n dt,   0 <= n <= 2k-2,

and the even part of its period polynomial.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np
from scipy import integrate

from config.models import EvalParams
from core.errors import BudgetInfeasibleError, DomainError
from core.polynomials import CPoly
from modeval.evaluators import DiscLike, check_weight
from modeval.fourier import DEFAULT_HEIGHT, CoeffSeries, fourier_coeffs
from special.functions import upper_incomplete_gamma

logger = logging.getLogger(__name__)

# omitted coefficients a_m, m > m_max, are extrapolated over this many terms
_EXTRAPOLATED_TERMS = 40


@dataclass(frozen=True)
class PeriodSet:
    """Periods r_0..r_{2k-2} with per-entry error estimates."""
    k: int
    r: Tuple[float, ...]
    errors: Tuple[float, ...] = field(default=())
    imag: Tuple[float, ...] = field(default=())

    def __post_init__(self):
        size = 2 * self.k - 1
        if len(self.r) != size:
            raise DomainError(f"a PeriodSet for k={self.k} needs {size} entries, got {len(self.r)}")
        if not self.errors:
            object.__setattr__(self, "errors", (0.0,) * size)
        if not self.imag:
            object.__setattr__(self, "imag", (0.0,) * size)

    @classmethod
    def zero(cls, k: int) -> "PeriodSet":
        return cls(k, (0.0,) * (2 * k - 1))

    @property
    def max_error(self) -> float:
        return max(self.errors)

    def scaled(self, factor: float) -> "PeriodSet":
        return PeriodSet(
            self.k,
            tuple(factor * v for v in self.r),
            tuple(abs(factor) * e for e in self.errors),
            tuple(factor * v for v in self.imag),
        )

    def to_dict(self) -> dict:
        return {"k": self.k, "r": list(self.r), "errors": list(self.errors), "imag": list(self.imag)}


def _folded_exponents(k: int, n: int) -> Tuple[int, int]:
    return n, 2 * k - 2 - n


def _gamma_moments(m: np.ndarray, power: int) -> np.ndarray:
    """integral_1^inf e^(-2 pi m t) t^power dt = Gamma(power+1, 2 pi m)/(2 pi m)^(power+1)."""
    x = 2 * math.pi * m
    return upper_incomplete_gamma(power + 1, x) / x ** (power + 1)


def _folded_moments(k: int, n: int, m: np.ndarray) -> np.ndarray:
    p, q = _folded_exponents(k, n)
    return _gamma_moments(m, p) + (-1) ** k * _gamma_moments(m, q)


def _period_quadrature(series: CoeffSeries, n: int, params: EvalParams) -> Tuple[complex, float]:
    """Adaptive quadrature of the folded integral over [1, inf)."""
    k = series.k
    m = np.arange(1, series.m_max + 1, dtype=float)
    coeffs = series.coefficient_array()
    p, q = _folded_exponents(k, n)
    sign = (-1) ** k

    def integrand(t: float) -> complex:
        return complex(np.sum(coeffs * np.exp(-2 * math.pi * m * t))) * (t ** p + sign * t ** q)

    limit = max(params.quad_points, 50)
    re, re_err = integrate.quad(lambda t: integrand(t).real, 1.0, np.inf, limit=limit, epsabs=1e-15, epsrel=1e-12)
    im, im_err = integrate.quad(lambda t: integrand(t).imag, 1.0, np.inf, limit=limit, epsabs=1e-15, epsrel=1e-12)
    return complex(re, im), re_err + im_err


def _period_gamma(series: CoeffSeries, n: int) -> complex:
    m = np.arange(1, series.m_max + 1, dtype=float)
    return complex(np.sum(series.coefficient_array() * _folded_moments(series.k, n, m)))


def _propagated_error(series: CoeffSeries, n: int) -> float:
    """Coefficient errors carried through the moments plus the omitted-coefficient tail."""
    k = series.k
    m = np.arange(1, series.m_max + 1, dtype=float)
    carried = float(np.sum(series.error_array() * np.abs(_folded_moments(k, n, m))))
    extra = np.arange(series.m_max + 1, series.m_max + 1 + _EXTRAPOLATED_TERMS, dtype=float)
    omitted = series.growth_constant() * float(np.sum(extra ** k * np.abs(_folded_moments(k, n, extra))))
    return carried + omitted


def periods_from_series(series: CoeffSeries, params: EvalParams, method: str = "quadrature") -> PeriodSet:
    """
    Periods r_0..r_{2k-2} of the cusp form with the given coefficients.

    The integral over (0, 1) is folded onto (1, inf) by f(i/t) = (-1)^k t^(2k) f(it):

        r_n = integral_1^inf f(it) (t^n + (-1)^k t^(2k-2-n)) dt.

    Args:
        series: Fourier coefficients of f
        params: quad_points caps the quadrature subdivisions
        method: "quadrature" (adaptive, primary) or "gamma" (incomplete-gamma closed form)

    Raises:
        DomainError: For an unknown method
    """
    if method not in ("quadrature", "gamma"):
        raise DomainError(f"unknown period method {method!r}")
    k = series.k
    values, errors = [], []
    for n in range(2 * k - 1):
        if method == "quadrature":
            value, quad_err = _period_quadrature(series, n, params)
        else:
            value, quad_err = _period_gamma(series, n), 0.0
        values.append(value)
        errors.append(quad_err + _propagated_error(series, n))
    return PeriodSet(
        k,
        tuple(v.real for v in values),
        tuple(errors),
        tuple(v.imag for v in values),
    )


def periods(
    k: int,
    D: DiscLike,
    params: EvalParams,
    m_max: int = 4,
    y: float = DEFAULT_HEIGHT,
    method: str = "quadrature",
    series: Optional[CoeffSeries] = None,
) -> PeriodSet:
    """
    Periods of f_{k,D}, from coefficients extracted at height y.

    Raises:
        BudgetInfeasibleError: If the coefficients cannot be extracted within the budget
    """
    check_weight(k)
    if series is None:
        series = fourier_coeffs(k, D, m_max, y, params)
    result = periods_from_series(series, params, method)
    logger.info(f"periods k={k} D={D}: max error {result.max_error:.3g}")
    return result


def even_period_poly(p: PeriodSet) -> CPoly:
    """r+(f; X) = sum_{n even} (-1)^(n/2) binomial(2k-2, n) r_n X^(2k-2-n)."""
    top = 2 * p.k - 2
    coeffs = [0.0] * (top + 1)
    for n in range(0, top + 1, 2):
        coeffs[top - n] = (-1) ** (n // 2) * math.comb(top, n) * p.r[n]
    return CPoly(tuple(coeffs))


def even_period_error(p: PeriodSet) -> float:
    """Largest coefficient error of even_period_poly(p)."""
    top = 2 * p.k - 2
    return max(math.comb(top, n) * p.errors[n] for n in range(0, top + 1, 2))
