"""
q-series evaluation of a cusp form from its coefficients, and its two
Eichler integrals:

    E_f(tau) = sum a_n n^(1-2k) q^n
    f*(tau)  = -(4 pi)^(1-2k) sum conj(a_n) n^(1-2k) Gamma(2k-1, 4 pi n y) q^(-n)
             = (-2i)^(1-2k) integral_{-conj(tau)}^{i inf} f^c(z) (z + tau)^(2k-2) dz,

with f^c(z) = conj(f(-conj z)). This normalisation makes xi_{2-2k} f* = f.
Along z = -x + i(y + t) the integral becomes
-2^(1-2k) integral_0^inf f^c(-x + i(y+t)) (2y + t)^(2k-2) dt.
"""

import logging
import math
from typing import Callable

import numpy as np
from scipy import integrate

from config.models import EvalParams
from core.errors import BudgetInfeasibleError, DomainError
from core.types import Point
from modeval.evaluators import Evaluation
from modeval.fourier import CoeffSeries
from special.functions import upper_incomplete_gamma

logger = logging.getLogger(__name__)

# omitted coefficients a_n, n > m_max, are extrapolated over this many terms
_EXTRAPOLATED_TERMS = 40


def _omitted_tail(series: CoeffSeries, term_size: Callable[[np.ndarray], np.ndarray]) -> float:
    """Estimated size of the terms n > m_max assuming |a_n| <= A n^k."""
    A = series.growth_constant()
    n = np.arange(series.m_max + 1, series.m_max + 1 + _EXTRAPOLATED_TERMS, dtype=float)
    return float(A * np.sum(n ** series.k * term_size(n)))


def cusp_value(series: CoeffSeries, tau: Point) -> Evaluation:
    """f(tau) = sum a_n q^n."""
    n = np.arange(1, series.m_max + 1, dtype=float)
    qn = np.exp(2j * math.pi * n * tau.tau)
    value = complex(np.sum(series.coefficient_array() * qn))
    q_abs = lambda nn: np.exp(-2 * math.pi * nn * tau.y)
    error = float(np.sum(series.error_array() * np.abs(qn))) + _omitted_tail(series, q_abs)
    return Evaluation(value, error)


def eichler_holo(series: CoeffSeries, tau: Point) -> Evaluation:
    """Holomorphic Eichler integral sum a_n n^(1-2k) q^n."""
    k = series.k
    n = np.arange(1, series.m_max + 1, dtype=float)
    weights = n ** (1 - 2 * k) * np.exp(2j * math.pi * n * tau.tau)
    value = complex(np.sum(series.coefficient_array() * weights))
    size = lambda nn: nn ** (1 - 2 * k) * np.exp(-2 * math.pi * nn * tau.y)
    error = float(np.sum(series.error_array() * np.abs(weights))) + _omitted_tail(series, size)
    return Evaluation(value, error)


def _nonholo_weights(k: int, n: np.ndarray, tau: Point) -> np.ndarray:
    """-(4 pi)^(1-2k) n^(1-2k) Gamma(2k-1, 4 pi n y) q^(-n), the factor multiplying conj(a_n)."""
    gamma = upper_incomplete_gamma(2 * k - 1, 4 * math.pi * n * tau.y)
    q_inv = np.exp(-2j * math.pi * n * tau.tau)
    return -((4 * math.pi) ** (1 - 2 * k)) * n ** (1 - 2 * k) * gamma * q_inv


def _eichler_nonholo_series(series: CoeffSeries, tau: Point) -> Evaluation:
    k = series.k
    n = np.arange(1, series.m_max + 1, dtype=float)
    weights = _nonholo_weights(k, n, tau)
    value = complex(np.sum(np.conj(series.coefficient_array()) * weights))
    size = lambda nn: np.abs(_nonholo_weights(k, nn, tau))
    error = float(np.sum(series.error_array() * np.abs(weights))) + _omitted_tail(series, size)
    return Evaluation(value, error)


def _eichler_nonholo_quadrature(series: CoeffSeries, tau: Point, params: EvalParams) -> Evaluation:
    k = series.k
    x, y = tau.x, tau.y
    n = np.arange(1, series.m_max + 1, dtype=float)
    conj_coeffs = np.conj(series.coefficient_array())
    phases = conj_coeffs * np.exp(-2j * math.pi * n * x)

    def integrand(t: float) -> complex:
        return complex(np.sum(phases * np.exp(-2 * math.pi * n * (y + t)))) * (2 * y + t) ** (2 * k - 2)

    t_cut = params.y_cut
    re, re_err = integrate.quad(lambda t: integrand(t).real, 0.0, t_cut, limit=params.quad_points, epsabs=0.0, epsrel=1e-12)
    im, im_err = integrate.quad(lambda t: integrand(t).imag, 0.0, t_cut, limit=params.quad_points, epsabs=0.0, epsrel=1e-12)

    scale = 2.0 ** (1 - 2 * k)
    # integral_{t_cut}^inf e^(-2 pi n (y+t)) (2y+t)^(2k-2) dt in closed form
    beyond = (
        np.exp(4 * math.pi * n * y) * (2 * math.pi * n) ** (1 - 2 * k)
        * upper_incomplete_gamma(2 * k - 1, 2 * math.pi * n * (2 * y + t_cut))
    )
    cut_tail = scale * float(np.sum(np.abs(conj_coeffs) * beyond))
    if cut_tail > params.tol:
        raise BudgetInfeasibleError(
            f"y_cut={t_cut:g} leaves an Eichler-integral tail {cut_tail:.3g} above tol={params.tol:g}"
        )

    value = -scale * complex(re, im)
    coefficient_error = float(np.sum(series.error_array() * np.abs(_nonholo_weights(k, n, tau))))
    size = lambda nn: np.abs(_nonholo_weights(k, nn, tau))
    error = scale * (re_err + im_err) + cut_tail + coefficient_error + _omitted_tail(series, size)
    return Evaluation(value, error)


def eichler_nonholo(
    series: CoeffSeries,
    tau: Point,
    params: EvalParams,
    method: str = "quadrature",
) -> Evaluation:
    """
    Non-holomorphic Eichler integral f*(tau).

    The prefactor is (-2i)^(1-2k), giving xi_{2-2k} f* = f. The sign is
    deliberate: the orientation of periods.rationality depends on it.

    Args:
        series: Coefficients of f
        tau: Evaluation point
        params: y_cut and quad_points steer the quadrature
        method: "quadrature" (vertical path integral) or "series" (incomplete gamma)

    Raises:
        BudgetInfeasibleError: If the quadrature cut-off leaves a tail above params.tol
        DomainError: For an unknown method
    """
    if method == "quadrature":
        result = _eichler_nonholo_quadrature(series, tau, params)
    elif method == "series":
        result = _eichler_nonholo_series(series, tau)
    else:
        raise DomainError(f"unknown Eichler-integral method {method!r}")
    logger.debug(f"f*({tau}) by {method}: {result.value:.10g} +/- {result.tail:.2g}")
    return result
