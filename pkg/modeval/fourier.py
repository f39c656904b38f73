"""
Fourier coefficients of f_{k,D} (or f_{k,D,A}) by the orthogonality integral

    a_m = e^(2 pi m y) integral_0^1 f(x + iy) e^(-2 pi i m x) dx,

discretised with the trapezoid rule on N = quad_points equispaced samples,
which is spectrally accurate for the periodic integrand. Errors in the
samples are amplified by e^(2 pi m y); every coefficient keeps its own error.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from config.models import EvalParams
from core.errors import BudgetInfeasibleError, DomainError
from core.types import Point
from modeval.evaluators import DiscLike, check_weight, eval_fkD, eval_fkDA
from qforms.reduction import NarrowClass

logger = logging.getLogger(__name__)

DEFAULT_HEIGHT = 1.2


@dataclass(frozen=True)
class CoeffSeries:
    """Fourier coefficients a_1..a_M of a weight-2k cusp form."""
    k: int
    coeffs: Tuple[complex, ...]
    y_used: float = DEFAULT_HEIGHT
    est_error: float = 0.0
    errors: Tuple[float, ...] = field(default=())

    def __post_init__(self):
        if not self.coeffs:
            raise DomainError("a CoeffSeries needs at least one coefficient")
        if not self.errors:
            object.__setattr__(self, "errors", (self.est_error,) * len(self.coeffs))
        elif len(self.errors) != len(self.coeffs):
            raise DomainError("errors and coeffs differ in length")

    @property
    def m_max(self) -> int:
        return len(self.coeffs)

    def coefficient_array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=complex)

    def error_array(self) -> np.ndarray:
        return np.asarray(self.errors, dtype=float)

    def scaled(self, factor: complex) -> "CoeffSeries":
        return CoeffSeries(
            self.k,
            tuple(factor * c for c in self.coeffs),
            self.y_used,
            self.est_error * abs(factor),
            tuple(e * abs(factor) for e in self.errors),
        )

    @classmethod
    def zero(cls, k: int, m_max: int = 1) -> "CoeffSeries":
        return cls(k, (0j,) * m_max)

    def growth_constant(self) -> float:
        """max_m |a_m| / m^k, used to extrapolate omitted coefficients."""
        m = np.arange(1, self.m_max + 1, dtype=float)
        return float(np.max((np.abs(self.coefficient_array()) + self.error_array()) / m ** self.k))

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "y_used": self.y_used,
            "est_error": self.est_error,
            "coeffs": [[c.real, c.imag] for c in self.coeffs],
            "errors": list(self.errors),
        }


def fourier_coeffs(
    k: int,
    D: DiscLike,
    m_max: int,
    y: float = DEFAULT_HEIGHT,
    params: Optional[EvalParams] = None,
    require_budget: bool = False,
    narrow_class: Optional[NarrowClass] = None,
) -> CoeffSeries:
    """
    Extract a_1..a_{m_max} of f_{k,D} (or of f_{k,D,A} when narrow_class is given).

    Args:
        k: Weight parameter
        D: Discriminant
        m_max: Number of coefficients
        y: Height of the horizontal contour
        params: Truncation parameters; quad_points is the number of samples
        require_budget: Raise when the largest coefficient error exceeds params.tol
        narrow_class: Restrict to a class

    Returns:
        CoeffSeries with per-coefficient errors

    Raises:
        BudgetInfeasibleError: If quad_points <= 2 m_max, or require_budget and est_error > tol
    """
    check_weight(k)
    params = params or EvalParams()
    if m_max < 1:
        raise DomainError("m_max must be >= 1")
    if y <= 0:
        raise DomainError("contour height must be positive")
    N = params.quad_points
    if N <= 2 * m_max:
        raise BudgetInfeasibleError(f"quad_points={N} cannot resolve {m_max} coefficients")

    samples = np.empty(N, dtype=complex)
    sample_error = 0.0
    for j in range(N):
        tau = Point(j / N, y)
        ev = eval_fkDA(k, narrow_class, tau, params) if narrow_class else eval_fkD(k, D, tau, params)
        samples[j] = ev.value
        sample_error = max(sample_error, ev.tail)

    spectrum = np.fft.fft(samples) / N
    m = np.arange(1, m_max + 1)
    growth = np.exp(2 * math.pi * m * y)
    coeffs = spectrum[1 : m_max + 1] * growth
    # aliasing from a_{m+N} is below e^(-2 pi N y) relative and is ignored
    rounding = 4 * np.finfo(float).eps * float(np.max(np.abs(samples)))
    errors = growth * (sample_error + rounding)
    est_error = float(np.max(errors))

    series = CoeffSeries(k, tuple(complex(c) for c in coeffs), y, est_error, tuple(float(e) for e in errors))
    logger.debug(f"fourier_coeffs k={k} D={D} y={y}: a_1={series.coeffs[0]:.6g}, est_error={est_error:.3g}")
    if require_budget and est_error > params.tol:
        raise BudgetInfeasibleError(
            f"coefficient error {est_error:.3g} exceeds tol={params.tol:g} at y={y:g}, m_max={m_max}"
        )
    return series
