"""
The integral of one pair's harmonic summand along a horizontal line:

    I_{a,D,k}(y) = integral_R sgn(g) Q(u,1)^(k-1) psi(D y^2/|Q(u,1)|^2) dw,
    Q(u,1) = a u^2 - D/4a,  u = w + iy,

which for y > sqrt(D)/2a does not depend on y and equals
(-1)^(k+1) D^(k-1/2) pi / (a^k 2^(2k-2) (2k-1)). This is the constant term
that every pair with large a contributes to F.
"""

import logging
import math
from typing import Tuple

from scipy import integrate

from core.errors import BudgetInfeasibleError, DomainError
from modeval.evaluators import DiscLike, check_weight
from modeval.kernels import poisson_constant
from core.arithmetic import as_discriminant
from special.functions import psi

logger = logging.getLogger(__name__)

# relative quadrature error above which the check is reported infeasible
IVAL_MAX_RELATIVE_ERROR = 1e-7


def ival_closed_form(a: int, D: DiscLike, k: int) -> float:
    check_weight(k)
    if a < 1:
        raise DomainError("a must be a positive integer")
    return poisson_constant(k, as_discriminant(D).D) / a ** k


def ival_quadrature(a: int, D: DiscLike, k: int, y: float, quad_points: int = 200) -> Tuple[float, float]:
    """
    Adaptive quadrature of I_{a,D,k}(y) with the leading algebraic tail added.

    The summand at -w is the conjugate of the summand at w, so the integral is
    twice the real part over [0, W]. Beyond W the summand behaves like
    (sqrt(D) y)^(2k-1) (a w^2)^(-k) / (2k-1).

    Returns:
        (value, error estimate)

    Raises:
        DomainError: If y <= sqrt(D)/2a (the line meets the circle)
        BudgetInfeasibleError: If the quadrature error estimate is too large
    """
    check_weight(k)
    D = as_discriminant(D).D
    if y <= math.sqrt(D) / (2 * a):
        raise DomainError(f"y={y:g} must exceed sqrt(D)/2a = {math.sqrt(D) / (2 * a):g}")

    def integrand(w: float) -> float:
        u = complex(w, y)
        Q = a * u * u - D / (4.0 * a)
        g = a * abs(u) ** 2 - D / (4.0 * a)
        t = D * y * y / abs(Q) ** 2
        return (math.copysign(1.0, g) * Q ** (k - 1) * psi(t, k)).real

    W = max(200.0, 50.0 * y)
    breaks = [y, 4 * y, 16 * y]
    body, abserr = integrate.quad(
        integrand, 0.0, W, points=[b for b in breaks if b < W],
        limit=max(quad_points, 50), epsabs=0.0, epsrel=1e-12,
    )
    leading = (math.sqrt(D) * y) ** (2 * k - 1) * a ** (-k) * W ** (1 - 2 * k) / (2 * k - 1) ** 2
    value = 2.0 * (body + leading)
    # the next asymptotic order is smaller by about k (y^2 + D/a^2)/W^2
    error = 2.0 * abserr + 2.0 * leading * k * (y * y + D / a ** 2) / W ** 2
    if error > IVAL_MAX_RELATIVE_ERROR * abs(value):
        raise BudgetInfeasibleError(f"I-integral quadrature error {error:.3g} too large at y={y:g}")
    logger.debug(f"I_(a={a},D={D},k={k})(y={y:g}) = {value:.12g} +/- {error:.2g}")
    return value, error


def ival_check(a: int, D: DiscLike, k: int, y: float, quad_points: int = 200) -> Tuple[float, float]:
    """(quadrature, closed_form) for I_{a,D,k}(y)."""
    value, _ = ival_quadrature(a, D, k, y, quad_points)
    return value, ival_closed_form(a, D, k)
