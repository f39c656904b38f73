"""Action of SL2(Z) on the upper half-plane and the weight-k automorphy factor."""

from typing import Callable, Tuple

from core.errors import DomainError
from core.types import Mat2, Point


def cocycle(gamma: Mat2, tau: Point, weight: int) -> Tuple[Point, complex]:
    """
    Return (gamma tau, (c tau + d)**(-weight)).

    Raises:
        DomainError: If gamma does not have determinant one
    """
    if abs(gamma.det - 1) > 1e-12:
        raise DomainError(f"matrix {gamma} does not have determinant 1")
    z = tau.tau
    image = gamma.apply(z)
    factor = gamma.j(z) ** (-weight)
    return Point.from_complex(image), factor


def slash(fn: Callable[[Point], complex], gamma: Mat2, weight: int) -> Callable[[Point], complex]:
    """The slashed function tau -> (c tau + d)**(-weight) fn(gamma tau)."""

    def slashed(tau: Point) -> complex:
        image, factor = cocycle(gamma, tau, weight)
        return factor * fn(image)

    return slashed
