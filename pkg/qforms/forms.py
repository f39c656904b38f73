"""
Integral binary quadratic forms [a, b, c] of positive non-square discriminant.

A form stands for Q(X, Y) = aX^2 + bXY + cY^2. Its geodesic S_Q is the
semicircle a|tau|^2 + bx + c = 0 with centre -b/2a and radius sqrt(D)/2|a|.
"""

import math
from dataclasses import dataclass
from typing import Iterator, Tuple

from core.errors import DomainError
from core.types import Mat2, Point

# |a|tau|^2 + bx + c| below this fraction of |a| |tau + b/2a|^2 + D/4|a| counts as on the wall
ON_WALL_RTOL = 1e-12


@dataclass(frozen=True, order=True)
class QForm:
    """An integral binary quadratic form [a, b, c]."""
    a: int
    b: int
    c: int

    def __iter__(self) -> Iterator[int]:
        return iter((self.a, self.b, self.c))

    def __neg__(self) -> "QForm":
        return QForm(-self.a, -self.b, -self.c)

    def __repr__(self) -> str:
        return f"[{self.a},{self.b},{self.c}]"

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def sgn_a(self) -> int:
        return 1 if self.a > 0 else -1

    def is_primitive(self) -> bool:
        return math.gcd(math.gcd(self.a, self.b), self.c) == 1

    def roots(self) -> Tuple[float, float]:
        """(eta, eta') = ((-b + sqrt D)/2a, (-b - sqrt D)/2a)."""
        sd = math.sqrt(self.disc)
        return (-self.b + sd) / (2 * self.a), (-self.b - sd) / (2 * self.a)

    @property
    def center(self) -> float:
        return -self.b / (2 * self.a)

    @property
    def radius(self) -> float:
        return math.sqrt(self.disc) / (2 * abs(self.a))

    def to_list(self) -> list:
        return [self.a, self.b, self.c]

    @classmethod
    def from_ab(cls, D: int, a: int, b: int) -> "QForm":
        """The form [a, b, (b^2 - D)/4a]; requires b^2 = D mod 4a."""
        num = b * b - D
        if a == 0 or num % (4 * a):
            raise DomainError(f"no form of discriminant {D} with a={a}, b={b}")
        return cls(a, b, num // (4 * a))


def disc(Q: QForm) -> int:
    return Q.disc


def q_apply(Q: QForm, gamma: Mat2) -> QForm:
    """
    The substituted form (Q o gamma)(X, Y) = Q(aX + bY, cX + dY).

    Raises:
        DomainError: If gamma is not an integral determinant-one matrix
    """
    if not gamma.is_integral() or gamma.det != 1:
        raise DomainError(f"{gamma} is not in SL2(Z)")
    al, be, ga, de = gamma.a, gamma.b, gamma.c, gamma.d
    a, b, c = Q
    return QForm(
        a * al * al + b * al * ga + c * ga * ga,
        2 * a * al * be + b * (al * de + be * ga) + 2 * c * ga * de,
        a * be * be + b * be * de + c * de * de,
    )


def q_eval(Q: QForm, tau: Point) -> complex:
    z = tau.tau
    return Q.a * z * z + Q.b * z + Q.c


def geodesic_value(Q: QForm, tau: Point) -> float:
    """a|tau|^2 + bx + c; zero exactly on S_Q."""
    return Q.a * (tau.x * tau.x + tau.y * tau.y) + Q.b * tau.x + Q.c


def on_wall(Q: QForm, tau: Point, rtol: float = ON_WALL_RTOL) -> bool:
    """Whether tau lies on S_Q up to the relative rounding of geodesic_value."""
    w = tau.x + Q.b / (2 * Q.a)
    scale = abs(Q.a) * (w * w + tau.y * tau.y) + Q.disc / (4 * abs(Q.a))
    return abs(geodesic_value(Q, tau)) <= rtol * scale


def wall_distance(Q: QForm, tau: Point) -> float:
    """Euclidean distance from tau to the semicircle S_Q."""
    return abs(math.hypot(tau.x - Q.center, tau.y) - Q.radius)


def matrix_AQ(Q: QForm) -> Mat2:
    """
    The real matrix A_Q mapping the geodesic of Q onto the imaginary axis.

    With eta, eta' the roots and s = sgn(a), A_Q = [[1, -eta'], [-s, s*eta]]
    scaled by |eta - eta'|^(-1/2), so that det A_Q = 1 and
    (A_Q tau) * j(A_Q, tau)^2 = -Q(tau, 1)/sqrt(D).
    """
    if Q.a == 0:
        raise DomainError(f"{Q} has a = 0")
    eta, eta_c = Q.roots()
    s = Q.sgn_a
    scale = 1.0 / math.sqrt(abs(eta - eta_c))
    return Mat2(scale, -eta_c * scale, -s * scale, s * eta * scale)
