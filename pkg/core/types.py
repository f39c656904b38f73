"""
Domain types shared by all packages.

Points of the upper half-plane, integer and real 2x2 matrices, discriminants
and Pell solutions. Polynomials live in core.polynomials.
"""

import math
from dataclasses import dataclass
from typing import Union

from core.errors import DomainError

Number = Union[int, float]


@dataclass(frozen=True)
class Discriminant:
    """A positive non-square discriminant D = delta * f**2 with delta fundamental."""
    D: int
    delta: int
    f: int

    def __int__(self) -> int:
        return self.D

    @property
    def sqrt(self) -> float:
        return math.sqrt(self.D)

    def to_dict(self) -> dict:
        return {"D": self.D, "delta": self.delta, "f": self.f}


@dataclass(frozen=True)
class Point:
    """A point tau = x + iy of the upper half-plane."""
    x: float
    y: float

    def __post_init__(self):
        if not (self.y > 0) or not math.isfinite(self.y) or not math.isfinite(self.x):
            raise DomainError(f"Point must satisfy y > 0, got x={self.x}, y={self.y}")

    @classmethod
    def from_complex(cls, tau: complex) -> "Point":
        return cls(float(tau.real), float(tau.imag))

    @property
    def tau(self) -> complex:
        return complex(self.x, self.y)

    def shifted(self, dx: float = 0.0, dy: float = 0.0) -> "Point":
        return Point(self.x + dx, self.y + dy)

    def __complex__(self) -> complex:
        return self.tau

    def __repr__(self) -> str:
        return f"Point({self.x:g}{self.y:+g}i)"


@dataclass(frozen=True)
class Mat2:
    """The matrix [[a, b], [c, d]]; integral for modular substitutions, real for A_Q."""
    a: Number
    b: Number
    c: Number
    d: Number

    @property
    def det(self) -> Number:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def apply(self, tau: complex) -> complex:
        """Moebius action tau -> (a tau + b)/(c tau + d)."""
        return (self.a * tau + self.b) / (self.c * tau + self.d)

    def j(self, tau: complex) -> complex:
        """Automorphy factor c tau + d."""
        return self.c * tau + self.d

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v in (self.a, self.b, self.c, self.d))

    def inverse(self) -> "Mat2":
        """Inverse of a determinant-one matrix."""
        return Mat2(self.d, -self.b, -self.c, self.a)


IDENTITY = Mat2(1, 0, 0, 1)
S = Mat2(0, -1, 1, 0)
T = Mat2(1, 1, 0, 1)


@dataclass(frozen=True)
class PellSolution:
    """Minimal positive solution of t**2 - D u**2 = 4."""
    t: int
    u: int
