"""
Dense polynomials in one variable X.

Coefficients are stored lowest power first. Integer coefficients stay Python
ints under +, -, * so rational identities can be checked exactly.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple, Union

import numpy as np

from core.errors import DomainError

Coefficient = Union[int, float, complex]


def _trim(coeffs: Sequence[Coefficient]) -> Tuple[Coefficient, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class CPoly:
    """Polynomial sum_i coeffs[i] X**i with trailing zero coefficients removed."""
    coeffs: Tuple[Coefficient, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def zero(cls) -> "CPoly":
        return cls(())

    @classmethod
    def constant(cls, c: Coefficient) -> "CPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Coefficient = 1) -> "CPoly":
        return cls((0,) * degree + (c,))

    @classmethod
    def from_quadratic(cls, a: int, b: int, c: int) -> "CPoly":
        """The dehomogenised form Q(X, 1) = a X**2 + b X + c."""
        return cls((c, b, a))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Coefficient:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "CPoly") -> "CPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return CPoly(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __sub__(self, other: "CPoly") -> "CPoly":
        return self + other.scale(-1)

    def __neg__(self) -> "CPoly":
        return self.scale(-1)

    def __mul__(self, other: "CPoly") -> "CPoly":
        if not self.coeffs or not other.coeffs:
            return CPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, u in enumerate(self.coeffs):
            for j, v in enumerate(other.coeffs):
                out[i + j] += u * v
        return CPoly(tuple(out))

    def scale(self, c: Coefficient) -> "CPoly":
        return CPoly(tuple(c * v for v in self.coeffs))

    def __pow__(self, n: int) -> "CPoly":
        if n < 0:
            raise DomainError("negative polynomial power")
        result = CPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: complex) -> complex:
        acc: Coefficient = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def as_array(self, length: int) -> np.ndarray:
        """Coefficients padded to `length` entries as a complex array."""
        if self.degree >= length:
            raise DomainError(f"degree {self.degree} does not fit {length} coefficients")
        arr = np.zeros(length, dtype=complex)
        arr[: len(self.coeffs)] = self.coeffs
        return arr

    def max_abs_coeff(self) -> float:
        return max((abs(c) for c in self.coeffs), default=0.0)

    def to_list(self) -> list:
        return list(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "CPoly(0)"
        terms = [f"{c}*X^{i}" for i, c in enumerate(self.coeffs) if c != 0]
        return "CPoly(" + " + ".join(terms) + ")"


def poly_sum(polys: Iterable[CPoly]) -> CPoly:
    total = CPoly.zero()
    for p in polys:
        total = total + p
    return total


def poly_mod_reduce(p: CPoly, k: int) -> Tuple[CPoly, Coefficient]:
    """
    Reduce p modulo X**(2k-2) - 1 by zeroing the top coefficient.

    Args:
        p: Polynomial of degree at most 2k-2
        k: Weight parameter

    Returns:
        (q, c) with p = q + c (X**(2k-2) - 1) and q having no X**(2k-2) term

    Raises:
        DomainError: If deg p > 2k-2
    """
    top = 2 * k - 2
    if p.degree > top:
        raise DomainError(f"degree {p.degree} exceeds 2k-2 = {top}")
    c = p.coeff(top)
    q = p - (CPoly.monomial(top, c) - CPoly.constant(c))
    return q, c
