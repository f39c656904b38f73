"""
Shared domain types and elementary arithmetic.

Usage:
    from core import fundamental_factor, pell_fundamental, Point

    disc = fundamental_factor(20)      # Discriminant(D=20, delta=5, f=2)
    pell = pell_fundamental(disc)      # PellSolution(t=18, u=4)
"""

from core.errors import (
    LochmfError,
    DomainError,
    BudgetInfeasibleError,
    WallCollisionError,
)

from core.types import (
    Discriminant,
    Point,
    Mat2,
    PellSolution,
    IDENTITY,
    S,
    T,
)

from core.polynomials import CPoly, poly_mod_reduce, poly_sum

from core.arithmetic import (
    kronecker,
    moebius,
    sigma,
    is_discriminant,
    fundamental_factor,
    as_discriminant,
    pell_fundamental,
)

from core.modular import cocycle, slash

__all__ = [
    "LochmfError",
    "DomainError",
    "BudgetInfeasibleError",
    "WallCollisionError",
    "Discriminant",
    "Point",
    "Mat2",
    "PellSolution",
    "IDENTITY",
    "S",
    "T",
    "CPoly",
    "poly_mod_reduce",
    "poly_sum",
    "kronecker",
    "moebius",
    "sigma",
    "is_discriminant",
    "fundamental_factor",
    "as_discriminant",
    "pell_fundamental",
    "cocycle",
    "slash",
]
