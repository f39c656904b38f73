"""
Hecke operators on translation-invariant evaluators and the Hecke relations
of F_{1-k,D}, f_{k,D} and F'_{1-k,D}.

Usage:
    from hecke import verify_hecke

    result = verify_hecke(2, 5, 2, Point(0.0, 4.0), params)
    lhs, rhs = result
"""

from hecke.operators import Evaluator, check_prime, hecke_points, hecke_Tp

from hecke.relations import (
    HeckeResult,
    screened_point,
    verify_hecke,
    verify_hecke_holomorphic,
    verify_hecke_primitive,
)

__all__ = [
    "Evaluator",
    "check_prime",
    "hecke_points",
    "hecke_Tp",
    "HeckeResult",
    "screened_point",
    "verify_hecke",
    "verify_hecke_holomorphic",
    "verify_hecke_primitive",
]
