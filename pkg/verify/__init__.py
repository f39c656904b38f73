"""Numerical verification of the identities satisfied by F_{1-k,D} and f_{k,D}."""

from verify.checks import (
    check_constant,
    check_cocycle,
    check_expansion,
    check_growth,
    check_hecke,
    check_ival,
    check_laplacian,
    check_modularity,
    check_rationality,
    check_vanishing,
    check_wall_average,
    check_wall_jump,
    check_xi,
    check_zagier,
    cusp_dimension,
)
from verify.harness import CHECK_REGISTRY, build_report, expand, plan, run_all, run_all_async

__all__ = [
    "check_constant",
    "check_cocycle",
    "check_expansion",
    "check_growth",
    "check_hecke",
    "check_ival",
    "check_laplacian",
    "check_modularity",
    "check_rationality",
    "check_vanishing",
    "check_wall_average",
    "check_wall_jump",
    "check_xi",
    "check_zagier",
    "cusp_dimension",
    "CHECK_REGISTRY",
    "build_report",
    "expand",
    "plan",
    "run_all",
    "run_all_async",
]
