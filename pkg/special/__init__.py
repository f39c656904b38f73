"""
Scalar special functions used by the evaluators.

Usage:
    from special import psi, beta_complete, zagier_zeta_check

    psi(1.0, 2)                       # pi/4
    lhs, rhs = zagier_zeta_check(5, 2.0, 100_000)
"""

from special.functions import (
    phi,
    psi,
    beta_complete,
    upper_incomplete_gamma,
    PSI_SERIES_CUTOFF,
)

from special.series import (
    LSeriesSpec,
    zeta,
    zeta_error,
    dirichlet_L,
    dirichlet_L_error,
    conductor_factor,
    zagier_zeta,
    partial_zagier_zeta,
    zagier_tail,
    zagier_zeta_check,
    primitive_zagier_zeta,
    primitive_zagier_tail,
)

__all__ = [
    "phi",
    "psi",
    "beta_complete",
    "upper_incomplete_gamma",
    "PSI_SERIES_CUTOFF",
    "LSeriesSpec",
    "zeta",
    "zeta_error",
    "dirichlet_L",
    "dirichlet_L_error",
    "conductor_factor",
    "zagier_zeta",
    "partial_zagier_zeta",
    "zagier_tail",
    "zagier_zeta_check",
    "primitive_zagier_zeta",
    "primitive_zagier_tail",
]
