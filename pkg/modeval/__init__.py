"""
Truncated evaluation of f_{k,D}, F_{1-k,D} and their class versions,
Fourier coefficients and Eichler integrals.

Usage:
    from config.models import EvalParams
    from modeval import eval_F, fourier_coeffs

    params = EvalParams(a_max=2000)
    ev = eval_F(2, 5, 2j, params)          # ~ c_inf(5, 2) = -5^(-3/2)
    series = fourier_coeffs(6, 5, m_max=4, params=params)
"""

from modeval.evaluators import (
    Evaluation,
    ZERO,
    DiscLike,
    check_weight,
    central_binomial,
    eval_F,
    eval_F_primitive,
    eval_FA,
    eval_fkD,
    eval_fkDA,
)

from modeval.kernels import (
    SumKind,
    PairTable,
    LatticeSum,
    full_table,
    class_table,
    lattice_sum,
    poisson_constant,
    a_tail_estimate,
)

from modeval.fourier import CoeffSeries, fourier_coeffs, DEFAULT_HEIGHT

from modeval.eichler import cusp_value, eichler_holo, eichler_nonholo

__all__ = [
    "Evaluation",
    "ZERO",
    "DiscLike",
    "check_weight",
    "central_binomial",
    "eval_F",
    "eval_F_primitive",
    "eval_FA",
    "eval_fkD",
    "eval_fkDA",
    "SumKind",
    "PairTable",
    "LatticeSum",
    "full_table",
    "class_table",
    "lattice_sum",
    "poisson_constant",
    "a_tail_estimate",
    "CoeffSeries",
    "fourier_coeffs",
    "DEFAULT_HEIGHT",
    "cusp_value",
    "eichler_holo",
    "eichler_nonholo",
]
