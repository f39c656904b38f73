"""
Wall geometry outputs: constants, local polynomials, wall jumps and the
I-integral.

Usage:
    from walls import c_inf, local_poly, wall_jump

    c_inf(5, 2)                                   # -5^(-3/2)
    poly = local_poly(6, 5, Point(0.0, 0.05))     # P_C of the component of 0
"""

from walls.constants import (
    ConstantTerm,
    c_inf,
    c_inf_term,
    c_inf_class,
    c_inf_class_term,
    c_inf_classes,
)

from walls.local import (
    WallReport,
    wall_report,
    local_poly,
    local_poly_class,
    jump_poly,
    wall_jump,
)

from walls.ival import ival_closed_form, ival_quadrature, ival_check

__all__ = [
    "ConstantTerm",
    "c_inf",
    "c_inf_term",
    "c_inf_class",
    "c_inf_class_term",
    "c_inf_classes",
    "WallReport",
    "wall_report",
    "local_poly",
    "local_poly_class",
    "jump_poly",
    "wall_jump",
    "ival_closed_form",
    "ival_quadrature",
    "ival_check",
]
