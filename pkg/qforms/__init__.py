"""
Integral binary quadratic forms of positive non-square discriminant.

Usage:
    from qforms import QForm, reduce_cycle, narrow_class_reps, interior_forms

    cls = reduce_cycle(QForm(1, 1, -1))     # cycle {[-1,1,1], [1,1,-1]}
    classes = narrow_class_reps(12)
"""

from qforms.forms import (
    QForm,
    disc,
    q_apply,
    q_eval,
    geodesic_value,
    on_wall,
    wall_distance,
    matrix_AQ,
)

from qforms.reduction import (
    NarrowClass,
    is_reduced,
    rho,
    reduce_cycle,
    equivalent,
    reduced_forms,
    narrow_class_reps,
    r_ab,
)

from qforms.enumeration import (
    residues,
    residue_table,
    residue_counts,
    residue_count,
    forms_truncated,
    forms_a_neg_c_pos,
)

from qforms.geometry import (
    ComponentSignature,
    signature_hash,
    interior_forms,
    walls_through,
    nearest_wall,
)

__all__ = [
    "QForm",
    "disc",
    "q_apply",
    "q_eval",
    "geodesic_value",
    "on_wall",
    "wall_distance",
    "matrix_AQ",
    "NarrowClass",
    "is_reduced",
    "rho",
    "reduce_cycle",
    "equivalent",
    "reduced_forms",
    "narrow_class_reps",
    "r_ab",
    "residues",
    "residue_table",
    "residue_counts",
    "residue_count",
    "forms_truncated",
    "forms_a_neg_c_pos",
    "ComponentSignature",
    "signature_hash",
    "interior_forms",
    "walls_through",
    "nearest_wall",
]
