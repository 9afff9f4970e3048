"""Exact enumeration of the forests of rational trees generated by L_u and R_v.

Rationals are accepted as ``int``, ``fractions.Fraction`` or ``"a/b"`` strings
and returned as ``fractions.Fraction``.
"""

from ._core import (
    LimitError,
    check_denominator_chain,
    children,
    continued_fraction,
    cw_row_of,
    cw_vertex,
    decompose,
    freeness_probe,
    height,
    is_orphan,
    mat_L,
    mat_R,
    newman_successor,
    parent,
    row,
    verify_freeness,
    verify_partition,
    verify_range,
    verify_self_symmetry,
    verify_symmetry,
    vertex_at,
    word_to_matrix,
)

__all__ = [
    "LimitError",
    "check_denominator_chain",
    "children",
    "continued_fraction",
    "cw_row_of",
    "cw_vertex",
    "decompose",
    "freeness_probe",
    "height",
    "is_orphan",
    "mat_L",
    "mat_R",
    "newman_successor",
    "parent",
    "row",
    "verify_freeness",
    "verify_partition",
    "verify_range",
    "verify_self_symmetry",
    "verify_symmetry",
    "vertex_at",
    "word_to_matrix",
]
