from .gf import (
    Field,
    FieldElem,
    Matrix,
    field_new,
    mat_inverse,
    mat_mul,
    mat_rank,
    rank_by_enumeration,
    row_space_intersection_trivial,
)

__all__ = [
    "Field",
    "FieldElem",
    "Matrix",
    "field_new",
    "mat_inverse",
    "mat_mul",
    "mat_rank",
    "rank_by_enumeration",
    "row_space_intersection_trivial",
]
