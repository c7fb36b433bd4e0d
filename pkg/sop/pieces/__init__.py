"""
Piece analysis.

Piece sets, minimum piece decompositions, C(n) and strongly C(n) checks,
XYZ factorizations of relation words and complement classes.
"""

from sop.pieces.complements import ComplementClass, complement_class, complement_classes
from sop.pieces.conditions import (
    UNBOUNDED,
    XYZFactorization,
    c_violation,
    check_c,
    check_strong_c,
    factorizations,
    greedy_piece_count,
    has_repeated_relation_words,
    min_piece_decomposition,
    piece_decomposition,
    repeated_relation_words,
    require_c,
    small_overlap_degree,
    xyz_factorization,
)
from sop.pieces.table import PieceTable, compute_pieces

__all__ = [
    "ComplementClass",
    "complement_class",
    "complement_classes",
    "UNBOUNDED",
    "XYZFactorization",
    "c_violation",
    "check_c",
    "check_strong_c",
    "factorizations",
    "greedy_piece_count",
    "has_repeated_relation_words",
    "min_piece_decomposition",
    "piece_decomposition",
    "repeated_relation_words",
    "require_c",
    "small_overlap_degree",
    "xyz_factorization",
    "PieceTable",
    "compute_pieces",
]
