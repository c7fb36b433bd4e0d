"""
Word problem for C(4) presentations.

Relation and clean overlap prefixes, the rho measure, the six-case
equivalence decision, possible prefixes and a brute-force oracle.
"""

from sop.wordproblem.models import (
    CaseLabel,
    EquivalenceTrace,
    OracleResult,
    OracleVerdict,
    OverlapPrefix,
)
from sop.wordproblem.oracle import bfs_oracle, default_max_len, explore_class
from sop.wordproblem.solver import (
    SmallOverlapSolver,
    clean_overlap_prefix,
    explain_equivalence,
    first_relation_prefix,
    get_solver,
    is_possible_prefix,
    rho,
    words_equivalent,
)

__all__ = [
    "CaseLabel",
    "EquivalenceTrace",
    "OracleResult",
    "OracleVerdict",
    "OverlapPrefix",
    "bfs_oracle",
    "default_max_len",
    "explore_class",
    "SmallOverlapSolver",
    "clean_overlap_prefix",
    "explain_equivalence",
    "first_relation_prefix",
    "get_solver",
    "is_possible_prefix",
    "rho",
    "words_equivalent",
]
