"""
Canonical presentations and isomorphism.

Generator minimalization, canonical generator-minimal equivalence
presentations, inclusions between presentations and the isomorphism decision
for monoids given by C(2) presentations.
"""

from sop.canonical.isomorphism import (
    inclusion_check,
    is_sub_presentation,
    monoids_isomorphic,
    presentations_isomorphic,
)
from sop.canonical.labeling import canonical_alphabet, canonicalize, prune_singleton_classes
from sop.canonical.minimize import (
    eliminate_generator,
    find_redundant_generator,
    generator_minimal,
    indecomposable_generators,
    is_generator_minimal,
    minimize_with_provenance,
)
from sop.canonical.models import (
    CanonicalPresentation,
    EliminationStep,
    GeneratorBijection,
    relabel,
)

__all__ = [
    "inclusion_check",
    "is_sub_presentation",
    "monoids_isomorphic",
    "presentations_isomorphic",
    "canonical_alphabet",
    "canonicalize",
    "prune_singleton_classes",
    "eliminate_generator",
    "find_redundant_generator",
    "generator_minimal",
    "indecomposable_generators",
    "is_generator_minimal",
    "minimize_with_provenance",
    "CanonicalPresentation",
    "EliminationStep",
    "GeneratorBijection",
    "relabel",
]
