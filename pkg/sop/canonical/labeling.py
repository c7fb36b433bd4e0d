"""
Canonical presentations.

canonicalize = generator minimalization, equivalence closure, removal of
relation words without proper complements, then the relabeling whose sorted
relation list is lexicographically least. Generators occurring in no
relation are free letters and are labeled last, in their original order.
"""

import logging
from itertools import permutations

from sop.canonical.minimize import minimize_with_provenance
from sop.canonical.models import CanonicalPresentation, GeneratorBijection
from sop.core.config import config
from sop.core.exceptions import EnumerationGuardError
from sop.pieces.conditions import require_c
from sop.presentation.models import Alphabet, Presentation, Relation, Word
from sop.presentation.operations import equivalence_closure, relation_word_classes

logger = logging.getLogger(__name__)

CANONICAL_PREFIX = "g"

RelationKey = tuple[tuple[Word, Word], ...]


def canonical_alphabet(size: int) -> Alphabet:
    return Alphabet(symbols=tuple(f"{CANONICAL_PREFIX}{i}" for i in range(size)))


def prune_singleton_classes(p: Presentation) -> Presentation:
    """Drop relations on relation words that have no proper complement."""
    keep = {
        word
        for members in relation_word_classes(p)
        if len(members) > 1
        for word in members
    }
    return Presentation(
        alphabet=p.alphabet,
        relations=tuple(r for r in p.relations if r.lhs in keep),
    )


def _relation_key(p: Presentation, table: list[int]) -> RelationKey:
    return tuple(
        sorted(
            (tuple(table[i] for i in r.lhs), tuple(table[i] for i in r.rhs))
            for r in p.relations
        )
    )


def _minimal_labeling(p: Presentation) -> list[int]:
    """
    Letter table giving the least relation key.

    Among tables reaching the least key, the first in lexicographic order of
    the labels given to the active letters is returned.
    """
    size = len(p.alphabet)
    active = sorted({i for r in p.relations for side in r.sides for i in side})
    inactive = [i for i in range(size) if i not in set(active)]

    limit = config.canonical.max_active_generators
    if len(active) > limit:
        raise EnumerationGuardError(
            "too many generators occur in relations for exhaustive relabeling",
            count=len(active),
            limit=limit,
        )

    table = list(range(size))
    for offset, letter in enumerate(inactive):
        table[letter] = len(active) + offset

    best_key: RelationKey | None = None
    best_table = table
    for labels in permutations(range(len(active))):
        for letter, label in zip(active, labels):
            table[letter] = label
        key = _relation_key(p, table)
        if best_key is None or key < best_key:
            best_key = key
            best_table = list(table)
    return best_table


def canonicalize(p: Presentation) -> CanonicalPresentation:
    """
    Canonical form of a C(2) presentation.

    Two C(2) presentations of isomorphic monoids give identical serializations.

    Raises:
        PreconditionError: p is not C(2)
        EnumerationGuardError: too many active generators to relabel exhaustively
    """
    require_c(p, 2, "canonicalize")
    minimal, steps = minimize_with_provenance(p)
    pruned = prune_singleton_classes(equivalence_closure(minimal))

    table = _minimal_labeling(pruned)
    alphabet = canonical_alphabet(len(pruned.alphabet))
    relations = sorted(
        (tuple(table[i] for i in r.lhs), tuple(table[i] for i in r.rhs))
        for r in pruned.relations
    )
    presentation = Presentation(
        alphabet=alphabet,
        relations=tuple(Relation(lhs=lhs, rhs=rhs) for lhs, rhs in relations),
    )
    labeling = GeneratorBijection(
        pairs=tuple(
            (token, alphabet.symbols[table[i]]) for i, token in enumerate(pruned.alphabet.symbols)
        )
    )
    logger.info(
        f"Canonicalized {len(p.alphabet)} -> {len(alphabet)} generators, "
        f"{len(presentation.relations)} relations"
    )
    return CanonicalPresentation(
        presentation=presentation,
        source_alphabet=p.alphabet,
        provenance=tuple(steps),
        labeling=labeling,
    )
