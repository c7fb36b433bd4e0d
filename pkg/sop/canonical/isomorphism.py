"""
Inclusions, presentation isomorphisms and the monoid isomorphism decision.
"""

import logging
from collections import Counter
from itertools import permutations
from typing import Iterator, Optional

from sop.canonical.labeling import canonicalize
from sop.canonical.models import GeneratorBijection, map_word
from sop.pieces.conditions import require_c
from sop.pieces.table import compute_pieces
from sop.presentation.models import Presentation, Word

logger = logging.getLogger(__name__)


def _relation_set(p: Presentation) -> frozenset[tuple[Word, Word]]:
    return frozenset(r.sides for r in p.relations)


def _image_set(p: Presentation, table: list[int]) -> frozenset[tuple[Word, Word]]:
    return frozenset((map_word(r.lhs, table), map_word(r.rhs, table)) for r in p.relations)


def inclusion_check(p: Presentation, q: Presentation, b: GeneratorBijection) -> bool:
    """
    True iff `b` sends every relation of p to a relation of q.

    Raises:
        PresentationError: `b` is not a bijection between the two alphabets
    """
    table = b.word_map(p.alphabet, q.alphabet)
    return _image_set(p, table) <= _relation_set(q)


def _length_profile(p: Presentation) -> Counter[tuple[int, int]]:
    return Counter((len(lhs), len(rhs)) for lhs, rhs in _relation_set(p))


def _could_be_isomorphic(p: Presentation, q: Presentation) -> bool:
    """Invariants every presentation isomorphism preserves."""
    if len(p.alphabet) != len(q.alphabet):
        return False
    if len(_relation_set(p)) != len(_relation_set(q)):
        return False
    if _length_profile(p) != _length_profile(q):
        return False
    return compute_pieces(p).count_profile() == compute_pieces(q).count_profile()


def _tables(size: int) -> Iterator[list[int]]:
    """Letter tables for every bijection of a `size`-letter alphabet, in lexicographic order."""
    for images in permutations(range(size)):
        yield list(images)


def _bijection(p: Presentation, q: Presentation, table: list[int]) -> GeneratorBijection:
    return GeneratorBijection(
        pairs=tuple(
            (token, q.alphabet.symbols[table[i]]) for i, token in enumerate(p.alphabet.symbols)
        )
    )


def is_sub_presentation(p: Presentation, q: Presentation) -> bool:
    """True iff some inclusion of p into q exists."""
    if len(p.alphabet) != len(q.alphabet):
        return False
    target = _relation_set(q)
    return any(_image_set(p, table) <= target for table in _tables(len(q.alphabet)))


def presentations_isomorphic(p: Presentation, q: Presentation) -> Optional[GeneratorBijection]:
    """
    The lexicographically first bijection that is an inclusion both ways.

    Relations are compared as sets; absent when no such bijection exists.
    """
    if not _could_be_isomorphic(p, q):
        return None
    target = _relation_set(q)
    for table in _tables(len(q.alphabet)):
        if _image_set(p, table) == target:
            return _bijection(p, q, table)
    return None


def monoids_isomorphic(p: Presentation, q: Presentation) -> bool:
    """
    Decide whether two C(2) presentations present isomorphic monoids.

    Raises:
        PreconditionError: either input is not C(2)
    """
    require_c(p, 2, "monoids_isomorphic")
    require_c(q, 2, "monoids_isomorphic")
    same = canonicalize(p).serialization == canonicalize(q).serialization
    logger.debug(f"Monoid isomorphism decided: {same}")
    return same

