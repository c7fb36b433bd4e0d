"""
Locating relation prefixes in words.

Every relation word r = x·y·z of a C(3) presentation has a head x·y that is
not a piece. Two heads therefore never overlap inside one relation word, at
most one head starts at any position of a word, and no two head occurrences
end at the same position.
"""

import logging
from collections import defaultdict
from typing import Optional

from sop.pieces.conditions import XYZFactorization
from sop.presentation.models import Word

logger = logging.getLogger(__name__)

# (start position, factorization of the relation word whose head starts there)
HeadOccurrence = tuple[int, XYZFactorization]


class HeadIndex:
    """Index of relation-word heads by first letter."""

    def __init__(self, factorizations: list[XYZFactorization]):
        self._by_letter: dict[int, list[XYZFactorization]] = defaultdict(list)
        for fact in factorizations:
            head = fact.head
            if head:
                self._by_letter[head[0]].append(fact)

    def head_at(self, w: Word, i: int) -> Optional[XYZFactorization]:
        """The relation word whose head occurs in `w` at position `i`, if any."""
        if i >= len(w):
            return None
        for fact in self._by_letter.get(w[i], ()):
            head = fact.head
            if w[i:i + len(head)] == head:
                return fact
        return None

    def shortest_relation_prefix(self, w: Word) -> Optional[HeadOccurrence]:
        """The head occurrence ending earliest in `w`."""
        best: Optional[HeadOccurrence] = None
        best_end = len(w) + 1
        for i in range(len(w)):
            if i >= best_end:
                break
            fact = self.head_at(w, i)
            if fact is not None and i + len(fact.head) < best_end:
                best = (i, fact)
                best_end = i + len(fact.head)
        return best

    def inner_head(self, w: Word, occurrence: HeadOccurrence) -> Optional[HeadOccurrence]:
        """
        A head starting strictly inside the middle word of `occurrence`.

        Returns the earliest one; its existence makes the occurrence unclean.
        """
        start, fact = occurrence
        y_start = start + len(fact.x)
        y_end = y_start + len(fact.y)
        for i in range(y_start + 1, y_end):
            inner = self.head_at(w, i)
            if inner is not None:
                return (i, inner)
        return None

    def clean_overlap_prefix(self, w: Word) -> Optional[HeadOccurrence]:
        """
        Follow the overlap chain from the shortest relation prefix until it is clean.

        Absent iff `w` has no relation prefix.
        """
        occurrence = self.shortest_relation_prefix(w)
        if occurrence is None:
            return None
        while True:
            inner = self.inner_head(w, occurrence)
            if inner is None:
                return occurrence
            occurrence = inner
