"""
Piece detection.

A piece is a word occurring as a factor of two distinct relation words, or at
two distinct positions of one relation word; the empty word is always a piece.
"""

import logging
from collections import defaultdict
from functools import lru_cache

from pydantic import BaseModel, ConfigDict

from sop.presentation.models import EMPTY_WORD, Presentation, Word
from sop.presentation.operations import sorted_relation_words

logger = logging.getLogger(__name__)

Occurrence = tuple[int, int]  # (relation word id, start position)


class PieceTable(BaseModel):
    """The piece set of a presentation, with prefix/suffix lookups."""

    model_config = ConfigDict(frozen=True)

    presentation: Presentation
    pieces: frozenset[Word]
    max_piece_length: int

    def is_piece(self, word: Word) -> bool:
        return word in self.pieces

    def longest_piece_prefix(self, word: Word) -> Word:
        # pieces are factor-closed, so piece prefixes form an initial run
        k = 0
        while k < len(word) and word[:k + 1] in self.pieces:
            k += 1
        return word[:k]

    def longest_piece_suffix(self, word: Word) -> Word:
        k = 0
        while k < len(word) and word[len(word) - k - 1:] in self.pieces:
            k += 1
        return word[len(word) - k:]

    def count_profile(self) -> tuple[int, ...]:
        """Number of pieces of each length 0..max_piece_length."""
        counts = [0] * (self.max_piece_length + 1)
        for piece in self.pieces:
            counts[len(piece)] += 1
        return tuple(counts)


@lru_cache(maxsize=2048)
def compute_pieces(p: Presentation) -> PieceTable:
    """
    Compute the piece set of a presentation.

    Grows repeated factors one letter at a time: the occurrences of a piece of
    length l + 1 all extend occurrences of its length-l prefix, so only
    factors already known to repeat are extended.
    """
    words = sorted_relation_words(p)

    level: dict[Word, list[Occurrence]] = defaultdict(list)
    for wid, word in enumerate(words):
        for pos, letter in enumerate(word):
            level[(letter,)].append((wid, pos))

    pieces: set[Word] = {EMPTY_WORD}
    length = 1
    current = {f: occ for f, occ in level.items() if len(occ) >= 2}
    while current:
        pieces.update(current)
        extended: dict[Word, list[Occurrence]] = defaultdict(list)
        for factor, occ in current.items():
            for wid, pos in occ:
                end = pos + length
                word = words[wid]
                if end < len(word):
                    extended[factor + (word[end],)].append((wid, pos))
        current = {f: occ for f, occ in extended.items() if len(occ) >= 2}
        length += 1

    max_length = max(len(piece) for piece in pieces)
    logger.debug(f"Found {len(pieces)} pieces (longest {max_length})")
    return PieceTable(presentation=p, pieces=frozenset(pieces), max_piece_length=max_length)
