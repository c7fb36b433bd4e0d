"""
Small overlap conditions.

C(n): no relation word is a product of strictly fewer than n pieces.
Strongly C(n): C(n) and no relation word is repeated.
"""

import logging
import math
from collections import Counter
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict

from sop.core.exceptions import PreconditionError
from sop.pieces.table import PieceTable, compute_pieces
from sop.presentation.models import Presentation, Word, shortlex_key
from sop.presentation.operations import sorted_relation_words

logger = logging.getLogger(__name__)

UNBOUNDED = math.inf

Degree = Union[int, float]


class XYZFactorization(BaseModel):
    """A relation word split as maximal piece prefix x, middle y, maximal piece suffix z."""

    model_config = ConfigDict(frozen=True)

    relation_word: Word
    x: Word
    y: Word
    z: Word

    @property
    def head(self) -> Word:
        """The prefix x·y."""
        return self.x + self.y


def piece_decomposition(w: Word, t: PieceTable) -> Optional[list[Word]]:
    """
    A shortest factorization of `w` into pieces, or None if there is none.

    Shortest path over prefix positions; among shortest factorizations the one
    with the shortest longest piece wins. The empty word decomposes into zero
    pieces.
    """
    size = len(w)
    # (piece count, longest piece) of the best factorization of w[:j]
    best: list[Optional[tuple[int, int]]] = [None] * (size + 1)
    back = [0] * (size + 1)
    best[0] = (0, 0)
    for i in range(size):
        reached = best[i]
        if reached is None:
            continue
        j = i + 1
        while j <= size and w[i:j] in t.pieces:
            candidate = (reached[0] + 1, max(reached[1], j - i))
            current = best[j]
            if current is None or candidate < current:
                best[j] = candidate
                back[j] = i
            j += 1
    if best[size] is None:
        return None
    parts: list[Word] = []
    j = size
    while j > 0:
        i = back[j]
        parts.append(w[i:j])
        j = i
    return parts[::-1]


def min_piece_decomposition(w: Word, t: PieceTable) -> Optional[int]:
    """Minimum number of pieces whose product is `w` (None if impossible)."""
    parts = piece_decomposition(w, t)
    return None if parts is None else len(parts)


def greedy_piece_count(w: Word, t: PieceTable) -> Optional[int]:
    """Piece count obtained by repeatedly taking the longest piece prefix."""
    count = 0
    rest = w
    while rest:
        head = t.longest_piece_prefix(rest)
        if not head:
            return None
        rest = rest[len(head):]
        count += 1
    return count


def _weakest_relation_word(p: Presentation) -> Optional[tuple[Word, list[Word]]]:
    """The relation word with the fewest pieces, with its decomposition."""
    table = compute_pieces(p)
    weakest: Optional[tuple[Word, list[Word]]] = None
    for word in sorted_relation_words(p):
        parts = piece_decomposition(word, table)
        if parts is not None and (weakest is None or len(parts) < len(weakest[1])):
            weakest = (word, parts)
    return weakest


def small_overlap_degree(p: Presentation) -> Degree:
    """
    The largest n such that p is C(n); `math.inf` when unbounded.

    The empty word as a relation word gives degree 0.
    """
    weakest = _weakest_relation_word(p)
    if weakest is None:
        return UNBOUNDED
    return len(weakest[1])


def check_c(p: Presentation, n: int) -> bool:
    """True iff no relation word is a product of fewer than n pieces."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return n <= small_overlap_degree(p)


def repeated_relation_words(p: Presentation) -> list[Word]:
    """Words that are a side of two relation occurrences (counted with multiplicity), shortlex order."""
    counts = Counter(side for relation in p.relations for side in relation.sides)
    return sorted((w for w, c in counts.items() if c > 1), key=shortlex_key)


def has_repeated_relation_words(p: Presentation) -> bool:
    return bool(repeated_relation_words(p))


def check_strong_c(p: Presentation, n: int) -> bool:
    """C(n) with no repeated relation words."""
    return check_c(p, n) and not has_repeated_relation_words(p)


def c_violation(p: Presentation, n: int) -> Optional[tuple[Word, list[Word]]]:
    """A relation word written with fewer than n pieces, if p fails C(n)."""
    weakest = _weakest_relation_word(p)
    if weakest is not None and len(weakest[1]) < n:
        return weakest
    return None


def require_c(p: Presentation, n: int, operation: str) -> None:
    """
    Raise PreconditionError unless p satisfies C(n).

    The error names the offending relation word and its piece decomposition.
    """
    violation = c_violation(p, n)
    if violation is None:
        return
    word, parts = violation
    logger.debug(f"{operation}: presentation fails C({n})")
    raise PreconditionError(
        f"{operation} requires a C({n}) presentation",
        condition=f"C({n})",
        relation_word=p.format_word(word),
        decomposition=[p.format_word(part) for part in parts],
    )


def xyz_factorization(r: Word, t: PieceTable) -> XYZFactorization:
    """
    Split a relation word into maximal piece prefix, middle word, maximal piece suffix.

    Raises:
        PreconditionError: the prefix and suffix meet or overlap (impossible under C(3))
    """
    x = t.longest_piece_prefix(r)
    z = t.longest_piece_suffix(r)
    if len(x) + len(z) >= len(r):
        p = t.presentation
        raise PreconditionError(
            "maximal piece prefix and suffix leave no middle word",
            condition="C(3)",
            relation_word=p.format_word(r),
            decomposition=[p.format_word(x), p.format_word(z)],
        )
    return XYZFactorization(relation_word=r, x=x, y=r[len(x):len(r) - len(z)], z=z)


def factorizations(p: Presentation) -> dict[Word, XYZFactorization]:
    """XYZ factorization of every relation word (requires C(3))."""
    require_c(p, 3, "xyz_factorization")
    table = compute_pieces(p)
    return {word: xyz_factorization(word, table) for word in sorted_relation_words(p)}
