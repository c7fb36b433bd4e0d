"""
Generator minimalization for C(2) presentations.

Under C(2) a generator is redundant exactly when it is one side of a
nontrivial relation; such a letter is not a piece, so it occurs in no other
relation word and can be replaced everywhere by the other side.
"""

import logging
from typing import Optional

from sop.canonical.models import EliminationStep
from sop.core.exceptions import InvariantViolationError, PresentationError
from sop.pieces.conditions import require_c
from sop.presentation.models import Alphabet, Presentation, Relation, Word, shortlex_key

logger = logging.getLogger(__name__)


def _replacements(p: Presentation, index: int) -> list[Word]:
    """Words w != a with (a, w) or (w, a) a relation, shortlex order."""
    letter: Word = (index,)
    found = {
        other
        for relation in p.relations
        for side, other in (relation.sides, relation.sides[::-1])
        if side == letter and other != letter
    }
    return sorted(found, key=shortlex_key)


def find_redundant_generator(p: Presentation) -> Optional[tuple[str, Word]]:
    """
    The first redundant generator with its shortest, lexicographically least replacement.

    Raises:
        PreconditionError: p is not C(2)
    """
    require_c(p, 2, "find_redundant_generator")
    for index, token in enumerate(p.alphabet.symbols):
        words = _replacements(p, index)
        if words:
            return token, words[0]
    return None


def is_generator_minimal(p: Presentation) -> bool:
    return find_redundant_generator(p) is None


def indecomposable_generators(p: Presentation) -> list[str]:
    """Generators with no nontrivial relation to rewrite them (C(2) input)."""
    require_c(p, 2, "indecomposable_generators")
    return [
        token for index, token in enumerate(p.alphabet.symbols) if not _replacements(p, index)
    ]


def eliminate_generator(p: Presentation, a: str) -> Presentation:
    """
    Remove redundant generator `a`.

    Relations with `a` as a side are dropped and every pair of its
    replacement words is added; the alphabet loses `a` and keeps its order.

    Raises:
        PreconditionError: p is not C(2)
        PresentationError: `a` is unknown or not redundant
    """
    require_c(p, 2, "eliminate_generator")
    index = p.alphabet.index_of(a)
    hat = _replacements(p, index)
    if not hat:
        raise PresentationError(f"generator {a!r} is not redundant")

    letter: Word = (index,)
    kept = [r for r in p.relations if letter not in r.sides]
    added = [Relation(lhs=u, rhs=v) for u in hat for v in hat]
    relations = kept + added
    if any(index in side for r in relations for side in r.sides):
        raise InvariantViolationError(f"generator {a!r} still occurs after elimination")

    def shift(word: Word) -> Word:
        return tuple(i - 1 if i > index else i for i in word)

    symbols = p.alphabet.symbols
    alphabet = Alphabet(symbols=symbols[:index] + symbols[index + 1:])
    logger.debug(f"Eliminated {a} using {len(hat)} replacement word(s)")
    return Presentation(
        alphabet=alphabet,
        relations=tuple(Relation(lhs=shift(r.lhs), rhs=shift(r.rhs)) for r in relations),
    )


def minimize_with_provenance(p: Presentation) -> tuple[Presentation, list[EliminationStep]]:
    """Eliminate redundant generators until none remain, recording each step."""
    steps: list[EliminationStep] = []
    current = p
    while True:
        found = find_redundant_generator(current)
        if found is None:
            return current, steps
        token, word = found
        steps.append(
            EliminationStep(generator=token, replacement=tuple(current.alphabet.tokens(word)))
        )
        current = eliminate_generator(current, token)


def generator_minimal(p: Presentation) -> Presentation:
    """A generator-minimal presentation of the same monoid (C(2) input)."""
    return minimize_with_provenance(p)[0]
