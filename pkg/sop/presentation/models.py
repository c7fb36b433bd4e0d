"""
Pydantic models for alphabets, relations and presentations.

A word is a tuple of generator indices into its alphabet; the empty tuple is
the empty word. All models are frozen, so they hash and compare by value and
can be shared freely between threads and processes.
"""

import re
from typing import Iterable, Sequence

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from sop.core.exceptions import PresentationError

Word = tuple[int, ...]

EMPTY_WORD: Word = ()
EMPTY_WORD_TOKEN = "1"
TOKEN_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def shortlex_key(word: Word) -> tuple[int, Word]:
    """Sort key ordering words by length, then lexicographically."""
    return (len(word), word)


# --- Alphabet ---


class Alphabet(BaseModel):
    """Ordered sequence of distinct generator tokens."""

    model_config = ConfigDict(frozen=True)

    symbols: tuple[str, ...] = ()

    @field_validator("symbols")
    @classmethod
    def validate_symbols(cls, v: tuple[str, ...]) -> tuple[str, ...]:
        for token in v:
            if not TOKEN_PATTERN.fullmatch(token):
                raise ValueError(f"invalid generator token: {token!r}")
        if len(set(v)) != len(v):
            raise ValueError("generator tokens must be pairwise distinct")
        return v

    @classmethod
    def standard(cls, size: int) -> "Alphabet":
        """The canonical `size`-letter alphabet: a, b, c, ... (x0, x1, ... past 26)."""
        if size < 0:
            raise PresentationError(f"alphabet size must be non-negative, got {size}")
        if size <= 26:
            return cls(symbols=tuple(chr(ord("a") + i) for i in range(size)))
        return cls(symbols=tuple(f"x{i}" for i in range(size)))

    def __len__(self) -> int:
        return len(self.symbols)

    def index_of(self, token: str) -> int:
        """Index of a generator token; raises PresentationError if unknown."""
        try:
            return self.symbols.index(token)
        except ValueError:
            raise PresentationError(f"unknown generator token: {token!r}") from None

    def word(self, tokens: Sequence[str]) -> Word:
        """Word spelled by a token sequence (no `1` allowed here)."""
        return tuple(self.index_of(t) for t in tokens)

    def parse_word(self, text: str) -> Word:
        """
        Parse a whitespace-separated token sequence.

        The empty word is spelled `1` and must stand alone.
        """
        tokens = text.split()
        if not tokens:
            raise PresentationError("empty word text; write the empty word as '1'")
        if EMPTY_WORD_TOKEN in tokens:
            if tokens == [EMPTY_WORD_TOKEN]:
                return EMPTY_WORD
            raise PresentationError(f"'1' must stand alone as the empty word: {text!r}")
        return self.word(tokens)

    def format_word(self, word: Word, sep: str = " ") -> str:
        """Render a word as tokens; the empty word renders as `1`."""
        if not word:
            return EMPTY_WORD_TOKEN
        return sep.join(self.symbols[i] for i in word)

    def tokens(self, word: Word) -> list[str]:
        return [self.symbols[i] for i in word]


# --- Relations ---


class Relation(BaseModel):
    """An ordered pair of words (lhs, rhs)."""

    model_config = ConfigDict(frozen=True)

    lhs: Word
    rhs: Word

    @property
    def is_trivial(self) -> bool:
        """A relation of the form (u, u)."""
        return self.lhs == self.rhs

    @property
    def sides(self) -> tuple[Word, Word]:
        return (self.lhs, self.rhs)

    def reversed(self) -> "Relation":
        """Letter-reverse both sides."""
        return Relation(lhs=self.lhs[::-1], rhs=self.rhs[::-1])

    def swapped(self) -> "Relation":
        return Relation(lhs=self.rhs, rhs=self.lhs)


# --- Presentations ---


class Presentation(BaseModel):
    """
    A finite monoid presentation: alphabet plus an ordered relation sequence.

    Relation order is preserved; set semantics are applied only by the
    operations that need them (closure, isomorphism).
    """

    model_config = ConfigDict(frozen=True)

    alphabet: Alphabet
    relations: tuple[Relation, ...] = ()

    @model_validator(mode="after")
    def check_words(self) -> "Presentation":
        size = len(self.alphabet)
        for relation in self.relations:
            for side in relation.sides:
                for letter in side:
                    if not 0 <= letter < size:
                        raise ValueError(
                            f"letter index {letter} outside alphabet of size {size}"
                        )
        return self

    @classmethod
    def from_letters(
        cls,
        letters: str,
        pairs: Iterable[tuple[str, str]] = (),
    ) -> "Presentation":
        """
        Build a presentation over single-character generators.

        Words are given as plain strings (`""` is the empty word), e.g.
        `Presentation.from_letters("ab", [("abab", "baba")])`.
        """
        alphabet = Alphabet(symbols=tuple(letters))
        relations = tuple(
            Relation(lhs=alphabet.word(list(lhs)), rhs=alphabet.word(list(rhs)))
            for lhs, rhs in pairs
        )
        return cls(alphabet=alphabet, relations=relations)

    @property
    def generator_count(self) -> int:
        return len(self.alphabet)

    @property
    def max_relation_length(self) -> int:
        """Length of the longest relation side (0 with no relations)."""
        return max((len(s) for r in self.relations for s in r.sides), default=0)

    @property
    def sum_relation_length(self) -> int:
        """Total length of all relation sides."""
        return sum(len(s) for r in self.relations for s in r.sides)

    def format_word(self, word: Word) -> str:
        return self.alphabet.format_word(word)

    def format_relation(self, relation: Relation) -> str:
        return f"{self.format_word(relation.lhs)} = {self.format_word(relation.rhs)}"

    def check_word(self, word: Word) -> Word:
        """Validate that a word only uses this presentation's letters."""
        size = len(self.alphabet)
        for letter in word:
            if not 0 <= letter < size:
                raise PresentationError(
                    f"letter index {letter} outside alphabet of size {size}"
                )
        return word
