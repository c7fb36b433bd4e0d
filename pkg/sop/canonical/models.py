"""
Models for generator bijections and canonical presentations.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, field_validator

from sop.core.exceptions import PresentationError
from sop.presentation.models import Alphabet, Presentation, Relation, Word
from sop.presentation.parser import serialize_presentation


class GeneratorBijection(BaseModel):
    """A one-to-one token mapping between two alphabets."""

    model_config = ConfigDict(frozen=True)

    pairs: tuple[tuple[str, str], ...]

    @field_validator("pairs")
    @classmethod
    def validate_injective(cls, v: tuple[tuple[str, str], ...]) -> tuple[tuple[str, str], ...]:
        sources = [s for s, _ in v]
        targets = [t for _, t in v]
        if len(set(sources)) != len(sources):
            raise ValueError("bijection maps a token twice")
        if len(set(targets)) != len(targets):
            raise ValueError("bijection is not injective")
        return v

    @classmethod
    def from_mapping(cls, mapping: dict[str, str]) -> "GeneratorBijection":
        return cls(pairs=tuple(mapping.items()))

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "GeneratorBijection":
        return cls(pairs=tuple((s, s) for s in alphabet.symbols))

    @property
    def mapping(self) -> dict[str, str]:
        return dict(self.pairs)

    def inverse(self) -> "GeneratorBijection":
        return GeneratorBijection(pairs=tuple((t, s) for s, t in self.pairs))

    def word_map(self, source: Alphabet, target: Alphabet) -> list[int]:
        """
        Index table sending source letters to target letters.

        Raises:
            PresentationError: not a bijection between the two alphabets
        """
        mapping = self.mapping
        if set(mapping) != set(source.symbols) or set(mapping.values()) != set(target.symbols):
            raise PresentationError("mapping is not a bijection between the two alphabets")
        return [target.index_of(mapping[token]) for token in source.symbols]


def map_word(word: Word, table: list[int]) -> Word:
    return tuple(table[letter] for letter in word)


def relabel(p: Presentation, b: GeneratorBijection, target: Optional[Alphabet] = None) -> Presentation:
    """
    Rename the generators of `p` along `b`.

    The target alphabet defaults to the images of p's tokens, in p's order.
    """
    if target is None:
        mapping = b.mapping
        target = Alphabet(symbols=tuple(mapping[s] for s in p.alphabet.symbols))
    table = b.word_map(p.alphabet, target)
    relations = tuple(
        Relation(lhs=map_word(r.lhs, table), rhs=map_word(r.rhs, table)) for r in p.relations
    )
    return Presentation(alphabet=target, relations=relations)


class EliminationStep(BaseModel):
    """One eliminated generator and the word that replaced it."""

    model_config = ConfigDict(frozen=True)

    generator: str
    replacement: tuple[str, ...]


class CanonicalPresentation(BaseModel):
    """
    Canonical generator-minimal equivalence presentation.

    Carries what is needed to translate words of the input presentation:
    the eliminations in order, then the relabeling of surviving tokens.
    """

    model_config = ConfigDict(frozen=True)

    presentation: Presentation
    source_alphabet: Alphabet
    provenance: tuple[EliminationStep, ...] = ()
    labeling: GeneratorBijection

    @property
    def serialization(self) -> str:
        return serialize_presentation(self.presentation)

    def translate(self, word: Word) -> Word:
        """Carry a word of the input presentation to an equivalent canonical word."""
        tokens = self.source_alphabet.tokens(word)
        for step in self.provenance:
            expanded: list[str] = []
            for token in tokens:
                if token == step.generator:
                    expanded.extend(step.replacement)
                else:
                    expanded.append(token)
            tokens = expanded
        mapping = self.labeling.mapping
        return self.presentation.alphabet.word([mapping[t] for t in tokens])
