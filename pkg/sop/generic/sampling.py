"""
Random ordered presentations.

Sum mode is uniform over ordered presentations of sum relation length n: a
uniform shape and a uniform word of length n, cut into the 2k relation
words. Max mode is uniform over ordered presentations of maximum relation
length n: each word is uniform over words of length at most n, and draws
without a word of length exactly n are rejected.
"""

import logging
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from sop.generic.shapes import sample_shape
from sop.presentation.models import Alphabet, Presentation, Relation, Word

logger = logging.getLogger(__name__)


class LengthMode(str, Enum):
    SUM = "sum"
    MAX = "max"


class SampleConfig(BaseModel):
    """Monte Carlo experiment configuration."""

    model_config = ConfigDict(frozen=True)

    alphabet_size: int = Field(ge=1)
    relation_count: int = Field(ge=1)
    length: int = Field(ge=0)
    length_mode: LengthMode = LengthMode.SUM
    seed: int = Field(default=0, ge=0, lt=2**64)
    trials: int = Field(default=2000, ge=1)


def sample_word(a: int, length: int, rng: np.random.Generator) -> Word:
    return tuple(int(x) for x in rng.integers(0, a, size=length))


def presentation_from_words(a: int, words: list[Word]) -> Presentation:
    """Pair consecutive words (w0, w1), (w2, w3), ... over the standard a-letter alphabet."""
    relations = tuple(
        Relation(lhs=words[i], rhs=words[i + 1]) for i in range(0, len(words), 2)
    )
    return Presentation(alphabet=Alphabet.standard(a), relations=relations)


def split_word(word: Word, blocks: tuple[int, ...]) -> list[Word]:
    parts: list[Word] = []
    start = 0
    for size in blocks:
        parts.append(word[start:start + size])
        start += size
    return parts


def _sample_sum(cfg: SampleConfig, rng: np.random.Generator) -> Presentation:
    shape = sample_shape(cfg.length, 2 * cfg.relation_count, rng)
    word = sample_word(cfg.alphabet_size, cfg.length, rng)
    return presentation_from_words(cfg.alphabet_size, split_word(word, shape.blocks))


def _length_weights(a: int, n: int) -> np.ndarray:
    """P(length = l) proportional to a**l for l = 0..n, computed as a**(l - n)."""
    weights = np.power(float(a), np.arange(n + 1, dtype=float) - n)
    return weights / weights.sum()


def _sample_max(cfg: SampleConfig, rng: np.random.Generator) -> Presentation:
    n = cfg.length
    count = 2 * cfg.relation_count
    weights = _length_weights(cfg.alphabet_size, n)
    while True:
        lengths = rng.choice(n + 1, size=count, p=weights)
        if int(lengths.max()) == n:
            break
    words = [sample_word(cfg.alphabet_size, int(size), rng) for size in lengths]
    return presentation_from_words(cfg.alphabet_size, words)


def sample_presentation(cfg: SampleConfig, rng: np.random.Generator) -> Presentation:
    """Draw one ordered presentation under the configured length model."""
    if cfg.length_mode == LengthMode.SUM:
        return _sample_sum(cfg, rng)
    return _sample_max(cfg, rng)
