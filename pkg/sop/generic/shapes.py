"""
Shapes of ordered presentations.

The shape of an ordered k-relation presentation is the sequence of its 2k
relation word lengths, a weak composition of the sum relation length.
"""

import math
from itertools import combinations
from typing import Iterator

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator


class Shape(BaseModel):
    model_config = ConfigDict(frozen=True)

    blocks: tuple[int, ...]

    @field_validator("blocks")
    @classmethod
    def validate_blocks(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if not v:
            raise ValueError("a shape has at least one block")
        if any(b < 0 for b in v):
            raise ValueError("block lengths must be non-negative")
        return v

    @property
    def total(self) -> int:
        return sum(self.blocks)


def weak_composition_count(s: int, r: int) -> int:
    """Number of weak compositions of s into r parts: C(s + r - 1, r - 1)."""
    if s < 0 or r < 1:
        raise ValueError(f"need s >= 0 and r >= 1, got s={s}, r={r}")
    return math.comb(s + r - 1, r - 1)


def _blocks_from_bars(s: int, r: int, bars: tuple[int, ...]) -> tuple[int, ...]:
    """Block sizes for bar positions among s + r - 1 slots (stars and bars)."""
    edges = (-1, *bars, s + r - 1)
    return tuple(edges[i + 1] - edges[i] - 1 for i in range(r))


def weak_compositions(s: int, r: int) -> Iterator[tuple[int, ...]]:
    """Every weak composition of s into r parts, each exactly once."""
    weak_composition_count(s, r)
    for bars in combinations(range(s + r - 1), r - 1):
        yield _blocks_from_bars(s, r, bars)


def sample_shape(n: int, r: int, rng: np.random.Generator) -> Shape:
    """Uniform weak composition of n into r parts."""
    weak_composition_count(n, r)
    if r == 1:
        return Shape(blocks=(n,))
    bars = np.sort(rng.choice(n + r - 1, size=r - 1, replace=False))
    return Shape(blocks=_blocks_from_bars(n, r, tuple(int(b) for b in bars)))
