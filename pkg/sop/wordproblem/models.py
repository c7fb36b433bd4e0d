"""
Result models for the word problem.

Overlap prefixes located in a word, the case-by-case trace of an equivalence
decision, and the verdict of the brute-force oracle.
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict

from sop.presentation.models import Word


class CaseLabel(str, Enum):
    """Step kinds recorded while deciding u ≡ v."""

    DUMP_PREFIX = "dump-prefix"
    CASE1 = "case1"
    CASE2 = "case2"
    CASE3 = "case3"
    CASE4 = "case4"
    CASE5 = "case5"
    CASE6 = "case6"
    NO_CLEAN_PREFIX = "no-clean-prefix"
    LITERAL_EQUAL = "literal-equal"
    # none of the six cases applies
    NO_CASE = "no-case"


class OverlapPrefix(BaseModel):
    """
    A located relation prefix `leading·x·y` of some subject word.

    `x` and `y` are the maximal piece prefix and middle word of
    `source_relation_word`.
    """

    model_config = ConfigDict(frozen=True)

    leading: Word
    x: Word
    y: Word
    source_relation_word: Word
    clean: bool

    @property
    def prefix(self) -> Word:
        return self.leading + self.x + self.y

    @property
    def length(self) -> int:
        return len(self.leading) + len(self.x) + len(self.y)


class EquivalenceTrace(BaseModel):
    """Verdict of the decision procedure with the cases it went through."""

    model_config = ConfigDict(frozen=True)

    steps: tuple[CaseLabel, ...]
    verdict: bool

    def labels(self) -> list[str]:
        return [step.value for step in self.steps]


class OracleVerdict(str, Enum):
    EQUIVALENT = "equivalent"
    NOT_FOUND = "not-found-within-bounds"


class OracleResult(BaseModel):
    """Outcome of a bounded breadth-first search."""

    model_config = ConfigDict(frozen=True)

    verdict: OracleVerdict
    expanded: int
    # True when the whole bounded class was explored (a negative is then exact within max_len)
    exhausted: bool

    @property
    def equivalent(self) -> bool:
        return self.verdict == OracleVerdict.EQUIVALENT
