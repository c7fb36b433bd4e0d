"""Pytest configuration and fixtures."""

from pathlib import Path

import pytest

from sop.core.config import get_settings
from sop.presentation.models import Presentation, Word

FIXTURES_DIR = Path(__file__).parent / "fixtures"


def word(p: Presentation, letters: str) -> Word:
    """Spell a word over single-letter generators, e.g. word(p3, "abcde")."""
    return p.alphabet.word(list(letters))


@pytest.fixture
def fresh_settings():
    """Re-read settings from the environment, restoring the cache afterwards."""
    get_settings.cache_clear()
    yield get_settings
    get_settings.cache_clear()


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture
def p1() -> Presentation:
    """<a,b,c,d | ab=cd>: only the empty word is a piece."""
    return Presentation.from_letters("abcd", [("ab", "cd")])


@pytest.fixture
def p2() -> Presentation:
    """<a,b | abab=baba>: C(2) but not C(3)."""
    return Presentation.from_letters("ab", [("abab", "baba")])


@pytest.fixture
def p3() -> Presentation:
    """<a,b,c,d,e,x | abcde=edcba>: C(5); x occurs in no relation."""
    return Presentation.from_letters("abcdex", [("abcde", "edcba")])


@pytest.fixture
def p4() -> Presentation:
    """<a,b,c | c=ab>: c is redundant."""
    return Presentation.from_letters("abc", [("c", "ab")])


@pytest.fixture
def p5() -> Presentation:
    """<a,b,c,d,e | abc=ade>: not left cancellative."""
    return Presentation.from_letters("abcde", [("abc", "ade")])
