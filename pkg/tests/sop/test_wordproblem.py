"""Tests for the C(4) word problem solver and the brute-force oracle."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sop.core.exceptions import PreconditionError, PresentationError
from sop.generic.rng import make_rng, trial_rng
from sop.generic.sampling import SampleConfig, sample_presentation
from sop.pieces.complements import complement_class
from sop.pieces.conditions import check_c
from sop.pieces.table import compute_pieces
from sop.presentation.models import EMPTY_WORD, Presentation, shortlex_key
from sop.presentation.operations import sorted_relation_words
from sop.wordproblem.models import CaseLabel, OracleVerdict
from sop.wordproblem.oracle import bfs_oracle, explore_class
from sop.wordproblem.solver import (
    clean_overlap_prefix,
    explain_equivalence,
    first_relation_prefix,
    is_possible_prefix,
    rho,
    words_equivalent,
)
from tests.conftest import word

P3 = Presentation.from_letters("abcdex", [("abcde", "edcba")])

# Length-preserving C(4) presentations have finite congruence classes, so
# exhaustive search gives the exact answer.
LENGTH_PRESERVING = [
    (
        Presentation.from_letters("abcdefgh", [("abcd", "efgh")]),
        ["abcdabcd", "efghabcd", "aabcdh"],
    ),
    (
        Presentation.from_letters("abcdefgh", [("abcd", "efgh"), ("aceg", "bdfh")]),
        ["abcdabcd", "efghaceg", "abcdbdfh"],
    ),
]

chunks = st.sampled_from(["abcde", "edcba", "a", "e", "x", "bcd", "ab", "de"])
p3_words = st.lists(chunks, max_size=4).map(lambda parts: word(P3, "".join(parts)))

side = st.text(alphabet="abcdef", min_size=4, max_size=8)
c4_presentations = (
    st.lists(st.tuples(side, side), min_size=1, max_size=2)
    .map(lambda pairs: Presentation.from_letters("abcdef", pairs))
    .filter(lambda p: check_c(p, 4))
)


def class_of(w, p):
    visited, _, exhausted = explore_class(w, p, max_len=len(w), max_nodes=100_000)
    assert exhausted
    return visited


class TestRelationPrefixes:
    """Tests for relation and clean overlap prefixes."""

    def test_first_relation_prefix(self, p3):
        """Test the shortest relation prefix of abcdex."""
        prefix = first_relation_prefix(word(p3, "abcdex"), p3)
        assert prefix is not None
        assert prefix.leading == EMPTY_WORD
        assert prefix.x == word(p3, "a")
        assert prefix.y == word(p3, "bcd")
        assert prefix.prefix == word(p3, "abcd")

    def test_leading_part(self, p3):
        """Test a leading letter before the prefix."""
        prefix = first_relation_prefix(word(p3, "dabcdex"), p3)
        assert prefix.leading == word(p3, "d")
        assert prefix.length == 5

    def test_absent(self, p3):
        """Test no prefix without a relation head."""
        assert first_relation_prefix(word(p3, "bcd"), p3) is None
        assert clean_overlap_prefix(word(p3, "bcd"), p3) is None

    def test_clean(self, p3):
        """Test clean overlap prefixes of P3 words."""
        prefix = clean_overlap_prefix(word(p3, "abcde"), p3)
        assert prefix.clean
        assert prefix.prefix == word(p3, "abcd")

    def test_overlapping_heads(self):
        """Test a head starting inside the middle word moves the prefix."""
        p = Presentation.from_letters(
            "abcdefghklmnop", [("abcde", "eklma"), ("cdfgh", "hnopc")]
        )
        # heads abcd and cdfg; cdfg starts inside the middle word bcd of abcde
        w = word(p, "abcdfg")
        first = first_relation_prefix(w, p)
        assert first.source_relation_word == word(p, "abcde")
        assert not first.clean
        clean = clean_overlap_prefix(w, p)
        assert clean.leading == word(p, "ab")
        assert clean.x == word(p, "cd")
        assert clean.source_relation_word == word(p, "cdfgh")
        assert clean.clean

    def test_requires_c4(self):
        """Test clean overlap prefixes need C(4)."""
        p = Presentation.from_letters("abc", [("abc", "cba"), ("ab", "ba")])
        with pytest.raises(PreconditionError):
            clean_overlap_prefix(word(p, "abc"), p)


class TestRho:
    """Tests for rho."""

    @pytest.mark.parametrize("text,expected", [("bcd", -1), ("abcd", 0), ("abcdex", 2), ("xabcdex", 2)])
    def test_values(self, p3, text, expected):
        """Test rho on P3 words."""
        assert rho(word(p3, text), p3) == expected


class TestWordsEquivalent:
    """Tests for words_equivalent."""

    def test_one_rewrite(self, p3):
        """Test abcdex and edcbax via case 3."""
        trace = explain_equivalence(word(p3, "abcdex"), word(p3, "edcbax"), p3)
        assert trace.verdict
        assert trace.steps[0] == CaseLabel.CASE3
        assert trace.steps[-1] == CaseLabel.LITERAL_EQUAL

    def test_reflexive(self, p3):
        """Test identical words."""
        assert words_equivalent(word(p3, "abcde"), word(p3, "abcde"), p3)

    def test_leading_mismatch(self, p3):
        """Test aabcde and abcdea are different."""
        trace = explain_equivalence(word(p3, "aabcde"), word(p3, "abcdea"), p3)
        assert not trace.verdict
        assert trace.labels()[0] == "dump-prefix"

    def test_no_relation_word(self, p3):
        """Test words without relation prefixes are equal only literally."""
        assert not words_equivalent(word(p3, "bcd"), word(p3, "bdc"), p3)

    def test_head_without_suffix(self, p3):
        """Test abcdx differs from edcbx."""
        assert not words_equivalent(word(p3, "abcdx"), word(p3, "edcbx"), p3)

    def test_inside_context(self, p3):
        """Test rewriting inside a longer word."""
        assert words_equivalent(word(p3, "xabcdeabcde"), word(p3, "xedcbaedcba"), p3)

    def test_empty_words(self, p3):
        """Test the empty word."""
        assert words_equivalent(EMPTY_WORD, EMPTY_WORD, p3)
        assert not words_equivalent(EMPTY_WORD, word(p3, "x"), p3)

    def test_requires_c4(self, p2):
        """Test a C(2) presentation is rejected."""
        with pytest.raises(PreconditionError):
            words_equivalent(word(p2, "ab"), word(p2, "ab"), p2)

    def test_bad_letter(self, p3):
        """Test words must use the presentation's letters."""
        with pytest.raises(PresentationError):
            words_equivalent((0, 99), (0,), p3)

    @settings(max_examples=200, deadline=None)
    @given(p3_words, p3_words)
    def test_agrees_with_exhaustive_search(self, u, v):
        """Test the decision against the full congruence class on P3."""
        expected = len(u) == len(v) and v in class_of(u, P3)
        assert words_equivalent(u, v, P3) is expected

    @settings(max_examples=100, deadline=None)
    @given(p3_words)
    def test_class_members_equivalent(self, u):
        """Test every word in the class of u is equivalent to u, both ways."""
        for v in class_of(u, P3):
            assert words_equivalent(u, v, P3)
            assert words_equivalent(v, u, P3)

    @pytest.mark.parametrize("p,texts", LENGTH_PRESERVING)
    def test_other_presentations(self, p, texts):
        """Test class members and non-members on further length-preserving presentations."""
        for text in texts:
            u = word(p, text)
            members = class_of(u, p)
            for v in members:
                assert words_equivalent(u, v, p)
        u = word(p, "abcd")
        assert not words_equivalent(u, word(p, "abdc"), p)


class TestPossiblePrefix:
    """Tests for is_possible_prefix."""

    def test_literal_prefix(self, p3):
        """Test a literal prefix."""
        assert is_possible_prefix(word(p3, "a"), word(p3, "abcdex"), p3)

    def test_prefix_after_rewrite(self, p3):
        """Test e is a prefix of edcbax."""
        assert is_possible_prefix(word(p3, "e"), word(p3, "abcdex"), p3)

    def test_not_a_prefix(self, p3):
        """Test b is not a possible prefix of abcdex."""
        assert not is_possible_prefix(word(p3, "b"), word(p3, "abcdex"), p3)

    def test_no_relation_word(self, p3):
        """Test words without relation prefixes."""
        assert not is_possible_prefix(word(p3, "e"), word(p3, "bcd"), p3)

    def test_empty_piece(self, p3):
        """Test the empty word is a prefix of everything."""
        assert is_possible_prefix(EMPTY_WORD, word(p3, "x"), p3)

    def test_requires_piece(self, p3):
        """Test z must be a piece."""
        with pytest.raises(PreconditionError):
            is_possible_prefix(word(p3, "ab"), word(p3, "abcdex"), p3)

    @settings(max_examples=100, deadline=None)
    @given(p3_words, st.sampled_from(["", "a", "b", "c", "d", "e"]))
    def test_agrees_with_exhaustive_search(self, u, letter):
        """Test against prefixes of the whole congruence class."""
        z = word(P3, letter)
        expected = any(v[: len(z)] == z for v in class_of(u, P3))
        assert is_possible_prefix(z, u, P3) is expected


class TestOracle:
    """Tests for the bounded BFS oracle."""

    def test_found(self, p3):
        """Test a one-step equivalence is found."""
        result = bfs_oracle(word(p3, "abcdex"), word(p3, "edcbax"), p3, max_len=10, max_nodes=10_000)
        assert result.verdict == OracleVerdict.EQUIVALENT
        assert result.equivalent

    def test_not_found(self, p3):
        """Test disjoint classes are explored exhaustively."""
        result = bfs_oracle(word(p3, "aabcde"), word(p3, "abcdea"), p3, max_len=12, max_nodes=100_000)
        assert result.verdict == OracleVerdict.NOT_FOUND
        assert result.exhausted

    def test_node_budget(self, p2):
        """Test the budget stops the search."""
        result = bfs_oracle(word(p2, "abababab"), word(p2, "b"), p2, max_len=8, max_nodes=1)
        assert result.verdict == OracleVerdict.NOT_FOUND
        assert not result.exhausted
        assert result.expanded == 1


class TestLongWords:
    """Decisions on words far longer than the relations."""

    def test_thousand_rewrites(self, p3):
        """Test abcde^1000 against edcba^1000."""
        u = word(p3, "abcde" * 1000)
        v = word(p3, "edcba" * 1000)
        trace = explain_equivalence(u, v, p3)
        assert trace.verdict
        assert trace.steps.count(CaseLabel.CASE3) == 1000

    def test_thousand_rewrites_mismatch(self, p3):
        """Test a differing last letter after a thousand branch points."""
        u = word(p3, "abcde" * 1000 + "x")
        v = word(p3, "edcba" * 1000 + "e")
        assert not words_equivalent(u, v, p3)

    def test_mixed_blocks(self, p3):
        """Test alternating rewritten and kept blocks."""
        u = word(p3, "abcdex" * 600)
        v = word(p3, "edcbax abcdex".replace(" ", "") * 300)
        assert words_equivalent(u, v, p3)
        assert words_equivalent(v, u, p3)


class TestRhoDrop:
    """rho falls when a clean overlap prefix is replaced by a piece."""

    def test_sampled_presentations(self):
        """Test rho(p·w') < rho(x·y·z·w') on sampled C(4) presentations."""
        cfg = SampleConfig(alphabet_size=3, relation_count=1, length=30)
        rng = make_rng(2718)
        instances = 0
        for trial in range(400):
            p = sample_presentation(cfg, trial_rng(77, trial))
            if not check_c(p, 4):
                continue
            pieces = sorted(compute_pieces(p).pieces, key=shortlex_key)
            for r in sorted_relation_words(p):
                for _ in range(5):
                    tail = tuple(int(x) for x in rng.integers(0, 3, size=int(rng.integers(0, 9))))
                    w = r + tail
                    prefix = clean_overlap_prefix(w, p)
                    if prefix is None or prefix.leading or prefix.source_relation_word != r:
                        continue
                    piece = pieces[int(rng.integers(len(pieces)))]
                    assert rho(piece + tail, p) < rho(w, p)
                    instances += 1
        assert instances > 50


class TestEquivalenceLaws:
    """words_equivalent behaves as a congruence."""

    @settings(max_examples=100, deadline=None)
    @given(p3_words, p3_words)
    def test_symmetric(self, u, v):
        """Test u ≡ v iff v ≡ u."""
        assert words_equivalent(u, v, P3) == words_equivalent(v, u, P3)

    @settings(max_examples=60, deadline=None)
    @given(p3_words, st.data())
    def test_transitive(self, u, data):
        """Test chains through the class of u."""
        members = sorted(class_of(u, P3))
        v = data.draw(st.sampled_from(members))
        w = data.draw(st.sampled_from(members))
        assert words_equivalent(u, v, P3) and words_equivalent(v, w, P3)
        assert words_equivalent(u, w, P3)

    @settings(max_examples=60, deadline=None)
    @given(p3_words, p3_words, p3_words, st.data())
    def test_congruence(self, u, x, y, data):
        """Test u ≡ v implies x·u·y ≡ x·v·y."""
        v = data.draw(st.sampled_from(sorted(class_of(u, P3))))
        assert words_equivalent(x + u + y, x + v + y, P3)


class TestRelationWordClasses:
    """The class of a relation word is its complement class."""

    @settings(max_examples=50, deadline=None)
    @given(c4_presentations)
    def test_relation_words(self, p):
        """Test r ≡ s for relation words exactly when they are complements."""
        words = sorted_relation_words(p)
        for r in words:
            members = complement_class(r, p)
            for s in words:
                assert words_equivalent(r, s, p) == (s in members)

    @settings(max_examples=50, deadline=None)
    @given(c4_presentations)
    def test_class_is_bounded(self, p):
        """Test the explored class of a relation word stays inside its complement class."""
        for r in sorted_relation_words(p):
            visited, _, exhausted = explore_class(r, p, max_len=p.max_relation_length, max_nodes=10_000)
            assert exhausted
            assert visited == set(complement_class(r, p).members)
