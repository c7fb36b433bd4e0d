"""Tests for sampling, enumeration, estimation and counting."""

from collections import Counter
from itertools import product

import numpy as np
import pytest
from scipy.stats import chisquare

from sop.core.exceptions import ConfigurationError, EnumerationGuardError
from sop.generic.counting import count_isomorphism_types
from sop.generic.enumeration import (
    check_enumeration_guard,
    enumerate_presentations,
    presentation_count,
)
from sop.generic.estimation import (
    ProportionEstimate,
    estimate_proportion,
    evaluate_sample,
    limit_proportion,
)
from sop.generic.rng import make_rng, trial_rng
from sop.generic.sampling import LengthMode, SampleConfig, sample_presentation, split_word
from sop.generic.shapes import sample_shape, weak_composition_count, weak_compositions
from sop.presentation.models import Presentation


class TestWeakCompositions:
    """Tests for weak composition counting and listing."""

    @pytest.mark.parametrize("s,r,expected", [(3, 2, 4), (0, 5, 1), (10, 4, 286), (0, 1, 1)])
    def test_count(self, s, r, expected):
        """Test closed-form counts."""
        assert weak_composition_count(s, r) == expected

    @pytest.mark.parametrize("s,r", [(3, 2), (4, 3), (0, 2), (5, 1)])
    def test_listing_matches_count(self, s, r):
        """Test the listing is complete and duplicate-free."""
        listed = list(weak_compositions(s, r))
        assert len(listed) == len(set(listed)) == weak_composition_count(s, r)
        assert all(sum(c) == s and len(c) == r for c in listed)

    def test_big_integer(self):
        """Test exact arithmetic beyond 64 bits."""
        assert weak_composition_count(200, 40) > 2**64

    def test_invalid(self):
        """Test r must be positive."""
        with pytest.raises(ValueError):
            weak_composition_count(3, 0)


class TestSampleShape:
    """Tests for sample_shape."""

    def test_zero(self):
        """Test n = 0 gives the all-zero shape."""
        assert sample_shape(0, 4, make_rng(1)).blocks == (0, 0, 0, 0)

    def test_single_block(self):
        """Test r = 1 gives (n)."""
        assert sample_shape(7, 1, make_rng(1)).blocks == (7,)

    def test_uniform(self):
        """Test uniformity over the four shapes of (3, 2)."""
        rng = make_rng(12345)
        counts = Counter(sample_shape(3, 2, rng).blocks for _ in range(10_000))
        assert set(counts) == {(0, 3), (1, 2), (2, 1), (3, 0)}
        assert chisquare(list(counts.values())).pvalue > 0.001


class TestSamplePresentation:
    """Tests for sample_presentation."""

    def test_one_letter_shapes(self):
        """Test a = 1, k = 1, n = 2 spreads evenly over three shapes."""
        cfg = SampleConfig(alphabet_size=1, relation_count=1, length=2)
        rng = make_rng(7)
        counts = Counter(
            tuple(len(side) for side in sample_presentation(cfg, rng).relations[0].sides)
            for _ in range(6_000)
        )
        assert set(counts) == {(0, 2), (1, 1), (2, 0)}
        assert chisquare(list(counts.values())).pvalue > 0.001

    def test_sum_mode_length(self):
        """Test sum mode keeps the total relation length."""
        cfg = SampleConfig(alphabet_size=3, relation_count=2, length=17)
        rng = make_rng(3)
        for _ in range(50):
            p = sample_presentation(cfg, rng)
            assert p.sum_relation_length == 17
            assert len(p.relations) == 2
            assert len(p.alphabet) == 3

    def test_max_mode_length(self):
        """Test max mode reaches the maximum exactly."""
        cfg = SampleConfig(alphabet_size=2, relation_count=2, length=6, length_mode=LengthMode.MAX)
        rng = make_rng(3)
        for _ in range(50):
            assert sample_presentation(cfg, rng).max_relation_length == 6

    def test_deterministic(self):
        """Test a fixed seed reproduces the sample."""
        cfg = SampleConfig(alphabet_size=2, relation_count=1, length=30)
        assert sample_presentation(cfg, trial_rng(9, 4)) == sample_presentation(cfg, trial_rng(9, 4))

    def test_trial_streams_differ(self):
        """Test distinct trials draw from distinct streams."""
        a = trial_rng(9, 0).integers(0, 2**32, size=4)
        b = trial_rng(9, 1).integers(0, 2**32, size=4)
        assert not np.array_equal(a, b)

    def test_split_word(self):
        """Test cutting a word into blocks."""
        assert split_word((0, 1, 1, 0), (1, 0, 3)) == [(0,), (), (1, 1, 0)]


class TestEnumeration:
    """Tests for exhaustive enumeration."""

    @pytest.mark.parametrize("a,k,n,expected", [(2, 1, 2, 12), (1, 1, 0, 1), (2, 1, 3, 32)])
    def test_counts(self, a, k, n, expected):
        """Test enumeration sizes."""
        listed = list(enumerate_presentations(a, k, n))
        assert len(listed) == expected == presentation_count(a, k, n)
        assert len(set(listed)) == expected

    def test_shape_word_decomposition(self):
        """Test every presentation comes from one shape and one word."""
        a, k, n = 2, 2, 3
        total = sum(a**n for _ in weak_compositions(n, 2 * k))
        assert total == presentation_count(a, k, n)

    def test_brute_force_support(self):
        """Test the enumeration covers every word pair of sum length 2."""
        expected = {
            Presentation.from_letters("ab", [(u, v)])
            for size in range(3)
            for u in map("".join, product("ab", repeat=size))
            for v in map("".join, product("ab", repeat=2 - size))
        }
        assert set(enumerate_presentations(2, 1, 2)) == expected

    def test_guard(self):
        """Test the guard is checked before iteration."""
        with pytest.raises(EnumerationGuardError) as exc_info:
            enumerate_presentations(2, 1, 30, limit=1000)
        assert exc_info.value.limit == 1000
        assert check_enumeration_guard(2, 1, 2, limit=12) == 12


class TestProportionEstimate:
    """Tests for ProportionEstimate."""

    def test_from_counts(self):
        """Test the normal-approximation half width."""
        estimate = ProportionEstimate.from_counts("c4", trials=100, hits=50, z=2.0)
        assert estimate.estimate == 0.5
        assert estimate.ci95 == pytest.approx(0.1)

    def test_flagged_counted(self):
        """Test flagged samples stay in hits and trials."""
        estimate = ProportionEstimate.from_counts(
            "left-cancellative", trials=10, hits=4, flagged=2, flagged_hits=1
        )
        assert estimate.evaluated == 8
        assert estimate.estimate == 0.4
        assert estimate.conditional_estimate == pytest.approx(3 / 8)

    def test_all_flagged(self):
        """Test the conditional estimate is absent without C(4) samples."""
        estimate = ProportionEstimate.from_counts("cancellative", trials=5, hits=2, flagged=5, flagged_hits=2)
        assert estimate.estimate == 0.4
        assert estimate.conditional_estimate is None

    def test_inconsistent_counts(self):
        """Test hits cannot exceed samples."""
        with pytest.raises(ValueError):
            ProportionEstimate(
                property="c4", trials=2, evaluated=2, hits=3, estimate=1.0, ci95=0.0
            )

    def test_estimate_is_hit_rate(self):
        """Test the estimate must equal hits over trials."""
        with pytest.raises(ValueError):
            ProportionEstimate(
                property="c4", trials=4, evaluated=4, hits=1, estimate=0.5, ci95=0.0
            )

    def test_limits(self):
        """Test limiting proportions."""
        assert limit_proportion(2, 1, "left-cancellative") == 0.5
        assert limit_proportion(2, 1, "cancellative") == 0.25
        assert limit_proportion(3, 2, "right-cancellative") == pytest.approx(4 / 9)
        assert limit_proportion(2, 3, "strong-c4") == 1.0

    def test_unknown_property(self):
        """Test unknown property names."""
        with pytest.raises(ConfigurationError):
            limit_proportion(2, 1, "commutative")


class TestEstimateProportion:
    """Tests for estimate_proportion."""

    def test_evaluate_flags_non_c4(self):
        """Test cancellativity of a non-C(4) sample is flagged."""
        p = Presentation.from_letters("ab", [("ab", "a")])
        assert evaluate_sample(p, "left-cancellative") == (False, True)
        assert evaluate_sample(p, "c4") == (False, False)

    def test_reproducible(self):
        """Test equal seeds give identical estimates."""
        cfg = SampleConfig(alphabet_size=2, relation_count=1, length=20, seed=5, trials=200)
        first = estimate_proportion(cfg, "left-cancellative", workers=1)
        second = estimate_proportion(cfg, "left-cancellative", workers=1)
        assert first == second

    def test_parallel_matches_serial(self):
        """Test worker count does not change the estimate."""
        cfg = SampleConfig(alphabet_size=2, relation_count=1, length=20, seed=11, trials=120)
        serial = estimate_proportion(cfg, "cancellative", workers=1)
        parallel = estimate_proportion(cfg, "cancellative", workers=3)
        assert serial == parallel

    def test_counts_add_up(self):
        """Test evaluated and flagged samples cover every trial."""
        cfg = SampleConfig(alphabet_size=2, relation_count=1, length=12, seed=1, trials=300)
        estimate = estimate_proportion(cfg, "right-cancellative", workers=1)
        assert estimate.evaluated + estimate.flagged == 300
        assert estimate.estimate == estimate.hits / estimate.trials
        assert estimate.flagged_hits <= estimate.hits

    def test_flagged_hits_from_syntactic_verdicts(self):
        """Test hits add the C(4) verdicts and the flagged syntactic verdicts."""
        cfg = SampleConfig(alphabet_size=2, relation_count=1, length=12, seed=4, trials=150)
        estimate = estimate_proportion(cfg, "left-cancellative", workers=1)
        verdicts = [
            evaluate_sample(sample_presentation(cfg, trial_rng(4, index)), "left-cancellative")
            for index in range(150)
        ]
        assert estimate.hits == sum(hit for hit, _ in verdicts)
        assert estimate.flagged == sum(flagged for _, flagged in verdicts)
        assert estimate.flagged_hits == sum(hit and flagged for hit, flagged in verdicts)


class TestCountIsomorphismTypes:
    """Tests for count_isomorphism_types."""

    def test_two_letters_length_two(self):
        """Test a = b and b = a are the only strongly C(2) presentations."""
        counts = count_isomorphism_types(2, 1, 2)
        assert counts.total == 12
        assert counts.strong_c2_count == 2
        assert counts.iso_type_count == 1

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_one_letter(self, n):
        """Test powers of one letter are never strongly C(2)."""
        assert count_isomorphism_types(1, 1, n).strong_c2_count == 0

    @pytest.mark.parametrize("a,k,n", [(2, 1, 4), (2, 1, 5), (3, 1, 3)])
    def test_types_bounded_by_presentations(self, a, k, n):
        """Test there are no more types than strongly C(2) presentations."""
        counts = count_isomorphism_types(a, k, n)
        assert 0 < counts.iso_type_count <= counts.strong_c2_count

    def test_guard(self):
        """Test the enumeration guard."""
        with pytest.raises(EnumerationGuardError):
            count_isomorphism_types(2, 2, 12, limit=10)
