"""Tests for the cancellativity criteria."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sop.cancel.criterion import (
    CancellativityReport,
    cancellativity_report,
    is_left_cancellative,
    is_right_cancellative,
    left_witness,
    strong_left_cancellative,
)
from sop.core.exceptions import PreconditionError
from sop.pieces.conditions import check_c, check_strong_c
from sop.presentation.models import Presentation
from tests.conftest import word

letters = st.text(alphabet="abcdef", min_size=4, max_size=8)
c4_presentations = (
    st.lists(st.tuples(letters, letters), min_size=1, max_size=2)
    .map(lambda pairs: Presentation.from_letters("abcdef", pairs))
    .filter(lambda p: check_c(p, 4))
)


class TestLeftCancellative:
    """Tests for is_left_cancellative."""

    def test_p5(self, p5):
        """Test abc = ade shares the first letter a."""
        left, witness = is_left_cancellative(p5)
        assert not left
        assert witness == (word(p5, "abc"), word(p5, "ade"))

    def test_p3(self, p3):
        """Test first letters a and e differ."""
        assert is_left_cancellative(p3) == (True, None)

    def test_p1(self, p1):
        """Test P1 is left cancellative."""
        assert is_left_cancellative(p1) == (True, None)

    def test_closure_witness(self):
        """Test a witness that only appears in the closure."""
        p = Presentation.from_letters("abcdefghij", [("abc", "fgh"), ("fgh", "aij")])
        left, witness = is_left_cancellative(p)
        assert not left
        assert witness is not None and witness[0][0] == witness[1][0]

    def test_requires_c4(self, p2):
        """Test C(4) is needed."""
        with pytest.raises(PreconditionError):
            is_left_cancellative(p2)

    def test_strong_form(self, p3, p5):
        """Test the criterion for strongly C(4) presentations."""
        assert strong_left_cancellative(p3)
        assert not strong_left_cancellative(p5)

    @given(c4_presentations)
    def test_strong_form_agrees(self, p):
        """Test the strong-form and closure criteria agree on strongly C(4) input."""
        if check_strong_c(p, 4):
            assert strong_left_cancellative(p) == (left_witness(p) is None)
        assert is_left_cancellative(p)[0] == (left_witness(p) is None)


class TestRightCancellative:
    """Tests for is_right_cancellative."""

    def test_p5(self, p5):
        """Test last letters c and e differ."""
        assert is_right_cancellative(p5) == (True, None)

    def test_mirror_of_p5(self):
        """Test cba = eda shares the last letter a."""
        p = Presentation.from_letters("abcde", [("cba", "eda")])
        right, witness = is_right_cancellative(p)
        assert not right
        assert witness == (word(p, "cba"), word(p, "eda"))

    def test_p1(self, p1):
        """Test P1 is right cancellative."""
        assert is_right_cancellative(p1)[0]


class TestCancellativityReport:
    """Tests for cancellativity_report."""

    def test_p1(self, p1):
        """Test P1 is cancellative."""
        report = cancellativity_report(p1)
        assert (report.left, report.right, report.cancellative) == (True, True, True)

    def test_p5(self, p5):
        """Test P5 fails on the left only."""
        report = cancellativity_report(p5)
        assert (report.left, report.right, report.cancellative) == (False, True, False)
        assert report.left_witness is not None

    def test_both_sides_fail(self):
        """Test abc = ade, fgh = ijh fails both ways."""
        p = Presentation.from_letters("abcdefghij", [("abc", "ade"), ("fgh", "ijh")])
        report = cancellativity_report(p)
        assert not report.left and not report.right

    def test_witness_consistency(self):
        """Test a false flag needs a witness."""
        with pytest.raises(ValueError):
            CancellativityReport(left=False, right=True)

    def test_serializes_cancellative(self, p1):
        """Test the combined flag is part of the dump."""
        assert cancellativity_report(p1).model_dump()["cancellative"] is True
