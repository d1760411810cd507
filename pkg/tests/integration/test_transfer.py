"""
Integration tests for the freeness transfer checks.
"""

from fractions import Fraction

import pytest

from palinword.morphisms import load_morphism
from palinword.morphisms.transfer import (
    mrs_bound,
    verify_cubefree_transfer_nonuniform,
    verify_transfer,
)
from palinword.repetitions import Threshold
from palinword.utils.errors import LemmaInapplicableError

SEVEN_QUARTERS_PLUS = Threshold(Fraction(7, 4), plus=True)
SQUARE_PLUS = Threshold(2, plus=True)


class TestTransferBound:
    """Test the source length of the transfer check."""

    @pytest.mark.parametrize(
        "a,b,q,expected",
        [
            (Fraction(7, 4), 2, 4, Fraction(16)),
            (Fraction(7, 4), Fraction(9, 4), 25, Fraction(9)),
            (Fraction(7, 4), Fraction(52, 27), 609, Fraction(416, 19)),
        ],
    )
    def test_values(self, a, b, q, expected):
        """Test exact bounds."""
        assert mrs_bound(a, b, q) == expected

    @pytest.mark.parametrize("a,b,q", [(2, 2, 4), (1, 2, 4), (Fraction(7, 4), 2, 0)])
    def test_invalid(self, a, b, q):
        """Test the preconditions of the bound."""
        with pytest.raises(ValueError):
            mrs_bound(a, b, q)


class TestVerifyTransfer:
    """Test verify_transfer on built-in morphisms."""

    def test_four_uniform(self):
        """Test the 4-uniform morphism at its computed length."""
        certificate = verify_transfer(
            load_morphism("mrs-4"), SEVEN_QUARTERS_PLUS, SQUARE_PLUS
        )
        assert certificate.passed
        assert certificate.bound == 16
        assert certificate.length == 16
        assert certificate.words_checked > certificate.leaves_checked > 0
        record = certificate.record()
        assert record["result"] == "pass"
        assert record["q"] == 4
        assert record["t"] == "16"

    def test_parallel_matches_sequential(self):
        """Test that splitting the source tree counts the same words."""
        m = load_morphism("mrs-4")
        sequential = verify_transfer(m, SEVEN_QUARTERS_PLUS, SQUARE_PLUS, 10)
        split = verify_transfer(m, SEVEN_QUARTERS_PLUS, SQUARE_PLUS, 10, jobs=2)
        assert split.passed == sequential.passed
        assert split.words_checked == sequential.words_checked

    def test_counterexample(self):
        """Test the least failing source word."""
        strict = Threshold(Fraction(7, 4), plus=True)
        certificate = verify_transfer(
            load_morphism("mrs-4"), SEVEN_QUARTERS_PLUS, strict, max_length=3
        )
        assert not certificate.passed
        assert certificate.counterexample == "0"
        assert certificate.record()["result"] == "fail"
        assert "witness" in certificate.record()

    @pytest.mark.parametrize("name", ["f", "thue-morse"])
    def test_inapplicable(self, name):
        """Test morphisms that are not uniform and synchronizing."""
        with pytest.raises(LemmaInapplicableError):
            verify_transfer(load_morphism(name), Threshold(3), SQUARE_PLUS, 4)


class TestCubefreeTransfer:
    """Test the non-uniform check on binary cube-free words."""

    def test_short_words(self):
        """Test that images of cube-free words are 10/3+-free."""
        certificate = verify_cubefree_transfer_nonuniform(length=12)
        assert certificate.passed
        assert certificate.words_checked > 0
        assert certificate.record()["q"] == "non-uniform"

    def test_strict_threshold_fails(self):
        """Test that the images contain squares."""
        certificate = verify_cubefree_transfer_nonuniform(
            beta=SQUARE_PLUS, length=8
        )
        assert not certificate.passed
