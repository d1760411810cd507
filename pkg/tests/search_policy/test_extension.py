"""
Tests for one-sided extensions, the xyxyx enumeration and the overpal
equivalences.
"""

from fractions import Fraction

import pytest

from palinword.avoidance import (
    ConstraintSet,
    ExtensionReport,
    extend_right,
    extension_report,
    verify_equivalence_lemma,
    word_properties,
    xyxyx_exponent_check,
)
from palinword.patterns import LetterPattern
from palinword.words import Alphabet


class TestExtensions:
    """Test extend_right and extension_report."""

    def test_extend_right(self):
        """Test the least right extension."""
        c = ConstraintSet(Alphabet(3), square_free=True)
        assert extend_right(c, "0", 3) == "0102"
        assert extend_right(c, "0102", 0) == "0102"

    def test_no_extension(self):
        """Test a word that cannot be extended."""
        c = ConstraintSet(Alphabet(2), square_free=True)
        assert extend_right(c, "010", 1) is None

    def test_report(self):
        """Test both sides of a binary square-free word."""
        c = ConstraintSet(Alphabet(2), square_free=True)
        report = extension_report(c, "01", 5)
        assert report == ExtensionReport("01", 5, right_extra=1, left_extra=1)
        assert report.right_exhausted and report.left_exhausted

    def test_unbounded_side(self):
        """Test that a ternary square-free word reaches the bound."""
        c = ConstraintSet(Alphabet(3), square_free=True)
        report = extension_report(c, "0120", 8)
        assert report.right_extra == 8
        assert not report.right_exhausted

    def test_needs_reversal_closure(self):
        """Test that left extensions need a reversal-closed set."""
        c = ConstraintSet(Alphabet(3), forbidden_factors=frozenset({"01"}))
        with pytest.raises(ValueError):
            extension_report(c, "0", 2)
        c = ConstraintSet(
            Alphabet(3), letter_patterns=frozenset({LetterPattern.parse("aa")})
        )
        with pytest.raises(ValueError):
            extension_report(c, "0", 2)


class TestXyxyx:
    """Test the xyxyx exponent enumeration."""

    def test_short_x(self):
        """Test that every candidate exceeds 9/4 after insertion."""
        report = xyxyx_exponent_check(max_x=3)
        assert report.ok
        assert report.candidates > 0
        assert report.min_ratio > Fraction(9, 4)

    def test_tight_bound(self):
        """Test that a bound above every exponent yields a counterexample."""
        report = xyxyx_exponent_check(max_x=1, bound=Fraction(3))
        assert not report.ok
        assert report.counterexample is not None


class TestEquivalenceLemma:
    """Test the palindrome, overpal and abcacba implications."""

    def test_overpal_word(self):
        """Test a word that is an overpal."""
        props = word_properties("0120210")
        assert not props.within_sixteen
        assert not props.overpal_free
        assert not props.abcacba_free
        assert props.consistent and props.joint

    def test_sixteen_word(self):
        """Test a factor of the word with sixteen palindromes."""
        props = word_properties("0121021")
        assert props.within_sixteen
        assert props.overpal_free
        assert props.abcacba_free

    def test_samples(self):
        """Test a sample of square-free words."""
        report = verify_equivalence_lemma(
            ["0120210", "0121021", "010201202101"], joint_words=["0120210"]
        )
        assert report.ok
        assert report.checked == 4

    @pytest.mark.parametrize("word", ["0110", "0130"])
    def test_rejects_inputs(self, word):
        """Test that only ternary square-free words are accepted."""
        with pytest.raises(ValueError):
            verify_equivalence_lemma([word])
