"""
Tests for occurrences and return words.
"""

import pytest

from palinword.repetitions import occurrences, return_words
from palinword.utils.errors import InsufficientDataError


class TestOccurrences:
    """Test occurrence listings."""

    def test_overlapping(self):
        """Test overlapping occurrences."""
        assert occurrences("01010", "010") == [0, 2]

    def test_empty_anchor(self):
        """Test that ε occurs everywhere."""
        assert occurrences("01", "") == [0, 1, 2]


class TestReturnWords:
    """Test return words."""

    def test_periodic(self):
        """Test a periodic word."""
        returns = return_words("0120120120", "0")
        assert returns.returns == frozenset({"012"})
        assert "012" in returns
        assert len(returns) == 1

    def test_partial_return_dropped(self):
        """Test that the tail after the last occurrence is ignored."""
        returns = return_words("0102002", "0")
        assert returns.sorted() == ["0", "01", "02"]

    def test_too_few_occurrences(self):
        """Test the error for a single occurrence."""
        with pytest.raises(InsufficientDataError):
            return_words("0122", "0")

    def test_thue_morse_returns(self):
        """Test the return words to 0 in the Thue-Morse word."""
        from palinword.morphisms import resolve_source

        tm = resolve_source("thue-morse").prefix(4096)
        assert return_words(tm, "0").returns == frozenset({"0", "01", "011"})
