"""
Tests for words, alphabets, Parikh vectors and transforms.
"""

import pytest

from palinword.words import (
    Alphabet,
    ParikhVector,
    Word,
    erase_letter,
    factors,
    insert_marker,
    is_palindrome,
    letter_char,
    letter_index,
    parikh,
    permute,
    reverse,
)


class TestAlphabet:
    """Test alphabets and letter encoding."""

    def test_letter_encoding(self):
        """Test that letters print as digits."""
        assert letter_char(0) == "0"
        assert letter_char(9) == "9"
        assert letter_index("3") == 3

    def test_out_of_range(self):
        """Test encoding errors."""
        with pytest.raises(ValueError):
            letter_char(64)
        with pytest.raises(ValueError):
            letter_index(" ")

    def test_alphabet_of(self):
        """Test the smallest alphabet containing a word."""
        assert Alphabet.of("0120").size == 3
        assert Alphabet.of("", minimum=2).size == 2
        assert Alphabet(4).letters == "0123"

    def test_validate(self):
        """Test rejection of foreign letters."""
        assert Alphabet(3).validate("0122") == "0122"
        with pytest.raises(ValueError, match="outside the alphabet"):
            Alphabet(3).validate("0123")

    def test_invalid_size(self):
        """Test that alphabets are non-empty."""
        with pytest.raises(ValueError):
            Alphabet(0)


class TestWord:
    """Test the word type."""

    def test_word_is_str(self):
        """Test that words behave as strings."""
        w = Word("0121")
        assert w == "0121"
        assert w.alphabet.size == 3
        assert w.letters == (0, 1, 2, 1)

    def test_parse_empty(self):
        """Test the empty word syntax."""
        assert Word.parse("ε") == ""
        assert Word.parse(" eps ") == ""

    def test_from_letters(self):
        """Test building from letter indices."""
        assert Word.from_letters([2, 0, 1], Alphabet(3)) == "201"

    def test_elementary_operations(self):
        """Test reversal, palindromes, factors and renaming."""
        assert reverse("0112") == "2110"
        assert is_palindrome("01210")
        assert not is_palindrome("0112")
        assert is_palindrome("")
        assert list(factors("01010", 2)) == ["01", "10"]
        assert permute("0120", [1, 2, 0]) == "1201"


class TestParikh:
    """Test Parikh vectors."""

    def test_counts(self):
        """Test letter counts."""
        assert parikh("01213012", Alphabet(4)).counts == (2, 3, 2, 1)
        assert parikh("0").counts == (1,)

    def test_partial_order(self):
        """Test componentwise dominance."""
        small = ParikhVector((1, 0, 2))
        large = ParikhVector((1, 1, 2))
        assert small <= large
        assert small < large
        assert not large <= small
        assert not ParikhVector((2, 0, 0)) <= ParikhVector((1, 5, 5))
        assert (small + large).total == 7

    def test_mismatched_sizes(self):
        """Test comparison across alphabets."""
        with pytest.raises(ValueError):
            ParikhVector((1,)) <= ParikhVector((1, 2))


class TestTransforms:
    """Test insertion and erasure."""

    def test_insert_marker(self):
        """Test inserting 2 inside every 10."""
        tm = "0110100110010110"
        assert insert_marker(tm, "10", "2") == "011201200112001201120"

    def test_insert_then_erase(self):
        """Test that erasing the marker restores the word."""
        tm = "0110100110010110"
        assert erase_letter(insert_marker(tm, "10", "2"), "2") == tm

    def test_invalid_marker(self):
        """Test marker validation."""
        with pytest.raises(ValueError):
            insert_marker("0101", "101", "2")
        with pytest.raises(ValueError):
            insert_marker("0101", "10", "1")
