"""
Tests for palindromic factors and the eertree.
"""

from itertools import product

from palinword.words import (
    PalindromeTree,
    distinct_palindromes,
    is_palindrome,
    palindrome_count,
)


def naive_palindromes(w):
    found = {""}
    for i in range(len(w)):
        for j in range(i + 1, len(w) + 1):
            if is_palindrome(w[i:j]):
                found.add(w[i:j])
    return sorted(found, key=lambda p: (len(p), p))


class TestDistinctPalindromes:
    """Test palindrome listings and counts."""

    def test_small_word(self):
        """Test a listing including the empty word."""
        assert distinct_palindromes("0110") == ["", "0", "1", "11", "0110"]

    def test_count_includes_empty_word(self):
        """Test that ε is counted."""
        assert palindrome_count("") == 1
        assert palindrome_count("012012012") == 4

    def test_against_naive_ternary(self):
        """Test every ternary word up to length 7 against a direct scan."""
        for n in range(8):
            for letters in product("012", repeat=n):
                w = "".join(letters)
                assert distinct_palindromes(w) == naive_palindromes(w), w


class TestPalindromeTree:
    """Test incremental updates with undo."""

    def test_append_reports_new_palindromes(self):
        """Test the value returned by append."""
        tree = PalindromeTree()
        assert tree.append("0") == "0"
        assert tree.append("1") == "1"
        assert tree.append("0") == "010"
        assert tree.append("1") == "101"
        assert tree.append("0") == "01010"
        assert tree.count == 6

    def test_repeated_palindrome_not_reported(self):
        """Test that a known palindrome is not new."""
        tree = PalindromeTree("00")
        assert tree.append("0") == "000"
        tree = PalindromeTree("0120")
        assert tree.append("1") is None
        assert tree.append("2") is None
        assert tree.count == 4

    def test_pop_restores_state(self):
        """Test that undo matches a fresh tree on the prefix."""
        word = "0120210120102012"
        tree = PalindromeTree(word)
        for n in range(len(word), 0, -1):
            assert tree.count == PalindromeTree(word[:n]).count
            assert tree.palindromes() == distinct_palindromes(word[:n])
            tree.pop()
        assert tree.count == 1
        assert len(tree) == 0

    def test_suffix_palindromes(self):
        """Test lengths of palindromic suffixes."""
        tree = PalindromeTree("0101")
        assert list(tree.suffix_palindrome_lengths()) == [3, 1]
