"""
Tests for the constraint file format.
"""

from fractions import Fraction

import pytest

from palinword.avoidance.presets import preset
from palinword.config import apply_overrides, load_constraints, parse_constraints
from palinword.repetitions.threshold import Threshold

from ..fixtures_global.basic_fixtures import create_test_constraints_file


class TestParseConstraints:
    """Test parsing key=value constraint text."""

    def test_full_file(self):
        """Test a file setting several keys."""
        c = parse_constraints(
            "# ternary, at most 6 palindromes\n"
            "alphabet=3\n"
            "threshold=9/4\n"
            "max_palindromes=6\n"
            "palindrome_quota=00,11,22:1\n"
        )
        assert c.alphabet.size == 3
        assert c.threshold == Threshold(Fraction(9, 4))
        assert c.max_palindromes == 6
        assert c.palindrome_quota.words == frozenset({"00", "11", "22"})
        assert c.palindrome_quota.at_most == 1

    def test_preset_with_override(self):
        """Test that later keys override a preset."""
        c = parse_constraints("preset=16-good\nmax_palindromes=15\n")
        assert c.threshold == Threshold(Fraction(52, 27))
        assert c.max_palindromes == 15

    def test_describe_round_trip(self):
        """Test that describe() output parses back to the same set."""
        original = preset("sqfree-010-16")
        assert parse_constraints("\n".join(original.describe())) == original

    def test_overpals_and_patterns(self):
        """Test the pattern and overpal keys."""
        c = parse_constraints(
            "alphabet=3\nletter_patterns=abaca,abcab\noverpals=no\n"
        )
        assert c.forbid_overpals is True
        assert {str(p) for p in c.letter_patterns} == {"abaca", "abcab"}

    @pytest.mark.parametrize(
        "text",
        [
            "threshold=2\n",
            "alphabet=3\ncolour=red\n",
            "alphabet=3\nalphabet=3\nmax_palindromes=4\n",
            "alphabet=3\nsquare_free=perhaps\n",
            "alphabet=3\nthreshold=1/2\n",
            "alphabet=3\njust words\n",
            "alphabet=3\n",
        ],
    )
    def test_malformed(self, text):
        """Test that malformed files raise ValueError."""
        with pytest.raises(ValueError):
            parse_constraints(text)


class TestLoadConstraints:
    """Test reading constraint files."""

    def test_load_file(self, temp_dir):
        """Test loading from disk."""
        path = create_test_constraints_file(
            temp_dir, "pal.constraints", "alphabet=3\nmax_palindromes=5\n"
        )
        assert load_constraints(path).max_palindromes == 5

    def test_missing_file(self, temp_dir):
        """Test the missing file error."""
        with pytest.raises(FileNotFoundError):
            load_constraints(temp_dir / "absent.constraints")


class TestApplyOverrides:
    """Test command-line overrides."""

    def test_no_overrides(self):
        """Test that empty overrides keep the set."""
        c = preset("17-good")
        assert apply_overrides(c, {}) is c

    def test_override_threshold(self):
        """Test replacing a field."""
        c = apply_overrides(preset("17-good"), {"threshold": "41/22"})
        assert c.threshold == Threshold(Fraction(41, 22))
        assert c.max_palindromes == 17

    def test_reject_preset_key(self):
        """Test that preset cannot be overridden."""
        with pytest.raises(ValueError):
            apply_overrides(preset("17-good"), {"preset": "16-good"})
