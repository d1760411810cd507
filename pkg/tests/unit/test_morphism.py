"""
Tests for morphisms, their text format and composition.
"""

import pytest

from palinword.morphisms import Morphism, compose, identity
from palinword.words import Alphabet


class TestMorphism:
    """Test applying morphisms."""

    def test_apply_and_power(self):
        """Test images and iterates."""
        tm = Morphism(["01", "10"])
        assert tm("0") == "01"
        assert tm.apply("011") == "011010"
        assert tm.power(3, "0") == "01101001"
        assert tm.power(0, "01") == "01"

    def test_properties(self):
        """Test uniformity and image lengths."""
        m = Morphism(["012", "0012"], Alphabet(3))
        assert m.uniform_length is None
        assert m.max_image_length == 4
        assert m.min_image_length == 3
        assert not m.is_endomorphism
        assert Morphism(["01", "10"]).uniform_length == 2

    def test_invalid(self):
        """Test erasing and foreign letters."""
        with pytest.raises(ValueError, match="erasing"):
            Morphism(["01", ""])
        with pytest.raises(ValueError):
            Morphism([])
        with pytest.raises(ValueError):
            Morphism(["01", "13"], Alphabet(3))
        with pytest.raises(ValueError):
            Morphism(["01", "10"]).power(-1, "0")

    def test_source_letter_validation(self):
        """Test that letters outside the source alphabet are rejected."""
        with pytest.raises(ValueError):
            Morphism(["01", "10"]).apply("012")

    def test_compose_and_identity(self):
        """Test composition."""
        tm = Morphism(["01", "10"], name="tm")
        square = compose(tm, tm)
        assert square.images == ("0110", "1001")
        assert square.name == "tm∘tm"
        assert compose(tm, identity(2)).images == tm.images

    def test_permuted(self):
        """Test conjugation by a renaming."""
        m = Morphism(["01", "2", "0"])
        swapped = m.permuted([1, 0, 2])
        assert swapped.images == ("2", "10", "1")
        assert swapped.apply("1") == "10"


class TestMorphismParse:
    """Test the morphism text format."""

    def test_parse_lines(self):
        """Test image lines with comments."""
        m = Morphism.parse("# Thue-Morse\n0 -> 01\n1 -> 10  # swap\n")
        assert m.images == ("01", "10")

    def test_parse_variables_and_continuations(self):
        """Test let definitions and indented continuation lines."""
        text = "let p = 01\n    2\n0 -> {p}0\n1 -> {p}1\n    12\n2 -> 2\n"
        m = Morphism.parse(text)
        assert m.images == ("0120", "012112", "2")

    def test_format_round_trip(self):
        """Test that format() output parses back."""
        m = Morphism(["0012", "0112", "0122"])
        assert Morphism.parse(m.format()) == m

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "0 -> 01\n0 -> 10\n",
            "0 -> 01\n2 -> 10\n",
            "zero: 01\n",
            "    01\n",
            "0 -> {q}1\n1 -> 0\n",
        ],
    )
    def test_parse_errors(self, text):
        """Test malformed morphism files."""
        with pytest.raises(ValueError):
            Morphism.parse(text)

    def test_target_size(self):
        """Test an explicit target alphabet."""
        m = Morphism.parse("0 -> 01\n1 -> 0\n", target_size=3)
        assert m.target_alphabet == Alphabet(3)
        assert not m.is_endomorphism
