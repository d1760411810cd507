"""
Tests for exhaustive backtracking and its certificates.
"""

import pytest

from palinword.avoidance import (
    ConstraintSet,
    WalkCheckpoint,
    backtrack,
    preset,
    satisfies,
)
from palinword.search import SearchPolicy
from palinword.utils.types import Outcome
from palinword.words import Alphabet


@pytest.fixture
def ternary_square_free():
    return ConstraintSet(Alphabet(3), square_free=True, name="sqfree")


class TestBacktrack:
    """Test backtrack outcomes."""

    def test_exhausted(self):
        """Test that binary square-free words stop at length 3."""
        certificate = backtrack(ConstraintSet(Alphabet(2), square_free=True), 10)
        assert certificate.outcome is Outcome.EXHAUSTED
        assert certificate.longest_length == 3
        assert certificate.witness == "010"
        assert certificate.record() == {
            "outcome": "EXHAUSTED",
            "target": 10,
            "symmetry": "first-occurrence",
            "longest_length": 3,
            "witness": "010",
        }

    def test_three_palindromes(self):
        """Test that at most three palindromes allow two letters."""
        certificate = backtrack(preset("pal-3"), 5)
        assert certificate.outcome is Outcome.EXHAUSTED
        assert certificate.longest_length == 2
        assert certificate.witness == "00"

    def test_reached(self, ternary_square_free):
        """Test that long ternary square-free words exist."""
        certificate = backtrack(ternary_square_free, 30)
        assert certificate.outcome is Outcome.REACHED
        assert len(certificate.witness) == 30
        assert satisfies(certificate.witness, ternary_square_free)
        assert certificate.witness.startswith("0102")

    def test_budget(self, ternary_square_free):
        """Test that a spent budget makes no claim."""
        certificate = backtrack(ternary_square_free, 30, budget=5)
        assert certificate.outcome is Outcome.BUDGET
        record = certificate.record()
        assert "witness" not in record
        assert record["frontier_depth"] == certificate.frontier_depth > 0

    def test_invalid_target(self, ternary_square_free):
        """Test that the target must be positive."""
        with pytest.raises(ValueError):
            backtrack(ternary_square_free, 0)

    def test_symmetry_off(self):
        """Test the witness without symmetry reduction."""
        c = ConstraintSet(Alphabet(2), square_free=True)
        certificate = backtrack(c, 10, policy=SearchPolicy(symmetry=False))
        assert certificate.witness == "010"
        assert certificate.record()["symmetry"] == "none"


class TestParallelBacktrack:
    """Test that splitting the tree does not change the answer."""

    def test_reached_matches_sequential(self, ternary_square_free):
        """Test the witness of a split search."""
        sequential = backtrack(ternary_square_free, 24)
        split = backtrack(
            ternary_square_free, 24, policy=SearchPolicy(split_depth=3, jobs=2)
        )
        assert split.outcome is Outcome.REACHED
        assert split.witness == sequential.witness

    def test_exhausted_matches_sequential(self):
        """Test the longest word of a split search."""
        c = ConstraintSet(Alphabet(3), max_palindromes=4, square_free=True)
        sequential = backtrack(c, 40)
        split = backtrack(c, 40, policy=SearchPolicy(split_depth=2, jobs=2))
        assert split.outcome is sequential.outcome
        assert split.longest_length == sequential.longest_length
        assert split.witness == sequential.witness


class TestCheckpointResume:
    """Test resuming a budget-limited search."""

    def test_resume(self, temp_dir, ternary_square_free):
        """Test that a resumed search ends where an uninterrupted one does."""
        full = backtrack(ternary_square_free, 20)
        path = str(temp_dir / "search.json")
        partial = backtrack(
            ternary_square_free,
            20,
            budget=10,
            policy=SearchPolicy(checkpoint_path=path),
        )
        assert partial.outcome is Outcome.BUDGET
        checkpoint = WalkCheckpoint.load(path)
        assert checkpoint.symmetry is True
        resumed = backtrack(ternary_square_free, 20, budget=None, resume=checkpoint)
        assert resumed.outcome is Outcome.REACHED
        assert resumed.witness == full.witness
        assert resumed.nodes_expanded == full.nodes_expanded
