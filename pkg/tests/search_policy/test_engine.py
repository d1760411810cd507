"""
Tests for the tree walker and its checkpoints.
"""

import json

import pytest

from palinword.avoidance import ConstraintSet, WalkCheckpoint, walk
from palinword.utils.types import VisitAction
from palinword.words import Alphabet


@pytest.fixture
def ternary_square_free():
    return ConstraintSet(Alphabet(3), square_free=True, name="sqfree")


def _collect(found):
    def visit(state):
        found.append(state.text)
        return VisitAction.CONTINUE

    return visit


class TestWalk:
    """Test walk."""

    def test_lexicographic_order(self):
        """Test that words are visited depth first in letter order."""
        found = []
        c = ConstraintSet(Alphabet(2), square_free=True)
        result = walk(c, _collect(found))
        assert found == ["", "0", "01", "010", "1", "10", "101"]
        assert result.completed
        assert not result.budget_hit

    def test_symmetry(self):
        """Test that only first-occurrence ordered words are visited."""
        found = []
        c = ConstraintSet(Alphabet(2), square_free=True)
        walk(c, _collect(found), symmetry=True)
        assert found == ["", "0", "01", "010"]

    def test_max_length(self, ternary_square_free):
        """Test that nodes at the maximal length are not extended."""
        found = []
        walk(ternary_square_free, _collect(found), max_length=2)
        assert max(len(w) for w in found) == 2
        assert len([w for w in found if len(w) == 2]) == 6

    def test_skip_root(self, ternary_square_free):
        """Test that skipping the root ends the walk."""
        result = walk(ternary_square_free, lambda state: VisitAction.SKIP)
        assert result.completed
        assert result.nodes == 0

    def test_stop(self, ternary_square_free):
        """Test that a visitor can abort the walk."""

        def visit(state):
            return VisitAction.STOP if len(state) == 4 else VisitAction.CONTINUE

        result = walk(ternary_square_free, visit)
        assert result.stopped
        assert result.frontier == "0102"
        assert not result.budget_hit

    def test_budget(self, ternary_square_free):
        """Test that the node budget bounds an infinite tree."""
        result = walk(ternary_square_free, lambda state: VisitAction.CONTINUE, budget=7)
        assert result.nodes == 7
        assert result.budget_hit
        assert result.frontier

    def test_prefix(self, ternary_square_free):
        """Test a walk rooted at a prefix."""
        found = []
        walk(ternary_square_free, _collect(found), max_length=4, prefix="010")
        assert found == ["010", "0102"]

    def test_bad_prefix(self, ternary_square_free):
        """Test that the root must satisfy the constraints."""
        with pytest.raises(ValueError, match="violates"):
            walk(ternary_square_free, lambda state: VisitAction.CONTINUE, prefix="00")


class TestWalkCheckpoint:
    """Test checkpoint files."""

    def test_resume_continues_walk(self, temp_dir, ternary_square_free):
        """Test that a resumed walk visits exactly the remaining nodes."""
        everything = []
        walk(ternary_square_free, _collect(everything), max_length=6)

        path = str(temp_dir / "walk.json")
        first = []
        result = walk(
            ternary_square_free,
            _collect(first),
            max_length=6,
            budget=20,
            checkpoint_path=path,
        )
        assert result.budget_hit
        checkpoint = WalkCheckpoint.load(path)
        assert checkpoint.nodes == 20
        assert checkpoint.constraints == ternary_square_free.describe()

        rest = []
        resumed = walk(
            ternary_square_free, _collect(rest), budget=None, resume=checkpoint
        )
        assert resumed.completed
        assert first + rest == everything

    def test_missing(self, temp_dir):
        """Test loading a checkpoint that does not exist."""
        with pytest.raises(FileNotFoundError):
            WalkCheckpoint.load(str(temp_dir / "none.json"))

    def test_wrong_format(self, temp_dir):
        """Test loading a foreign JSON file."""
        path = temp_dir / "other.json"
        path.write_text(json.dumps({"format": "other/1"}), encoding="utf-8")
        with pytest.raises(ValueError, match="Unsupported checkpoint format"):
            WalkCheckpoint.load(str(path))
