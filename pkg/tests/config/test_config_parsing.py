"""
Tests for configuration parsing.
"""

from unittest.mock import Mock

from palinword.config import (
    DEFAULT_NODE_BUDGET,
    BudgetConfig,
    PalinwordConfig,
    SearchPolicy,
    parse_config,
)
from palinword.config.config_parsing import parse_count, parse_flag


class TestParseFlag:
    """Test boolean parsing."""

    def test_words(self):
        """Test yes/no style strings."""
        assert parse_flag("yes", False) is True
        assert parse_flag("ON", False) is True
        assert parse_flag("0", True) is False
        assert parse_flag("off", True) is False

    def test_fallback(self):
        """Test that unknown values keep the default."""
        assert parse_flag("maybe", True) is True
        assert parse_flag(None, False) is False
        assert parse_flag(False, True) is False


class TestParseCount:
    """Test integer parsing."""

    def test_plain_and_scientific(self):
        """Test integer text and exponent notation."""
        assert parse_count("42", 1) == 42
        assert parse_count("1e6", 1) == 1_000_000
        assert parse_count(7, 1) == 7

    def test_malformed_and_small(self):
        """Test that malformed or too small values give the default."""
        assert parse_count("many", 3) == 3
        assert parse_count("0", 3, minimum=1) == 3
        assert parse_count(True, 3) == 3


class TestParseConfig:
    """Test configuration parsing."""

    def test_parse_empty_config(self):
        """Test parsing empty configuration."""
        config = parse_config({})
        assert isinstance(config, PalinwordConfig)
        assert config.budget.nodes == DEFAULT_NODE_BUDGET

    def test_parse_mock_object(self):
        """Test that non-dict input gives the defaults."""
        config = parse_config(Mock())
        assert isinstance(config, PalinwordConfig)

    def test_parse_full_config(self):
        """Test parsing every section."""
        config = parse_config(
            {
                "budget": {"nodes": "1e5", "seconds": 30},
                "jobs": "4",
                "long_mode": "yes",
                "checkpoint": {"path": "walk.json", "every": 100},
                "debug_logging": True,
                "search_policy": {"symmetry": "no", "split_depth": 5},
            }
        )
        assert config.budget.nodes == 100_000
        assert config.budget.seconds == 30
        assert config.jobs == 4
        assert config.long_mode is True
        assert config.checkpoint.path == "walk.json"
        assert config.checkpoint.every == 100
        assert config.debug_logging is True
        assert config.search_policy.symmetry is False
        assert config.search_policy.split_depth == 5

    def test_parse_plain_values(self):
        """Test shorthand forms of budget and checkpoint."""
        config = parse_config({"budget": 500, "checkpoint": "state.json"})
        assert config.budget.nodes == 500
        assert config.checkpoint.path == "state.json"

    def test_parse_objects(self):
        """Test that configuration objects pass through."""
        budget = BudgetConfig(nodes=9)
        policy = SearchPolicy(split_depth=2)
        config = parse_config({"budget": budget, "search_policy": policy})
        assert config.budget is budget
        assert config.search_policy is policy

    def test_parse_malformed_values(self):
        """Test that malformed values fall back to defaults."""
        config = parse_config({"jobs": "several", "budget": {"nodes": "lots"}})
        assert config.jobs == 1
        assert config.budget.nodes == DEFAULT_NODE_BUDGET
