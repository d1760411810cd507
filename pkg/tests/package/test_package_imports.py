"""
Tests for package imports.
"""

import importlib

import pytest

import palinword

SUBPACKAGES = [
    "avoidance",
    "bispecial",
    "cli",
    "config",
    "generators",
    "languages",
    "morphisms",
    "patterns",
    "repetitions",
    "search",
    "utils",
    "words",
]


class TestPackageImports:
    """Test that the public names import."""

    def test_top_level_exports(self):
        """Test the names exported by the package."""
        for name in palinword.__all__:
            assert hasattr(palinword, name), name

    @pytest.mark.parametrize("name", SUBPACKAGES)
    def test_subpackage_exports(self, name):
        """Test that every subpackage exports what it lists."""
        module = importlib.import_module(f"palinword.{name}")
        for export in getattr(module, "__all__", []):
            assert hasattr(module, export), f"{name}.{export}"

    def test_console_entry_point(self):
        """Test the function behind the palinword command."""
        from palinword.cli.main import main

        assert callable(main)

    def test_top_level_usage(self):
        """Test a check through the top-level names only."""
        word = palinword.resolve_source("periodic-012").prefix(30)
        assert palinword.palindrome_count(word) == 4
        assert palinword.is_free("0120", palinword.Threshold(2))
