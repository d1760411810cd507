"""
Pytest fixtures for projects that drive palinword from their own tests.
"""

import tempfile
from pathlib import Path
from typing import Generator, Sequence

import pytest


@pytest.fixture
def temp_input_dir() -> Generator[Path, None, None]:
    """Create a temporary directory for constraint and morphism files."""
    with tempfile.TemporaryDirectory() as temp_dir:
        yield Path(temp_dir)


@pytest.fixture
def sample_constraints() -> str:
    """Ternary square-free words avoiding 010 with at most 16 palindromes."""
    return "\n".join(
        [
            "# square-free, 010 forbidden",
            "name = sqfree-010-16",
            "alphabet = 3",
            "square_free = yes",
            "forbid = 010",
            "max_palindromes = 16",
            "",
        ]
    )


@pytest.fixture
def constraints_file(temp_input_dir: Path, sample_constraints: str) -> Path:
    """Write ``sample_constraints`` to a file."""
    return create_constraints_file(temp_input_dir, "sqfree-010-16", sample_constraints)


# Helper functions for creating input files
def create_constraints_file(temp_dir: Path, name: str, text: str) -> Path:
    """Create a constraints file ``<name>.constraints``."""
    path = temp_dir / f"{name}.constraints"
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    return path


def create_morphism_file(temp_dir: Path, name: str, images: Sequence[str]) -> Path:
    """Create a morphism file with one ``<letter> -> <image>`` line per image."""
    path = temp_dir / f"{name}.morphism"
    lines = [f"{k} -> {image}" for k, image in enumerate(images)]
    with open(path, "w", encoding="utf-8") as f:
        f.write("\n".join(lines) + "\n")
    return path
