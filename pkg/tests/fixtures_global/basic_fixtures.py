"""
Basic fixtures for temporary directories and input files.
"""

import tempfile
from pathlib import Path
from typing import Sequence

import pytest


@pytest.fixture
def temp_dir():
    """Create a temporary directory for test files."""
    with tempfile.TemporaryDirectory() as temp_dir:
        yield Path(temp_dir)


def create_test_constraints_file(temp_dir: Path, filename: str, text: str) -> Path:
    """Helper function to create a constraints file."""
    path = temp_dir / filename
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    return path


def create_test_morphism_file(
    temp_dir: Path, filename: str, images: Sequence[str]
) -> Path:
    """Helper function to create a morphism file."""
    path = temp_dir / filename
    lines = [f"{k} -> {image}" for k, image in enumerate(images)]
    with open(path, "w", encoding="utf-8") as f:
        f.write("\n".join(lines) + "\n")
    return path
