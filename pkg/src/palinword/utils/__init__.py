"""Shared types, exceptions and test helpers."""

from typing import Any

from .errors import (
    DegenerateImageError,
    ExtensionPeriodError,
    InstabilityError,
    InsufficientDataError,
    LemmaInapplicableError,
    NotACodeError,
    NotProlongableError,
    PalinwordError,
    RatioBoundError,
    SearchBudgetError,
    StabilizationError,
    UsageError,
)
from .types import (
    BispecialKind,
    ClaimStatus,
    Crossing,
    ExitCode,
    Outcome,
    Provenance,
    VisitAction,
)

__all__ = [
    "PalinwordError",
    "UsageError",
    "InsufficientDataError",
    "NotProlongableError",
    "LemmaInapplicableError",
    "DegenerateImageError",
    "NotACodeError",
    "ExtensionPeriodError",
    "SearchBudgetError",
    "StabilizationError",
    "InstabilityError",
    "RatioBoundError",
    "Outcome",
    "ExitCode",
    "Crossing",
    "BispecialKind",
    "Provenance",
    "VisitAction",
    "ClaimStatus",
]

_FIXTURE_HELPERS = ("create_constraints_file", "create_morphism_file")


def __getattr__(name: str) -> Any:
    """Lazy import of the test helpers, which need pytest."""
    if name in _FIXTURE_HELPERS:
        from . import fixtures

        return getattr(fixtures, name)
    raise AttributeError(f"module '{__name__}' has no attribute '{name}'")
