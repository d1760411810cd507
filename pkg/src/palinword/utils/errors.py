"""
Exception hierarchy.

Every concrete error also derives from the builtin it refines, so callers
may catch either the package error or the builtin.
"""


class PalinwordError(Exception):
    """Base class of all package errors."""


class UsageError(PalinwordError, ValueError):
    """Malformed user input (command line, constraint or morphism files)."""


class InsufficientDataError(PalinwordError, ValueError):
    """A prefix does not contain enough occurrences of a factor."""


class NotProlongableError(PalinwordError, ValueError):
    """A morphism cannot be iterated into a fixed point from the given seed."""


class LemmaInapplicableError(PalinwordError, ValueError):
    """The freeness-transfer lemma needs a uniform synchronizing morphism."""


class DegenerateImageError(PalinwordError, ValueError):
    """The image of one extension letter is a suffix (or prefix) of another."""


class NotACodeError(PalinwordError, ValueError):
    """The images of a morphism do not form a code."""


class ExtensionPeriodError(PalinwordError, RuntimeError):
    """Extension pairs along an f-image chain do not repeat with period 3."""


class SearchBudgetError(PalinwordError, RuntimeError):
    """A search that must be exhaustive ran out of budget."""


class StabilizationError(PalinwordError, RuntimeError):
    """Factor sets kept changing up to the maximal prefix length."""


class InstabilityError(PalinwordError, RuntimeError):
    """A computed quantity changed between two prefix doublings."""


class RatioBoundError(PalinwordError, AssertionError):
    """A bispecial ratio exceeded the asserted bound."""

    def __init__(self, family: str, n: int, ratio: object, bound: object) -> None:
        super().__init__(
            f"Ratio bound violated in family {family} at n={n}: {ratio} > {bound}"
        )
        self.family = family
        self.n = n
        self.ratio = ratio
        self.bound = bound
