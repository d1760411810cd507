"""Letter patterns and overpals."""

from .letter_pattern import LetterPattern, letter_pattern_occurs
from .overpal import contains_overpal, find_overpal, is_overpal

__all__ = [
    "LetterPattern",
    "letter_pattern_occurs",
    "contains_overpal",
    "find_overpal",
    "is_overpal",
]
