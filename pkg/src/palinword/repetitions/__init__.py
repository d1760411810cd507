"""Exact repetition detection, freeness checks and return words."""

from .exponents import is_free, max_exponent, repetitions_at_least
from .incremental import extend_free_check, violation_at_end
from .lce import LongestCommonExtension, lcp_array, suffix_array
from .repetition import FreenessReport, Repetition
from .returns import ReturnWordSet, occurrences, return_words
from .threshold import Threshold

__all__ = [
    "Threshold",
    "Repetition",
    "FreenessReport",
    "repetitions_at_least",
    "max_exponent",
    "is_free",
    "violation_at_end",
    "extend_free_check",
    "LongestCommonExtension",
    "suffix_array",
    "lcp_array",
    "ReturnWordSet",
    "occurrences",
    "return_words",
]
