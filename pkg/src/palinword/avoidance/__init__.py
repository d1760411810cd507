"""Constrained exhaustive search over words."""

from .backtrack import SearchCertificate, backtrack, merge_certificates
from .constraints import ConstraintSet, PalindromeQuota
from .counting import count_words, enumerate_words, growth_estimate
from .engine import WalkCheckpoint, WalkResult, symmetry_applies, walk
from .extension import ExtensionReport, extend_right, extension_report
from .insertion import XyxyxReport, xyxyx_exponent_check
from .lemma import EquivalenceReport, verify_equivalence_lemma, word_properties
from .presets import F_ETA, F_GAMMA, SIXTEEN_PALINDROMES, preset, preset_names
from .satisfies import SatisfactionReport, satisfies
from .state import SearchState, Violation

__all__ = [
    "ConstraintSet",
    "PalindromeQuota",
    "SearchState",
    "Violation",
    "SatisfactionReport",
    "satisfies",
    "walk",
    "WalkResult",
    "WalkCheckpoint",
    "symmetry_applies",
    "SearchCertificate",
    "backtrack",
    "merge_certificates",
    "count_words",
    "enumerate_words",
    "growth_estimate",
    "ExtensionReport",
    "extend_right",
    "extension_report",
    "XyxyxReport",
    "xyxyx_exponent_check",
    "EquivalenceReport",
    "verify_equivalence_lemma",
    "word_properties",
    "F_ETA",
    "F_GAMMA",
    "SIXTEEN_PALINDROMES",
    "preset",
    "preset_names",
]
