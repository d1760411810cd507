"""
Ternary words with few palindromes.

Repetition and palindrome analysis of finite words, exhaustive backtracking
under combined constraints, morphism transfer checks, factor languages with
their Rauzy graphs, and critical exponents from bispecial factors.  The
``palinword`` command turns each check into a reproducible certificate.
"""

__version__ = "0.1.0"

from . import config, utils
from .morphisms import Morphism, resolve_source
from .repetitions import Threshold, is_free, max_exponent
from .words import distinct_palindromes, palindrome_count

__all__ = [
    "__version__",
    "config",
    "utils",
    "Morphism",
    "resolve_source",
    "Threshold",
    "is_free",
    "max_exponent",
    "distinct_palindromes",
    "palindrome_count",
]
