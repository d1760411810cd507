"""
Full (non-incremental) constraint checking.
"""

from dataclasses import dataclass
from typing import Optional

from ..patterns.overpal import find_overpal
from ..repetitions.exponents import is_free
from ..words.palindromes import distinct_palindromes
from ..words.word import WordLike
from .constraints import ConstraintSet
from .state import SQUARE, Violation


@dataclass(frozen=True)
class SatisfactionReport:
    """Truthy iff every active constraint holds."""

    violation: Optional[Violation] = None

    @property
    def ok(self) -> bool:
        return self.violation is None

    def __bool__(self) -> bool:
        return self.ok


def satisfies(w: WordLike, c: ConstraintSet) -> SatisfactionReport:
    """Check ``w`` against every active constraint of ``c``."""
    text = c.alphabet.validate(str(w))

    for word in sorted(c.forbidden_factors, key=lambda f: (text.find(f), len(f), f)):
        if word in text:
            return SatisfactionReport(Violation("forbidden_factors", word))
    if c.square_free:
        report = is_free(text, SQUARE)
        if not report and report.witness is not None:
            witness = report.witness.factor(text)
            return SatisfactionReport(Violation("square_free", witness))
    if c.threshold is not None:
        report = is_free(text, c.threshold)
        if not report and report.witness is not None:
            witness = report.witness.factor(text)
            return SatisfactionReport(Violation("threshold", witness))
    for pattern in sorted(c.letter_patterns, key=str):
        start = pattern.first_occurrence(text)
        if start is not None:
            factor = text[start : start + len(pattern)]
            return SatisfactionReport(Violation("letter_patterns", factor))

    palindromes = distinct_palindromes(text)
    if c.max_palindromes is not None and len(palindromes) > c.max_palindromes:
        return SatisfactionReport(
            Violation("max_palindromes", palindromes[c.max_palindromes])
        )
    allowed = c.allowed_palindrome_set()
    if allowed is not None:
        for p in palindromes:
            if p not in allowed:
                return SatisfactionReport(Violation("allowed_palindromes", p))
    quota = c.palindrome_quota
    if quota is not None:
        hits = [p for p in palindromes if p in quota.words]
        if len(hits) > quota.at_most:
            witness = hits[quota.at_most]
            return SatisfactionReport(Violation("palindrome_quota", witness))
    if c.forbid_overpals:
        found = find_overpal(text)
        if found is not None:
            start, length = found
            return SatisfactionReport(
                Violation("forbid_overpals", text[start : start + length])
            )
    return SatisfactionReport()
