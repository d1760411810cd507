"""
Palindromes, overpals and the letter pattern abcacba on square-free words.

On square-free ternary words the following implications hold for finite
words: if every palindrome is among the sixteen palindromes of the word with
16 palindromes, the word has no overpal factor; a word without overpals
avoids ``abcacba`` (an overpal ``a x a x^R a`` with ``x = bc``).  On long
factors of uniformly recurrent words the three properties coincide.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Tuple

from ..patterns.letter_pattern import LetterPattern, letter_pattern_occurs
from ..patterns.overpal import contains_overpal
from ..repetitions.exponents import is_free
from ..words.palindromes import distinct_palindromes
from .presets import SIXTEEN_PALINDROMES
from .state import SQUARE

logger = logging.getLogger(__name__)

ABCACBA = LetterPattern.parse("abcacba")


@dataclass(frozen=True)
class WordProperties:
    word: str
    within_sixteen: bool
    overpal_free: bool
    abcacba_free: bool

    @property
    def consistent(self) -> bool:
        return (not self.within_sixteen or self.overpal_free) and (
            not self.overpal_free or self.abcacba_free
        )

    @property
    def joint(self) -> bool:
        return self.within_sixteen == self.overpal_free == self.abcacba_free


@dataclass
class EquivalenceReport:
    checked: int = 0
    records: List[WordProperties] = field(default_factory=list)
    violations: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def word_properties(w: str) -> WordProperties:
    return WordProperties(
        word=w,
        within_sixteen=set(distinct_palindromes(w)) <= SIXTEEN_PALINDROMES,
        overpal_free=not contains_overpal(w),
        abcacba_free=not letter_pattern_occurs(w, ABCACBA),
    )


def verify_equivalence_lemma(
    sample_words: Iterable[str], joint_words: Iterable[str] = ()
) -> EquivalenceReport:
    """Check the finite-word implications on ``sample_words`` and all three
    properties jointly on ``joint_words``.

    Raises:
        ValueError: A word is not ternary square-free
    """
    report = EquivalenceReport()
    for w, joint in [(w, False) for w in sample_words] + [
        (w, True) for w in joint_words
    ]:
        if set(w) - set("012"):
            raise ValueError(f"Not a ternary word: {w!r}")
        if not is_free(w, SQUARE):
            raise ValueError(f"Not square-free: {w!r}")
        props = word_properties(w)
        report.checked += 1
        report.records.append(props)
        if props.within_sixteen and not props.overpal_free:
            report.violations.append((w, "sixteen palindromes but an overpal"))
        if props.overpal_free and not props.abcacba_free:
            report.violations.append((w, "no overpal but abcacba"))
        if joint and not props.joint:
            report.violations.append((w, "properties disagree"))
    logger.debug(f"Checked {report.checked} words, {len(report.violations)} violations")
    return report
