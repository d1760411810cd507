"""
One-sided extensions of a fixed word.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from ..utils.types import VisitAction
from ..words.word import reverse
from .constraints import ConstraintSet
from .engine import walk
from .state import SearchState

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtensionReport:
    """How far ``word`` extends to the right and to the left.

    ``*_extra`` is the largest number of letters that could be added on that
    side within the explored bound; ``*_exhausted`` says the bound was not
    reached, so no longer extension exists at all.
    """

    word: str
    bound: int
    right_extra: int
    left_extra: int

    @property
    def right_exhausted(self) -> bool:
        return self.right_extra < self.bound

    @property
    def left_exhausted(self) -> bool:
        return self.left_extra < self.bound


def extend_right(c: ConstraintSet, word: str, extra: int) -> Optional[str]:
    """Lexicographically least extension of ``word`` by ``extra`` letters."""
    found = []
    target = len(word) + extra

    def visit(state: SearchState) -> VisitAction:
        if len(state) >= target:
            found.append(state.text)
            return VisitAction.STOP
        return VisitAction.CONTINUE

    walk(c, visit, max_length=target, prefix=word)
    return found[0] if found else None


def _longest_right(c: ConstraintSet, word: str, bound: int) -> int:
    longest = [0]
    target = len(word) + bound

    def visit(state: SearchState) -> VisitAction:
        longest[0] = max(longest[0], len(state) - len(word))
        return VisitAction.STOP if len(state) >= target else VisitAction.CONTINUE

    walk(c, visit, max_length=target, prefix=word)
    return longest[0]


def extension_report(c: ConstraintSet, word: str, bound: int) -> ExtensionReport:
    """Explore extensions on both sides up to ``bound`` letters.

    The left side is explored on reversals, so ``c`` must be closed under
    reversal (square-freeness, thresholds, palindrome bounds are).
    """
    closed = all(reverse(f) in c.forbidden_factors for f in c.forbidden_factors)
    if not closed or c.letter_patterns:
        raise ValueError("Left extensions need a reversal-closed constraint set")
    right = _longest_right(c, word, bound)
    left = _longest_right(c, reverse(word), bound)
    logger.debug(f"{word!r} extends by {left} letters left and {right} right")
    return ExtensionReport(word, bound, right, left)
