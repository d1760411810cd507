"""
Freeness checks restricted to repetitions ending at the last position.

The backtracking search extends a word that is already free by one letter,
so only repetitions that end at the new position need to be examined.
"""

from typing import Optional

from ..words.word import WordLike
from .repetition import Repetition
from .threshold import Threshold


def violation_at_end(
    w: WordLike, threshold: Threshold, end: Optional[int] = None
) -> Optional[Repetition]:
    """Shortest-period violating repetition ending at position ``end``.

    ``end`` defaults to ``len(w)``.  The returned repetition is extended to
    the left as far as the period allows.
    """
    text = str(w)
    n = len(text) if end is None else end
    p = 1
    while True:
        need = threshold.min_violating_length(p)
        if need > n:
            return None
        start = n - need
        if text[start : n - p] == text[start + p : n]:
            while start > 0 and text[start - 1] == text[start - 1 + p]:
                start -= 1
            return Repetition(start, p, n - start)
        p += 1


def extend_free_check(w: WordLike, threshold: Threshold, suffix_len: int = 1) -> bool:
    """True iff no violating repetition ends within the last ``suffix_len``
    positions of ``w``.

    When ``w`` minus those letters is already free this equals a full
    freeness check.
    """
    n = len(w)
    for end in range(max(0, n - suffix_len) + 1, n + 1):
        if violation_at_end(w, threshold, end) is not None:
            return False
    return True
