"""
Maximal repetitions and exponent computations.

``repetitions_at_least`` reports every maximal repetition (run) whose exponent
reaches a lower bound.  Short words use a direct scan per period; long words
sample each period at a stride that every qualifying run must hit and extend
the hits in both directions with the longest-common-extension oracle.
"""

import logging
import math
from fractions import Fraction
from typing import Iterable, List, Set, Tuple, Union

from ..words.word import WordLike
from .lce import LongestCommonExtension
from .repetition import FreenessReport, Repetition
from .threshold import Threshold

logger = logging.getLogger(__name__)

NAIVE_LIMIT = 512


def _naive_runs(text: str, lower: Fraction) -> List[Repetition]:
    n = len(text)
    found: List[Repetition] = []
    for p in range(1, n):
        run = 0
        for i in range(n - p):
            if text[i] == text[i + p]:
                run += 1
                continue
            if run and Fraction(run + p, p) >= lower:
                found.append(Repetition(i - run, p, run + p))
            run = 0
        if run and Fraction(run + p, p) >= lower:
            found.append(Repetition(n - p - run, p, run + p))
    return found


def _sampled_runs(text: str, lower: Fraction) -> List[Repetition]:
    n = len(text)
    lce = LongestCommonExtension(text)
    seen: Set[Tuple[int, int]] = set()
    found: List[Repetition] = []
    p = 1
    while math.ceil(lower * p) <= n:
        need = math.ceil(lower * p)
        stride = max(1, need - p)
        for x in range(0, n - p, stride):
            if text[x] != text[x + p]:
                continue
            back = lce.backward(x, x + p)
            start = x - back
            if (start, p) in seen:
                continue
            length = back + lce.forward(x, x + p) + p
            seen.add((start, p))
            if length >= need:
                found.append(Repetition(start, p, length))
        p += 1
    return found


def repetitions_at_least(w: WordLike, lower: Union[Fraction, int]) -> List[Repetition]:
    """Maximal repetitions of ``w`` with exponent at least ``lower``.

    Each run is reported once per period, sorted by start then period.
    """
    lower = Fraction(lower)
    if lower <= 1:
        raise ValueError(f"Lower bound must exceed 1, got {lower}")
    text = str(w)
    if len(text) <= NAIVE_LIMIT:
        runs = _naive_runs(text, lower)
    else:
        runs = _sampled_runs(text, lower)
    runs.sort(key=lambda r: (r.start, r.period))
    logger.debug(f"{len(runs)} runs of exponent >= {lower} in length {len(text)}")
    return runs


def _best(runs: Iterable[Repetition]) -> Repetition:
    return min(runs, key=lambda r: (-r.exponent, r.start, r.period))


def max_exponent(w: WordLike) -> Tuple[Fraction, Repetition]:
    """Largest exponent of a non-empty factor of ``w`` with a witness.

    Ties are broken by smallest start, then smallest period.
    """
    text = str(w)
    if not text:
        raise ValueError("The empty word has no exponent")
    n = len(text)
    lower = Fraction(2)
    while True:
        runs = repetitions_at_least(text, lower)
        if runs:
            best = _best(runs)
            return best.exponent, best
        if lower - 1 <= Fraction(1, n):
            break
        lower = 1 + (lower - 1) / 2
    return Fraction(1), Repetition(0, 1, 1)


def is_free(w: WordLike, threshold: Threshold) -> FreenessReport:
    """Check that no factor of ``w`` violates ``threshold``."""
    runs = [
        r
        for r in repetitions_at_least(w, threshold.value)
        if threshold.violated_by(r.exponent)
    ]
    if not runs:
        return FreenessReport(True)
    return FreenessReport(False, min(runs, key=lambda r: (r.start, r.period)))
