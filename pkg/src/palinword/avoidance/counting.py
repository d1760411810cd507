"""
Counting and listing the words of a constraint set.
"""

import logging
from typing import List

from ..utils.types import VisitAction
from .constraints import ConstraintSet
from .engine import walk
from .state import SearchState

logger = logging.getLogger(__name__)


def count_words(c: ConstraintSet, n_max: int) -> List[int]:
    """Number of words of each length ``1..n_max`` satisfying ``c``.

    No symmetry reduction is applied; entry ``k`` counts length ``k + 1``.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    counts = [0] * (n_max + 1)

    def visit(state: SearchState) -> VisitAction:
        counts[len(state)] += 1
        return VisitAction.CONTINUE

    result = walk(c, visit, max_length=n_max)
    logger.debug(f"Counted words up to length {n_max} in {result.nodes} nodes")
    return counts[1:]


def growth_estimate(counts: List[int], step: int = 1) -> float:
    """``(c_n / c_{n-step}) ** (1/step)`` on the last entries of ``counts``."""
    if step < 1 or len(counts) <= step:
        raise ValueError(f"Need more than {step} counts for a growth estimate")
    last, earlier = counts[-1], counts[-1 - step]
    if earlier == 0:
        raise ValueError("Cannot estimate growth from a zero count")
    return float((last / earlier) ** (1.0 / step))


def enumerate_words(c: ConstraintSet, length: int, symmetry: bool = False) -> List[str]:
    """Every word of exactly ``length`` letters satisfying ``c``, in
    lexicographic order."""
    found: List[str] = []

    def visit(state: SearchState) -> VisitAction:
        if len(state) == length:
            found.append(state.text)
        return VisitAction.CONTINUE

    walk(c, visit, max_length=length, symmetry=symmetry)
    return found
