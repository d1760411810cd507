"""
Exponents of ``xyxyx`` after inserting 2 inside every ``10``.

Deleting every 2 from a ternary 9/4-free word with six palindromes leaves a
binary word; a repetition ``xyxyx`` with ``|y| < 2|x|`` in that binary word
becomes ``U = XYXYX`` after reinsertion.  For short ``x`` this is settled by
enumeration: every such ``U`` has exponent greater than 9/4.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Tuple

from ..repetitions.repetition import Repetition
from ..words.transforms import insert_marker

logger = logging.getLogger(__name__)

NINE_QUARTERS = Fraction(9, 4)


@dataclass(frozen=True)
class XyxyxReport:
    candidates: int
    min_ratio: Optional[Fraction]
    counterexample: Optional[Tuple[str, str]] = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def _binary_words(length: int) -> Iterator[str]:
    for letters in itertools.product("01", repeat=length):
        yield "".join(letters)


def xyxyx_exponent_check(
    max_x: int = 6, bound: Fraction = NINE_QUARTERS
) -> XyxyxReport:
    """Check every ``xyxyx`` with ``1 <= |x| <= max_x`` and ``|y| < 2|x|``
    free of ``000`` and ``111``."""
    candidates = 0
    min_ratio: Optional[Fraction] = None
    for x_len in range(1, max_x + 1):
        for x in _binary_words(x_len):
            big_x = insert_marker(x, "10", "2")
            for y_len in range(2 * x_len):
                for y in _binary_words(y_len):
                    word = x + y + x + y + x
                    if "000" in word or "111" in word:
                        continue
                    candidates += 1
                    u = insert_marker(word, "10", "2")
                    twice_period = len(u) - len(big_x)
                    period = twice_period // 2
                    periodic = twice_period % 2 == 0 and Repetition(
                        0, period, len(u)
                    ).holds_in(u)
                    ratio = Fraction(len(u), period) if period else None
                    if not periodic or ratio is None or ratio <= bound:
                        logger.warning(f"xyxyx counterexample: x={x!r}, y={y!r}")
                        return XyxyxReport(candidates, min_ratio, (x, y))
                    if min_ratio is None or ratio < min_ratio:
                        min_ratio = ratio
    logger.info(f"{candidates} xyxyx candidates, smallest exponent {min_ratio}")
    return XyxyxReport(candidates, min_ratio)
