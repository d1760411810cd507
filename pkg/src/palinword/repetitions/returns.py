"""
Occurrences and return words.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, List

from ..utils.errors import InsufficientDataError
from ..words.word import WordLike

logger = logging.getLogger(__name__)


def occurrences(text: WordLike, w: WordLike) -> List[int]:
    """Start positions of every (possibly overlapping) occurrence of ``w``."""
    text, w = str(text), str(w)
    if not w:
        return list(range(len(text) + 1))
    found: List[int] = []
    i = text.find(w)
    while i != -1:
        found.append(i)
        i = text.find(w, i + 1)
    return found


@dataclass(frozen=True)
class ReturnWordSet:
    """Return words to ``anchor`` observed in a prefix."""

    anchor: str
    returns: FrozenSet[str]

    def sorted(self) -> List[str]:
        return sorted(self.returns, key=lambda r: (len(r), r))

    def __contains__(self, item: object) -> bool:
        return item in self.returns

    def __len__(self) -> int:
        return len(self.returns)


def return_words(prefix: WordLike, anchor: WordLike) -> ReturnWordSet:
    """Words spanning consecutive occurrences of ``anchor`` in ``prefix``.

    The partial return after the last occurrence is discarded.
    """
    prefix, anchor = str(prefix), str(anchor)
    starts = occurrences(prefix, anchor)
    if len(starts) < 2:
        raise InsufficientDataError(
            f"{anchor!r} occurs {len(starts)} time(s) in the prefix, need at least 2"
        )
    found = frozenset(prefix[i:j] for i, j in zip(starts, starts[1:]))
    logger.debug(
        f"{len(found)} return words to {anchor!r} from {len(starts)} occurrences"
    )
    return ReturnWordSet(anchor, found)
