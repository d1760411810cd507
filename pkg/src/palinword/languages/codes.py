"""
Codes and unique decomposition over morphism images.
"""

import logging
from typing import FrozenSet, Iterable, List, Optional, Set

from ..morphisms.morphism import Morphism
from ..utils.errors import NotACodeError
from ..words.alphabet import letter_char
from ..words.word import WordLike

logger = logging.getLogger(__name__)


def _quotients(left: Iterable[str], right: Iterable[str]) -> Set[str]:
    """Non-empty ``w`` with ``uw`` in ``right`` for some ``u`` in ``left``."""
    out = set()
    for u in left:
        for v in right:
            if len(v) > len(u) and v.startswith(u):
                out.add(v[len(u) :])
    return out


def is_code(words: Iterable[str]) -> bool:
    """Sardinas-Patterson test for unique decipherability."""
    words = list(words)
    if any(not w for w in words) or len(set(words)) != len(words):
        return False
    code = frozenset(words)
    seen: Set[FrozenSet[str]] = set()
    dangling = frozenset(_quotients(code, code))
    while dangling and dangling not in seen:
        if dangling & code:
            return False
        seen.add(dangling)
        dangling = frozenset(_quotients(code, dangling) | _quotients(dangling, code))
    return True


def decompose_over_code(w: WordLike, m: Morphism) -> Optional[str]:
    """The source word ``u`` with ``m(u) = w``, or ``None``.

    Raises:
        NotACodeError: When the images of ``m`` are not a code
    """
    if not is_code(m.images):
        raise NotACodeError(f"Images of {m!r} are not a code")
    w = str(w)
    # reachable[i]: a letter sequence decoding w[:i]
    reachable: List[Optional[str]] = [None] * (len(w) + 1)
    reachable[0] = ""
    for i in range(len(w)):
        decoded = reachable[i]
        if decoded is None:
            continue
        for k, image in enumerate(m.images):
            j = i + len(image)
            if j <= len(w) and reachable[j] is None and w.startswith(image, i):
                reachable[j] = decoded + letter_char(k)
    if reachable[len(w)] is None:
        logger.debug(f"{w[:40]!r} has no decomposition over {m!r}")
    return reachable[len(w)]
