"""
Extension profiles and bispecial factors read from prefixes.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import DefaultDict, Dict, FrozenSet, List, Optional, Set, Tuple

from ..languages.factors import MAX_PREFIX_LENGTH, STABLE_START_FACTOR
from ..morphisms.generate import WordSource
from ..repetitions.returns import occurrences
from ..utils.errors import InsufficientDataError, StabilizationError
from ..utils.types import BispecialKind
from ..words.word import WordLike

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtensionProfile:
    """Left, right and two-sided extensions of a factor."""

    word: str
    left: FrozenSet[str]
    right: FrozenSet[str]
    bi: FrozenSet[Tuple[str, str]]

    @property
    def b(self) -> int:
        return len(self.bi) - len(self.left) - len(self.right) + 1

    @property
    def left_special(self) -> bool:
        return len(self.left) > 1

    @property
    def right_special(self) -> bool:
        return len(self.right) > 1

    @property
    def bispecial(self) -> bool:
        return self.left_special and self.right_special

    @property
    def kind(self) -> Optional[BispecialKind]:
        """Weak, ordinary or strong; ``None`` when not bispecial."""
        if not self.bispecial:
            return None
        if self.b < 0:
            return BispecialKind.WEAK
        if self.b == 0:
            return BispecialKind.ORDINARY
        return BispecialKind.STRONG

    def __str__(self) -> str:
        left = ",".join(sorted(self.left))
        right = ",".join(sorted(self.right))
        return f"{self.word or 'ε'}: L={{{left}}} R={{{right}}} b={self.b}"


def extension_profile(prefix: WordLike, w: WordLike) -> ExtensionProfile:
    """Extensions of ``w`` over its occurrences with a letter on both sides.

    Raises:
        InsufficientDataError: When no such occurrence exists
    """
    prefix, w = str(prefix), str(w)
    bi = set()
    for i in occurrences(prefix, w):
        j = i + len(w)
        if i >= 1 and j < len(prefix):
            bi.add((prefix[i - 1], prefix[j]))
    if not bi:
        raise InsufficientDataError(f"{w!r} has no two-sided occurrence in the prefix")
    return ExtensionProfile(
        word=w,
        left=frozenset(a for a, _ in bi),
        right=frozenset(c for _, c in bi),
        bi=frozenset(bi),
    )


def _profiles(text: str, length: int) -> Dict[str, ExtensionProfile]:
    """Profiles of every length-``length`` factor with two-sided context."""
    grouped: DefaultDict[str, Set[Tuple[str, str]]] = defaultdict(set)
    for u in {text[i : i + length + 2] for i in range(len(text) - length - 1)}:
        grouped[u[1:-1]].add((u[0], u[-1]))
    return {
        w: ExtensionProfile(
            w,
            frozenset(a for a, _ in bi),
            frozenset(c for _, c in bi),
            frozenset(bi),
        )
        for w, bi in grouped.items()
    }


def bispecial_profiles(prefix: WordLike, max_len: int) -> List[ExtensionProfile]:
    """Profiles of the bispecial factors of length at most ``max_len``,
    ordered by length, then lexicographically."""
    text = str(prefix)
    found: List[ExtensionProfile] = []
    for length in range(max_len + 1):
        profiles = _profiles(text, length)
        found.extend(profiles[w] for w in sorted(profiles) if profiles[w].bispecial)
    logger.debug(f"{len(found)} bispecial factors up to length {max_len}")
    return found


def enumerate_bispecial(prefix: WordLike, max_len: int) -> List[str]:
    """Bispecial factors of length at most ``max_len``, shortest first."""
    return [p.word for p in bispecial_profiles(prefix, max_len)]


def stable_bispecial_prefix(
    source: WordSource,
    max_len: int,
    start: Optional[int] = None,
    max_prefix: int = MAX_PREFIX_LENGTH,
) -> Tuple[int, List[ExtensionProfile]]:
    """Bispecial profiles read from prefixes that double until two
    consecutive doublings change nothing, with the final prefix length."""
    n = start or max(STABLE_START_FACTOR * (max_len + 2), 64)
    current = bispecial_profiles(source.prefix(n), max_len)
    unchanged = 0
    while unchanged < 2:
        n *= 2
        if n > max_prefix:
            raise StabilizationError(
                f"Bispecial factors of {source.name} up to length {max_len} "
                f"still changing at prefix length {n // 2}"
            )
        grown = bispecial_profiles(source.prefix(n), max_len)
        unchanged = unchanged + 1 if grown == current else 0
        current = grown
    logger.info(
        f"{len(current)} bispecial factors of {source.name} up to length "
        f"{max_len}, stable at prefix length {n}"
    )
    return n, current


def stable_bispecial_profiles(
    source: WordSource,
    max_len: int,
    start: Optional[int] = None,
    max_prefix: int = MAX_PREFIX_LENGTH,
) -> List[ExtensionProfile]:
    return stable_bispecial_prefix(source, max_len, start, max_prefix)[1]
