"""
Letter patterns: patterns whose variables stand for single, pairwise distinct
letters.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from ..words.word import WordLike


@dataclass(frozen=True)
class LetterPattern:
    """Pattern such as ``abaca``, stored as variable indices ``(0,1,0,2,0)``."""

    symbols: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.symbols:
            raise ValueError("A letter pattern has at least one symbol")
        used = sorted(set(self.symbols))
        if used != list(range(len(used))):
            raise ValueError(f"Pattern variables must be 0..k-1, got {self.symbols}")

    @classmethod
    def parse(cls, text: str) -> "LetterPattern":
        """Parse ``"abcacba"``; variables are renamed by first occurrence."""
        text = text.strip()
        if not text or not text.isalpha() or not text.islower():
            raise ValueError(f"Malformed letter pattern {text!r}")
        names: Dict[str, int] = {}
        for ch in text:
            names.setdefault(ch, len(names))
        return cls(tuple(names[ch] for ch in text))

    def __len__(self) -> int:
        return len(self.symbols)

    @property
    def variables(self) -> int:
        return max(self.symbols) + 1

    def matches(self, factor: WordLike) -> bool:
        """``factor`` is an image of the pattern under an injective assignment."""
        if len(factor) != len(self.symbols):
            return False
        forward: Dict[int, str] = {}
        backward: Dict[str, int] = {}
        for var, ch in zip(self.symbols, factor):
            if forward.setdefault(var, ch) != ch:
                return False
            if backward.setdefault(ch, var) != var:
                return False
        return True

    def matches_suffix(self, text: WordLike) -> bool:
        n = len(self.symbols)
        return len(text) >= n and self.matches(text[len(text) - n :])

    def first_occurrence(self, w: WordLike) -> Optional[int]:
        n = len(self.symbols)
        for i in range(len(w) - n + 1):
            if self.matches(w[i : i + n]):
                return i
        return None

    def __str__(self) -> str:
        return "".join(chr(ord("a") + v) for v in self.symbols)


def letter_pattern_occurs(w: WordLike, p: LetterPattern) -> bool:
    """True iff some factor of ``w`` is an occurrence of ``p``."""
    return p.first_occurrence(w) is not None
