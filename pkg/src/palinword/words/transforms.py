"""
Parikh vectors and the letter insertion/erasure transforms.
"""

from typing import List, Optional

from .alphabet import Alphabet, ParikhVector, letter_index
from .word import WordLike


def parikh(w: WordLike, alphabet: Optional[Alphabet] = None) -> ParikhVector:
    """Occurrence count of each letter of ``w``."""
    alphabet = alphabet or Alphabet.of(w)
    counts = [0] * alphabet.size
    for ch in w:
        k = letter_index(ch)
        if k >= alphabet.size:
            raise ValueError(
                f"Letter {ch!r} is outside the alphabet of size {alphabet.size}"
            )
        counts[k] += 1
    return ParikhVector(tuple(counts))


def insert_marker(w: WordLike, trigger: WordLike, marker: str) -> str:
    """Insert ``marker`` in the middle of every occurrence of ``trigger``.

    Args:
        w: Word to transform
        trigger: Two-letter factor, e.g. ``"10"``
        marker: Letter to insert, distinct from both trigger letters
    """
    if len(trigger) != 2:
        raise ValueError(f"Trigger must have length 2, got {trigger!r}")
    if len(marker) != 1 or marker in trigger:
        raise ValueError(f"Marker {marker!r} must be one letter not in {trigger!r}")
    first, second = trigger[0], trigger[1]
    out: List[str] = []
    for i, ch in enumerate(w):
        out.append(ch)
        if ch == first and i + 1 < len(w) and w[i + 1] == second:
            out.append(marker)
    return "".join(out)


def erase_letter(w: WordLike, letter: str) -> str:
    """Remove every occurrence of ``letter``."""
    return str(w).replace(letter, "")
