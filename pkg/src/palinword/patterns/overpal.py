"""
Overpals: words ``a x a x^R a`` with ``a`` a letter.

An overpal is exactly an odd palindrome of length at least 3 whose middle
letter equals its first letter.
"""

from typing import Optional, Tuple

from ..words.word import WordLike, is_palindrome


def is_overpal(w: WordLike) -> bool:
    n = len(w)
    return n >= 3 and n % 2 == 1 and w[0] == w[n // 2] and is_palindrome(w)


def find_overpal(w: WordLike) -> Optional[Tuple[int, int]]:
    """``(start, length)`` of the leftmost shortest overpal factor, if any."""
    best: Optional[Tuple[int, int]] = None
    n = len(w)
    for middle in range(1, n - 1):
        radius = 1
        while middle - radius >= 0 and middle + radius < n:
            if w[middle - radius] != w[middle + radius]:
                break
            if w[middle - radius] == w[middle]:
                found = (middle - radius, 2 * radius + 1)
                if best is None or (found[1], found[0]) < (best[1], best[0]):
                    best = found
                break
            radius += 1
    return best


def contains_overpal(w: WordLike) -> bool:
    return find_overpal(w) is not None
