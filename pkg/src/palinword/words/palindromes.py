"""
Palindromic factors.

``PalindromeTree`` is an eertree that supports appending and removing the last
letter, which is what the backtracking search needs.  Node 0 is the imaginary
root of length -1, node 1 the empty palindrome; every further node is a
distinct non-empty palindrome, so ``count`` includes the empty word.
"""

import logging
from typing import Dict, Iterator, List, NamedTuple, Optional

from .word import WordLike

logger = logging.getLogger(__name__)


class _Step(NamedTuple):
    previous_last: int
    parent: int
    letter: str
    created: Optional[int]


class PalindromeTree:
    """Eertree over a growing word with undo."""

    def __init__(self, text: WordLike = "") -> None:
        """
        Args:
            text: Initial word, appended letter by letter
        """
        self.text: List[str] = []
        self.length: List[int] = [-1, 0]
        self.link: List[int] = [0, 0]
        self.edges: List[Dict[str, int]] = [{}, {}]
        self.end: List[int] = [-1, -1]
        self.last = 1
        self._history: List[_Step] = []
        for ch in text:
            self.append(ch)

    def __len__(self) -> int:
        return len(self.text)

    @property
    def count(self) -> int:
        """Number of distinct palindromic factors, the empty word included."""
        return len(self.length) - 1

    def _fits(self, node: int, i: int, letter: str) -> bool:
        j = i - 1 - self.length[node]
        return j >= 0 and self.text[j] == letter

    def append(self, letter: str) -> Optional[str]:
        """Append a letter; return the new palindrome if one appeared."""
        i = len(self.text)
        self.text.append(letter)
        parent = self.last
        while not self._fits(parent, i, letter):
            parent = self.link[parent]

        created: Optional[int] = None
        node = self.edges[parent].get(letter)
        if node is None:
            node = len(self.length)
            size = self.length[parent] + 2
            if size == 1:
                suffix = 1
            else:
                w = self.link[parent]
                while not self._fits(w, i, letter):
                    w = self.link[w]
                suffix = self.edges[w][letter]
            self.length.append(size)
            self.link.append(suffix)
            self.edges.append({})
            self.end.append(i)
            self.edges[parent][letter] = node
            created = node

        self._history.append(_Step(self.last, parent, letter, created))
        self.last = node
        return self.node_text(created) if created is not None else None

    def pop(self) -> None:
        """Undo the last ``append``."""
        step = self._history.pop()
        if step.created is not None:
            del self.edges[step.parent][step.letter]
            self.length.pop()
            self.link.pop()
            self.edges.pop()
            self.end.pop()
        self.text.pop()
        self.last = step.previous_last

    def node_text(self, node: int) -> str:
        size = self.length[node]
        if size <= 0:
            return ""
        stop = self.end[node] + 1
        return "".join(self.text[stop - size : stop])

    def suffix_palindrome_lengths(self) -> Iterator[int]:
        """Lengths of the non-empty palindromic suffixes, longest first."""
        node = self.last
        while self.length[node] > 0:
            yield self.length[node]
            node = self.link[node]

    def palindromes(self) -> List[str]:
        """Every distinct palindromic factor, in canonical order."""
        found = [""] + [self.node_text(k) for k in range(2, len(self.length))]
        return sorted(found, key=lambda p: (len(p), p))


def distinct_palindromes(w: WordLike) -> List[str]:
    """Distinct palindromic factors of ``w`` (including ε), sorted by length
    then lexicographically."""
    tree = PalindromeTree(w)
    logger.debug(f"{tree.count} distinct palindromes in a word of length {len(w)}")
    return tree.palindromes()


def palindrome_count(w: WordLike) -> int:
    return PalindromeTree(w).count
