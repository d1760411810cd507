"""
Longest-common-extension oracle.

Suffix array by prefix doubling (numpy ``lexsort``), LCP array by Kasai's
algorithm, and a sparse table for range minima.  ``forward(i, j)`` is the
length of the longest common prefix of the suffixes starting at ``i`` and
``j``; ``backward(i, j)`` the length of the longest common suffix of the
prefixes ending just before ``i`` and ``j``.
"""

from typing import List, Optional

import numpy as np


def suffix_array(text: str) -> np.ndarray:
    n = len(text)
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    rank = np.frombuffer(text.encode("latin-1"), dtype=np.uint8).astype(np.int64)
    k = 1
    while True:
        second = np.full(n, -1, dtype=np.int64)
        if k < n:
            second[: n - k] = rank[k:]
        sa = np.lexsort((second, rank))
        first_sorted, second_sorted = rank[sa], second[sa]
        changed = np.empty(n, dtype=np.int64)
        changed[0] = 0
        changed[1:] = (first_sorted[1:] != first_sorted[:-1]) | (
            second_sorted[1:] != second_sorted[:-1]
        )
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[sa] = np.cumsum(changed)
        rank = new_rank
        if rank.max() == n - 1:
            return sa
        k *= 2


def lcp_array(text: str, sa: np.ndarray) -> List[int]:
    """``lcp[r]`` is the common prefix length of suffixes ``sa[r-1]`` and ``sa[r]``."""
    n = len(text)
    rank = [0] * n
    order = sa.tolist()
    for r, s in enumerate(order):
        rank[s] = r
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = rank[i]
        if r == 0:
            h = 0
            continue
        j = order[r - 1]
        while i + h < n and j + h < n and text[i + h] == text[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return lcp


class _ForwardOracle:
    def __init__(self, text: str) -> None:
        self.n = len(text)
        sa = suffix_array(text)
        self.rank = np.empty(self.n, dtype=np.int64)
        self.rank[sa] = np.arange(self.n, dtype=np.int64)
        self._rank = self.rank.tolist()
        level = np.asarray(lcp_array(text, sa), dtype=np.int64)
        self.table = [level]
        half = 1
        while 2 * half <= self.n:
            level = np.minimum(level[:-half], level[half:])
            self.table.append(level)
            half *= 2
        self._rows = [row.tolist() for row in self.table]

    def query(self, i: int, j: int) -> int:
        if i == j:
            return self.n - i
        lo, hi = self._rank[i], self._rank[j]
        if lo > hi:
            lo, hi = hi, lo
        lo += 1
        k = (hi - lo + 1).bit_length() - 1
        row = self._rows[k]
        return min(row[lo], row[hi - (1 << k) + 1])


class LongestCommonExtension:
    """Constant-time longest common extensions in both directions."""

    def __init__(self, text: str) -> None:
        """
        Args:
            text: Word to index; letters must be single-byte characters
        """
        self.text = text
        self.n = len(text)
        self._forward = _ForwardOracle(text)
        self._backward: Optional[_ForwardOracle] = None

    def forward(self, i: int, j: int) -> int:
        if i >= self.n or j >= self.n:
            return 0
        return self._forward.query(i, j)

    def backward(self, i: int, j: int) -> int:
        if i <= 0 or j <= 0:
            return 0
        if self._backward is None:
            self._backward = _ForwardOracle(self.text[::-1])
        return self._backward.query(self.n - i, self.n - j)
