"""
Incremental constraint checking for the backtracking search.

``SearchState`` holds the current word and every structure needed to decide,
in time independent of the full recheck, whether appending one letter keeps
the word inside the constraint set.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set

from ..patterns.overpal import is_overpal
from ..repetitions.incremental import violation_at_end
from ..repetitions.threshold import Threshold
from ..words.alphabet import letter_index
from ..words.palindromes import PalindromeTree
from .constraints import ConstraintSet

SQUARE = Threshold(2)


@dataclass(frozen=True)
class Violation:
    """The constraint that failed and a witnessing factor."""

    constraint: str
    witness: str

    def __str__(self) -> str:
        return f"{self.constraint}: {self.witness!r}"


class SearchState:
    """A word under construction, checked one letter at a time."""

    def __init__(self, constraints: ConstraintSet):
        """
        Args:
            constraints: Constraints every accepted word satisfies
        """
        self.constraints = constraints
        self.tree = PalindromeTree()
        self.last_violation: Optional[Violation] = None
        self._text = ""
        self._max_letter: List[int] = [-1]
        self._quota_hits: List[int] = [0]
        self._forbidden: Dict[int, Set[str]] = {}
        for word in constraints.forbidden_factors:
            self._forbidden.setdefault(len(word), set()).add(word)
        self._allowed: Optional[FrozenSet[str]] = constraints.allowed_palindrome_set()
        self._patterns = sorted(constraints.letter_patterns, key=len)

    @property
    def text(self) -> str:
        return self._text

    def __len__(self) -> int:
        return len(self._text)

    @property
    def max_letter(self) -> int:
        """Largest letter index used so far, -1 for the empty word."""
        return self._max_letter[-1]

    @property
    def palindrome_count(self) -> int:
        return self.tree.count

    def push(self, letter: str) -> bool:
        """Append ``letter``; on violation undo and return False."""
        text = self._text + letter
        violation = self._check_factors(text)
        if violation is not None:
            self.last_violation = violation
            return False

        self._text = text
        created = self.tree.append(letter)
        self._max_letter.append(max(self._max_letter[-1], letter_index(letter)))
        hits = self._quota_hits[-1]
        quota = self.constraints.palindrome_quota
        if created is not None and quota is not None and created in quota.words:
            hits += 1
        self._quota_hits.append(hits)

        violation = self._check_palindrome(created, hits)
        if violation is not None:
            self.pop()
            self.last_violation = violation
            return False
        self.last_violation = None
        return True

    def pop(self) -> str:
        """Remove and return the last letter."""
        letter = self._text[-1]
        self._text = self._text[:-1]
        self.tree.pop()
        self._max_letter.pop()
        self._quota_hits.pop()
        return letter

    def _check_factors(self, text: str) -> Optional[Violation]:
        c = self.constraints
        n = len(text)
        for length, words in self._forbidden.items():
            if length <= n and text[n - length :] in words:
                return Violation("forbidden_factors", text[n - length :])
        if c.square_free:
            rep = violation_at_end(text, SQUARE)
            if rep is not None:
                return Violation("square_free", rep.factor(text))
        if c.threshold is not None:
            rep = violation_at_end(text, c.threshold)
            if rep is not None:
                return Violation("threshold", rep.factor(text))
        for pattern in self._patterns:
            if pattern.matches_suffix(text):
                return Violation("letter_patterns", text[n - len(pattern) :])
        return None

    def _check_palindrome(
        self, created: Optional[str], hits: int
    ) -> Optional[Violation]:
        # a factor can only become a violation when it is a new palindrome
        if created is None:
            return None
        c = self.constraints
        if c.max_palindromes is not None and self.tree.count > c.max_palindromes:
            return Violation("max_palindromes", created)
        if self._allowed is not None and created not in self._allowed:
            return Violation("allowed_palindromes", created)
        if c.palindrome_quota is not None and hits > c.palindrome_quota.at_most:
            return Violation("palindrome_quota", created)
        if c.forbid_overpals and is_overpal(created):
            return Violation("forbid_overpals", created)
        return None

    def __repr__(self) -> str:
        return f"SearchState({self._text!r}, palindromes={self.tree.count})"
