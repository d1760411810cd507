"""
Constraint sets for the avoidance search.
"""

from dataclasses import dataclass, field, replace
from typing import FrozenSet, Iterable, List, Optional

from ..patterns.letter_pattern import LetterPattern
from ..repetitions.threshold import Threshold
from ..words.alphabet import Alphabet
from ..words.word import factors, is_palindrome, permute


@dataclass(frozen=True)
class PalindromeQuota:
    """At most ``at_most`` distinct palindromes from ``words`` may occur."""

    words: FrozenSet[str]
    at_most: int

    def __post_init__(self) -> None:
        if self.at_most < 0:
            raise ValueError(f"Quota must be non-negative, got {self.at_most}")
        object.__setattr__(self, "words", frozenset(self.words))

    def __str__(self) -> str:
        return f"{','.join(sorted(self.words))}:{self.at_most}"


@dataclass(frozen=True)
class ConstraintSet:
    """Conjunction of the constraints a word must satisfy.

    ``allowed_palindromes`` is a whitelist: every palindrome of the word must
    be a factor of one of the listed words.
    """

    alphabet: Alphabet
    threshold: Optional[Threshold] = None
    max_palindromes: Optional[int] = None
    forbidden_factors: FrozenSet[str] = field(default_factory=frozenset)
    square_free: bool = False
    letter_patterns: FrozenSet[LetterPattern] = field(default_factory=frozenset)
    forbid_overpals: bool = False
    allowed_palindromes: Optional[FrozenSet[str]] = None
    palindrome_quota: Optional[PalindromeQuota] = None
    symmetry: bool = True
    name: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "forbidden_factors", frozenset(self.forbidden_factors))
        object.__setattr__(self, "letter_patterns", frozenset(self.letter_patterns))
        if self.allowed_palindromes is not None:
            object.__setattr__(
                self, "allowed_palindromes", frozenset(self.allowed_palindromes)
            )
        if not self.active_constraints():
            raise ValueError("A constraint set needs at least one active constraint")
        for word in self.forbidden_factors:
            if not word:
                raise ValueError("The empty word cannot be forbidden")
            self.alphabet.validate(word)
        if self.max_palindromes is not None and self.max_palindromes < 1:
            raise ValueError(
                f"max_palindromes must be >= 1, got {self.max_palindromes}"
            )

    def active_constraints(self) -> List[str]:
        active = []
        if self.threshold is not None:
            active.append("threshold")
        if self.max_palindromes is not None:
            active.append("max_palindromes")
        if self.forbidden_factors:
            active.append("forbidden_factors")
        if self.square_free:
            active.append("square_free")
        if self.letter_patterns:
            active.append("letter_patterns")
        if self.forbid_overpals:
            active.append("forbid_overpals")
        if self.allowed_palindromes is not None:
            active.append("allowed_palindromes")
        if self.palindrome_quota is not None:
            active.append("palindrome_quota")
        return active

    def allowed_palindrome_set(self) -> Optional[FrozenSet[str]]:
        """Every palindromic factor of the whitelist words, ε included."""
        if self.allowed_palindromes is None:
            return None
        found = {""}
        for word in self.allowed_palindromes:
            for length in range(1, len(word) + 1):
                found.update(f for f in factors(word, length) if is_palindrome(f))
        return frozenset(found)

    def is_permutation_invariant(self) -> bool:
        """Closed under every renaming of letters.

        Checking the adjacent transpositions is enough since they generate
        the symmetric group.
        """
        size = self.alphabet.size
        for k in range(size - 1):
            swap = list(range(size))
            swap[k], swap[k + 1] = swap[k + 1], swap[k]
            if not _closed(self.forbidden_factors, swap):
                return False
            allowed = self.allowed_palindrome_set()
            if allowed is not None and not _closed(allowed, swap):
                return False
            quota = self.palindrome_quota
            if quota is not None and not _closed(quota.words, swap):
                return False
        return True

    def with_(self, **changes: object) -> "ConstraintSet":
        return replace(self, **changes)  # type: ignore[arg-type]

    def describe(self) -> List[str]:
        """Canonical ``key=value`` lines, the text format read by the config."""
        lines = [f"alphabet={self.alphabet.size}"]
        if self.name:
            lines.insert(0, f"name={self.name}")
        if self.threshold is not None:
            lines.append(f"threshold={self.threshold}")
        if self.max_palindromes is not None:
            lines.append(f"max_palindromes={self.max_palindromes}")
        if self.forbidden_factors:
            lines.append(f"forbid={','.join(_sorted_words(self.forbidden_factors))}")
        if self.square_free:
            lines.append("square_free=yes")
        if self.letter_patterns:
            patterns = sorted(str(p) for p in self.letter_patterns)
            lines.append(f"letter_patterns={','.join(patterns)}")
        if self.forbid_overpals:
            lines.append("overpals=no")
        if self.allowed_palindromes is not None:
            words = _sorted_words(self.allowed_palindromes)
            lines.append(f"allowed_palindromes={','.join(words)}")
        if self.palindrome_quota is not None:
            lines.append(f"palindrome_quota={self.palindrome_quota}")
        if not self.symmetry:
            lines.append("symmetry=no")
        return lines

    def __str__(self) -> str:
        return "; ".join(self.describe())


def _closed(words: Iterable[str], permutation: List[int]) -> bool:
    words = frozenset(words)
    return all(permute(w, permutation) in words for w in words)


def _sorted_words(words: Iterable[str]) -> List[str]:
    return sorted(words, key=lambda w: (len(w), w))
