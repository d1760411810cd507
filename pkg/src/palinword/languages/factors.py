"""
Factor languages: length-ℓ factor sets of generated words and extendable
cores of constraint sets.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Optional, Set

from ..avoidance.constraints import ConstraintSet
from ..avoidance.engine import walk
from ..avoidance.state import SearchState
from ..morphisms.generate import WordSource
from ..utils.errors import SearchBudgetError, StabilizationError
from ..utils.types import VisitAction
from ..words.word import WordLike, reverse

logger = logging.getLogger(__name__)

STABLE_START_FACTOR = 64
MAX_PREFIX_LENGTH = 1 << 24


@dataclass(frozen=True)
class FactorLanguage:
    """A set of words sharing one length."""

    length: int
    members: FrozenSet[str]

    def __post_init__(self) -> None:
        wrong = [w for w in self.members if len(w) != self.length]
        if wrong:
            raise ValueError(
                f"Members must have length {self.length}, got {sorted(wrong)[0]!r}"
            )

    @classmethod
    def of(cls, length: int, words: Iterable[str]) -> "FactorLanguage":
        return cls(length, frozenset(words))

    def __contains__(self, item: object) -> bool:
        return item in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[str]:
        return iter(self.sorted())

    def sorted(self) -> List[str]:
        return sorted(self.members)

    def reversed(self) -> "FactorLanguage":
        return FactorLanguage(self.length, frozenset(reverse(w) for w in self.members))

    def is_reversal_closed(self) -> bool:
        return self.reversed() == self

    def shorter(self) -> "FactorLanguage":
        """Prefixes and suffixes of length ``ℓ-1``."""
        if self.length < 1:
            raise ValueError("The empty-word language has no shorter language")
        words: Set[str] = set()
        for w in self.members:
            words.add(w[:-1])
            words.add(w[1:])
        return FactorLanguage(self.length - 1, frozenset(words))

    def export(self) -> str:
        """Sorted word list, one per line."""
        return "".join(f"{w}\n" for w in self.sorted())


def factor_language(text: WordLike, length: int) -> FactorLanguage:
    """All length-``length`` factors of ``text``."""
    if length < 0:
        raise ValueError(f"Factor length must be non-negative, got {length}")
    text = str(text)
    found = {text[i : i + length] for i in range(len(text) - length + 1)}
    return FactorLanguage(length, frozenset(found))


def stable_factor_set(
    source: WordSource,
    length: int,
    start: Optional[int] = None,
    max_prefix: int = MAX_PREFIX_LENGTH,
) -> FactorLanguage:
    """Length-``length`` factors of an infinite word, read from prefixes that
    double until two consecutive doublings add nothing.

    Raises:
        StabilizationError: When ``max_prefix`` is reached first
    """
    n = start or max(STABLE_START_FACTOR * length, 64)
    current = factor_language(source.prefix(n), length)
    unchanged = 0
    while unchanged < 2:
        n *= 2
        if n > max_prefix:
            raise StabilizationError(
                f"Length-{length} factors of {source.name} still growing "
                f"at prefix length {n // 2}"
            )
        grown = factor_language(source.prefix(n), length)
        unchanged = unchanged + 1 if grown == current else 0
        logger.debug(
            f"{source.name}: {len(grown)} factors of length {length} at prefix {n}"
        )
        current = grown
    return current


def factor_sets_equal(
    a: WordSource, b: WordSource, length: int, max_prefix: int = MAX_PREFIX_LENGTH
) -> bool:
    """Whether two infinite words have the same length-``length`` factors."""
    left = stable_factor_set(a, length, max_prefix=max_prefix)
    right = stable_factor_set(b, length, max_prefix=max_prefix)
    if left != right:
        only_a = len(left.members - right.members)
        only_b = len(right.members - left.members)
        logger.info(
            f"Factor sets differ at length {length}: {only_a} only in {a.name}, "
            f"{only_b} only in {b.name}"
        )
    return left == right


def extendable_core(
    c: ConstraintSet, length: int, budget: Optional[int] = None
) -> FactorLanguage:
    """Words ``v`` of length ``ℓ`` such that some word ``pvs`` with
    ``|p| = |s| = ℓ`` satisfies ``c``.

    Raises:
        SearchBudgetError: When the enumeration of length-3ℓ words runs out
            of budget
    """
    if length < 1:
        raise ValueError(f"Core length must be positive, got {length}")
    total = 3 * length
    core: Set[str] = set()

    def visit(state: SearchState) -> VisitAction:
        if len(state) == total:
            core.add(state.text[length : 2 * length])
        return VisitAction.CONTINUE

    result = walk(c, visit, max_length=total, budget=budget)
    if not result.completed:
        raise SearchBudgetError(
            f"Core of length {length} for {c.name or 'constraints'}: budget "
            f"{budget} spent after {result.nodes} nodes"
        )
    logger.info(
        f"Extendable core of length {length}: {len(core)} words, "
        f"{result.nodes} nodes"
    )
    return FactorLanguage(length, frozenset(core))
