"""
Structural classification of morphisms.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

from ..repetitions.returns import occurrences
from ..words.alphabet import letter_index
from .matrix import IncidenceMatrix
from .morphism import Morphism

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MorphismClass:
    uniform_length: Optional[int]
    synchronizing: bool
    primitive: bool
    prolongable_letters: FrozenSet[int]

    @property
    def uniform(self) -> bool:
        return self.uniform_length is not None


def synchronization_failure(m: Morphism) -> Optional[Tuple[int, int, int, int]]:
    """First ``(a, b, c, start)`` with ``f(c)`` at a forbidden place in ``f(ab)``."""
    d = m.source_alphabet.size
    for a in range(d):
        for b in range(d):
            pair = m.images[a] + m.images[b]
            for c in range(d):
                image = m.images[c]
                for start in occurrences(pair, image):
                    if start == 0 and c == a:
                        continue
                    if start + len(image) == len(pair) and c == b:
                        continue
                    return a, b, c, start
    return None


def is_synchronizing(m: Morphism) -> bool:
    failure = synchronization_failure(m)
    if failure is not None:
        a, b, c, start = failure
        logger.debug(f"Image of {c} occurs at {start} inside the image of {a}{b}")
    return failure is None


def prolongable_letters(m: Morphism) -> FrozenSet[int]:
    if not m.is_endomorphism:
        return frozenset()
    return frozenset(
        k
        for k, image in enumerate(m.images)
        if len(image) >= 2 and letter_index(image[0]) == k
    )


def classify(m: Morphism) -> MorphismClass:
    primitive = m.is_endomorphism and IncidenceMatrix.of(m).is_primitive()
    result = MorphismClass(
        uniform_length=m.uniform_length,
        synchronizing=is_synchronizing(m),
        primitive=primitive,
        prolongable_letters=prolongable_letters(m),
    )
    logger.debug(f"Classified {m!r}: {result}")
    return result
