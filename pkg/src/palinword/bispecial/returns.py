"""
Shortest return words under Parikh dominance.
"""

import logging
from typing import FrozenSet, Optional

from ..morphisms.matrix import IncidenceMatrix
from ..morphisms.morphism import Morphism
from ..repetitions.returns import return_words
from ..words.alphabet import Alphabet, ParikhVector
from ..words.transforms import parikh
from ..words.word import WordLike

logger = logging.getLogger(__name__)


def shortest_return_word(
    prefix: WordLike, w: WordLike, alphabet: Optional[Alphabet] = None
) -> FrozenSet[str]:
    """Return words to ``w`` whose Parikh vector is minimal for dominance.

    Several words come back when the minimal elements form an antichain or
    share a vector; a warning is logged when they do not share one.
    """
    prefix = str(prefix)
    alphabet = alphabet or Alphabet.of(prefix)
    returns = return_words(prefix, w).returns
    vectors = {r: parikh(r, alphabet) for r in returns}
    minimal = frozenset(
        r
        for r in returns
        if not any(vectors[s] < vectors[r] for s in returns if s != r)
    )
    if len({vectors[r] for r in minimal}) > 1:
        logger.warning(
            f"No least return word to {str(w)!r}: "
            f"{', '.join(sorted(minimal, key=lambda r: (len(r), r)))}"
        )
    return minimal


def shortest_return_length(prefix: WordLike, w: WordLike) -> int:
    return min(len(r) for r in shortest_return_word(prefix, w))


def return_word_pushforward(r: WordLike, m: Morphism) -> ParikhVector:
    """Parikh vector of ``m(r)``."""
    return parikh(m.apply(r), m.target_alphabet)


def pushforward_vector(
    matrix: IncidenceMatrix, vector: ParikhVector, steps: int = 1
) -> ParikhVector:
    """``M^steps`` times a return-word Parikh vector."""
    return matrix.act(vector, steps)
