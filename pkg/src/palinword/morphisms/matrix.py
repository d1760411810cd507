"""
Incidence matrices.

Entries are exact integers held in a ``sympy.Matrix``; primitivity is tested
on the boolean support with numpy.
"""

import logging
from typing import List, Sequence

import numpy as np
import sympy

from ..words.alphabet import ParikhVector
from ..words.transforms import parikh
from .morphism import Morphism

logger = logging.getLogger(__name__)


class IncidenceMatrix:
    """``entries[k, j]`` is the number of letters ``k`` in the image of ``j``."""

    def __init__(self, entries: sympy.Matrix):
        """
        Args:
            entries: Square matrix of non-negative integers
        """
        if entries.rows != entries.cols:
            raise ValueError(f"Incidence matrix must be square, got {entries.shape}")
        if any(x < 0 for x in entries):
            raise ValueError("Incidence matrix entries must be non-negative")
        self.entries = sympy.ImmutableMatrix(entries)

    @classmethod
    def of(cls, m: Morphism) -> "IncidenceMatrix":
        if not m.is_endomorphism:
            raise ValueError(
                f"Incidence matrix needs an endomorphism, got {m.source_alphabet.size} "
                f"-> {m.target_alphabet.size} letters"
            )
        return cls(parikh_matrix(m))

    @property
    def size(self) -> int:
        return int(self.entries.rows)

    def rows(self) -> List[List[int]]:
        return [
            [int(self.entries[k, j]) for j in range(self.size)]
            for k in range(self.size)
        ]

    def power(self, n: int) -> sympy.Matrix:
        return self.entries**n

    def act(self, vector: ParikhVector, times: int = 1) -> ParikhVector:
        """``M^times`` applied to a Parikh vector."""
        column = sympy.Matrix(list(vector.counts))
        result = self.power(times) * column
        return ParikhVector.of_counts(int(x) for x in result)

    def is_primitive(self) -> bool:
        """Some power up to ``d*d`` is entrywise positive."""
        support = np.array(self.rows(), dtype=bool)
        current = support.copy()
        for exponent in range(1, self.size * self.size + 1):
            if current.all():
                logger.debug(f"Incidence matrix positive at power {exponent}")
                return True
            current = (current.astype(np.int64) @ support.astype(np.int64)) > 0
        return False

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IncidenceMatrix):
            return bool(self.entries == other.entries)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"IncidenceMatrix({self.rows()})"


def incidence_matrix(m: Morphism) -> IncidenceMatrix:
    return IncidenceMatrix.of(m)


def exact_matrix(rows: Sequence[Sequence[int]]) -> sympy.Matrix:
    """An exact integer (or rational) matrix from nested rows."""
    return sympy.Matrix([[sympy.Rational(x) for x in row] for row in rows])


def parikh_matrix(m: Morphism) -> sympy.Matrix:
    """Column ``j`` is the Parikh vector of the image of ``j``; any shape."""
    columns = [parikh(image, m.target_alphabet).counts for image in m.images]
    return sympy.Matrix(
        m.target_alphabet.size, len(m.images), lambda k, j: columns[j][k]
    )
