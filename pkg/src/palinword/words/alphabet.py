"""
Alphabets, letter encoding and Parikh vectors.

Letters are dense indices ``0..size-1``.  Inside the package a word is a
``str`` whose characters are ``chr(48 + letter)``, so alphabets of size at most
ten print as the digits 0-9.
"""

from dataclasses import dataclass
from typing import Iterable, Tuple

MAX_ALPHABET = 64
_OFFSET = 48


def letter_char(letter: int) -> str:
    """Encode a letter index as its character."""
    if not 0 <= letter < MAX_ALPHABET:
        raise ValueError(f"Letter index out of range: {letter}")
    return chr(_OFFSET + letter)


def letter_index(char: str) -> int:
    """Decode a letter character into its index."""
    index = ord(char) - _OFFSET
    if not 0 <= index < MAX_ALPHABET:
        raise ValueError(f"Not a letter character: {char!r}")
    return index


@dataclass(frozen=True)
class Alphabet:
    """The alphabet ``{0, ..., size-1}``."""

    size: int

    def __post_init__(self) -> None:
        if not 1 <= self.size <= MAX_ALPHABET:
            raise ValueError(
                f"Alphabet size must be between 1 and {MAX_ALPHABET}, got {self.size}"
            )

    @property
    def letters(self) -> str:
        return "".join(letter_char(k) for k in range(self.size))

    def contains(self, text: str) -> bool:
        letters = self.letters
        return all(ch in letters for ch in set(text))

    def validate(self, text: str) -> str:
        """Return ``text`` unchanged, or raise naming the first foreign letter."""
        letters = self.letters
        for ch in text:
            if ch not in letters:
                raise ValueError(
                    f"Letter {ch!r} is outside the alphabet of size {self.size}"
                )
        return text

    @classmethod
    def of(cls, text: str, minimum: int = 1) -> "Alphabet":
        """Smallest alphabet containing every letter of ``text``."""
        top = max((letter_index(ch) + 1 for ch in set(text)), default=0)
        return cls(max(top, minimum))


@dataclass(frozen=True)
class ParikhVector:
    """Per-letter occurrence counts.

    ``<=`` is componentwise dominance, a partial order.
    """

    counts: Tuple[int, ...]

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.counts):
            raise ValueError(f"Parikh counts must be non-negative: {self.counts}")

    @classmethod
    def zero(cls, size: int) -> "ParikhVector":
        return cls((0,) * size)

    @classmethod
    def of_counts(cls, counts: Iterable[int]) -> "ParikhVector":
        return cls(tuple(int(c) for c in counts))

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, letter: int) -> int:
        return self.counts[letter]

    def __add__(self, other: "ParikhVector") -> "ParikhVector":
        if len(self.counts) != len(other.counts):
            raise ValueError("Parikh vectors over different alphabets")
        return ParikhVector(tuple(a + b for a, b in zip(self.counts, other.counts)))

    def __le__(self, other: "ParikhVector") -> bool:
        if len(self.counts) != len(other.counts):
            raise ValueError("Parikh vectors over different alphabets")
        return all(a <= b for a, b in zip(self.counts, other.counts))

    def __lt__(self, other: "ParikhVector") -> bool:
        return self <= other and self != other

    def __ge__(self, other: "ParikhVector") -> bool:
        return other <= self

    def __gt__(self, other: "ParikhVector") -> bool:
        return other < self

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.counts) + ")"
