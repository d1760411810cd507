"""
The word type and elementary operations.
"""

from typing import Iterable, Optional, Tuple, Union

from .alphabet import Alphabet, letter_char, letter_index


class Word(str):
    """A finite word: a ``str`` of letter characters bound to an alphabet.

    Every operation of the package accepts plain ``str`` as well; ``Word``
    adds alphabet validation and access to letter indices.
    """

    alphabet: Alphabet

    def __new__(cls, text: str = "", alphabet: Optional[Alphabet] = None) -> "Word":
        alphabet = alphabet or Alphabet.of(text)
        alphabet.validate(text)
        obj = super().__new__(cls, text)
        obj.alphabet = alphabet
        return obj

    @classmethod
    def from_letters(
        cls, letters: Iterable[int], alphabet: Optional[Alphabet] = None
    ) -> "Word":
        return cls("".join(letter_char(k) for k in letters), alphabet)

    @classmethod
    def parse(cls, text: str, alphabet: Optional[Alphabet] = None) -> "Word":
        """Parse the literal syntax: digit characters, empty for the empty word."""
        text = text.strip()
        if text in ("ε", "eps"):
            text = ""
        return cls(text, alphabet)

    @property
    def letters(self) -> Tuple[int, ...]:
        return tuple(letter_index(ch) for ch in self)

    def __repr__(self) -> str:
        return f"Word({str.__repr__(self)}, size={self.alphabet.size})"


WordLike = Union[Word, str]


def reverse(w: WordLike) -> str:
    """Mirror image of ``w``."""
    return w[::-1]


def is_palindrome(w: WordLike) -> bool:
    return w == w[::-1]


def factors(w: WordLike, length: int) -> Iterable[str]:
    """Distinct factors of the given length, in order of first occurrence."""
    seen = set()
    for i in range(len(w) - length + 1):
        f = w[i : i + length]
        if f not in seen:
            seen.add(f)
            yield f


def permute(w: WordLike, permutation: Iterable[int]) -> str:
    """Rename letter ``k`` to ``permutation[k]``."""
    table = {ord(letter_char(k)): letter_char(v) for k, v in enumerate(permutation)}
    return str(w).translate(table)
