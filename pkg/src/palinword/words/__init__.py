"""Finite words: representation, palindromes, Parikh vectors and transforms."""

from .alphabet import Alphabet, ParikhVector, letter_char, letter_index
from .palindromes import PalindromeTree, distinct_palindromes, palindrome_count
from .transforms import erase_letter, insert_marker, parikh
from .word import Word, WordLike, factors, is_palindrome, permute, reverse

__all__ = [
    "Alphabet",
    "ParikhVector",
    "letter_char",
    "letter_index",
    "Word",
    "WordLike",
    "reverse",
    "is_palindrome",
    "factors",
    "permute",
    "PalindromeTree",
    "distinct_palindromes",
    "palindrome_count",
    "parikh",
    "insert_marker",
    "erase_letter",
]
