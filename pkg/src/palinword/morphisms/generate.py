"""
Prefixes of infinite words: fixed points, images, periodic words and the
marker-insertion construction.

Each source exposes ``prefix(n)`` and a ``name`` so prefix-driven algorithms
(factor-set stabilisation, bispecial enumeration) accept any of them.
"""

import logging
from abc import ABC, abstractmethod

from ..utils.errors import NotProlongableError
from ..words.alphabet import letter_char
from ..words.transforms import insert_marker
from .morphism import Morphism

logger = logging.getLogger(__name__)


def fixed_point_prefix(m: Morphism, seed: int, n: int) -> str:
    """Length-``n`` prefix of the fixed point of ``m`` starting with ``seed``."""
    if n < 0:
        raise ValueError(f"Prefix length must be non-negative, got {n}")
    first = letter_char(seed)
    image = m.images[seed] if seed < len(m.images) else ""
    if not m.is_endomorphism or not image.startswith(first) or len(image) < 2:
        raise NotProlongableError(
            f"{m!r} is not prolongable on {first}: image is {image!r}"
        )
    text = first
    while len(text) < n:
        grown = m.apply(text)
        if len(grown) <= len(text):
            raise NotProlongableError(f"Iterating {m!r} on {first} stopped growing")
        text = grown
    logger.debug(f"Fixed point prefix of {m.name or 'morphism'} of length {n}")
    return text[:n]


class WordSource(ABC):
    """Something that produces arbitrarily long prefixes of an infinite word."""

    name: str = ""

    @abstractmethod
    def prefix(self, n: int) -> str:
        ...

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name})"


class FixedPointWord(WordSource):
    def __init__(self, morphism: Morphism, seed: int = 0, name: str = ""):
        """
        Args:
            morphism: Endomorphism prolongable on ``seed``
            seed: First letter of the fixed point
            name: Display name
        """
        self.morphism = morphism
        self.seed = seed
        self.name = name or f"{morphism.name}^ω({seed})"
        fixed_point_prefix(morphism, seed, 1)
        self._cache = ""

    def prefix(self, n: int) -> str:
        if len(self._cache) < n:
            self._cache = fixed_point_prefix(self.morphism, self.seed, n)
        return self._cache[:n]


class ImageWord(WordSource):
    """Image of another infinite word under a morphism."""

    def __init__(self, morphism: Morphism, inner: WordSource, name: str = ""):
        self.morphism = morphism
        self.inner = inner
        self.name = name or f"{morphism.name}({inner.name})"

    def prefix(self, n: int) -> str:
        k = n // self.morphism.min_image_length + 1
        return self.morphism.apply(self.inner.prefix(k))[:n]


class PeriodicWord(WordSource):
    """The word ``period`` repeated forever."""

    def __init__(self, period: str, name: str = ""):
        if not period:
            raise ValueError("Period must be non-empty")
        self.period = period
        self.name = name or f"({period})^ω"

    def prefix(self, n: int) -> str:
        reps = n // len(self.period) + 1
        return (self.period * reps)[:n]


class InsertedWord(WordSource):
    """Another word with ``marker`` inserted inside every ``trigger``."""

    def __init__(self, inner: WordSource, trigger: str, marker: str, name: str = ""):
        self.inner = inner
        self.trigger = trigger
        self.marker = marker
        self.name = name or f"insert({inner.name}, {trigger}, {marker})"

    def prefix(self, n: int) -> str:
        # every inserted marker is preceded by an inner letter
        text = insert_marker(self.inner.prefix(n + 1), self.trigger, self.marker)
        return text[:n]
