"""
Morphisms between finite alphabets.
"""

import logging
import re
from typing import Dict, List, Optional, Sequence, Tuple

from ..words.alphabet import Alphabet, letter_char, letter_index
from ..words.word import WordLike

logger = logging.getLogger(__name__)

_IMAGE_LINE = re.compile(r"^(\S)\s*->\s*(\S*)$")
_LET_LINE = re.compile(r"^let\s+(\w+)\s*=\s*(\S*)$")
_VARIABLE = re.compile(r"\{(\w+)\}")


class Morphism:
    """Non-erasing morphism given by the image of each source letter."""

    def __init__(
        self,
        images: Sequence[str],
        target_alphabet: Optional[Alphabet] = None,
        name: str = "",
    ):
        """
        Args:
            images: Image of letter ``k`` at index ``k``
            target_alphabet: Alphabet of the images; inferred when omitted
            name: Label used in logs and certificates
        """
        if not images:
            raise ValueError("A morphism needs at least one image")
        self.images: Tuple[str, ...] = tuple(str(image) for image in images)
        for k, image in enumerate(self.images):
            if not image:
                raise ValueError(f"Image of letter {k} is empty (erasing morphism)")
        self.source_alphabet = Alphabet(len(self.images))
        self.target_alphabet = target_alphabet or Alphabet.of("".join(self.images))
        for image in self.images:
            self.target_alphabet.validate(image)
        self.name = name
        self._table = {
            ord(letter_char(k)): image for k, image in enumerate(self.images)
        }

    def __repr__(self) -> str:
        label = f"{self.name}: " if self.name else ""
        return f"Morphism({label}{', '.join(self.images)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.images == other.images
            and self.target_alphabet == other.target_alphabet
        )

    def __hash__(self) -> int:
        return hash((self.images, self.target_alphabet))

    def image(self, letter: int) -> str:
        return self.images[letter]

    def __call__(self, w: WordLike) -> str:
        return self.apply(w)

    def apply(self, w: WordLike) -> str:
        """Concatenate the images of the letters of ``w``."""
        text = str(w)
        self.source_alphabet.validate(text)
        return text.translate(self._table)

    def power(self, k: int, w: WordLike) -> str:
        """Apply the morphism ``k`` times."""
        if k < 0:
            raise ValueError(f"Negative power: {k}")
        text = str(w)
        for _ in range(k):
            text = self.apply(text)
        return text

    @property
    def is_endomorphism(self) -> bool:
        return self.source_alphabet == self.target_alphabet

    @property
    def uniform_length(self) -> Optional[int]:
        lengths = {len(image) for image in self.images}
        return lengths.pop() if len(lengths) == 1 else None

    @property
    def max_image_length(self) -> int:
        return max(len(image) for image in self.images)

    @property
    def min_image_length(self) -> int:
        return min(len(image) for image in self.images)

    def permuted(self, permutation: Sequence[int]) -> "Morphism":
        """Conjugate by a renaming of the letters of an endomorphism."""
        if not self.is_endomorphism:
            raise ValueError("Only endomorphisms can be conjugated by a renaming")
        table = {
            ord(letter_char(k)): letter_char(v) for k, v in enumerate(permutation)
        }
        images: List[str] = [""] * len(self.images)
        for k, image in enumerate(self.images):
            images[permutation[k]] = image.translate(table)
        return Morphism(images, self.target_alphabet, self.name)

    @classmethod
    def parse(
        cls,
        text: str,
        name: str = "",
        target_size: Optional[int] = None,
    ) -> "Morphism":
        """Parse ``<letter> -> <image>`` lines.

        Blank lines and ``#`` comments are ignored.  ``let <var> = <word>``
        defines a word that images reference as ``{var}``; an indented line
        continues the previous word.
        """
        images: Dict[int, str] = {}
        variables: Dict[str, str] = {}
        current: Optional[Tuple[str, object]] = None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].rstrip()
            if not line.strip():
                continue
            if raw[:1].isspace():
                if current is None:
                    raise ValueError(f"Line {lineno}: continuation without a word")
                kind, key = current
                if kind == "let":
                    variables[str(key)] += line.strip()
                else:
                    images[int(str(key))] += line.strip()
                continue
            let = _LET_LINE.match(line)
            if let:
                variables[let.group(1)] = let.group(2)
                current = ("let", let.group(1))
                continue
            match = _IMAGE_LINE.match(line)
            if not match:
                raise ValueError(f"Line {lineno}: malformed morphism line {raw!r}")
            letter = letter_index(match.group(1))
            if letter in images:
                raise ValueError(
                    f"Line {lineno}: letter {match.group(1)} defined twice"
                )
            images[letter] = match.group(2)
            current = ("image", letter)

        if not images:
            raise ValueError("No morphism images found")
        missing = [k for k in range(max(images) + 1) if k not in images]
        if missing:
            raise ValueError(f"Missing images for letters {missing}")

        def expand(image: str) -> str:
            def substitute(m: "re.Match[str]") -> str:
                if m.group(1) not in variables:
                    raise ValueError(f"Undefined variable {m.group(1)!r}")
                return variables[m.group(1)]

            return _VARIABLE.sub(substitute, image)

        ordered = [expand(images[k]) for k in range(len(images))]
        target = Alphabet(target_size) if target_size else None
        morphism = cls(ordered, target, name)
        logger.debug(
            f"Parsed {morphism.name or 'morphism'} with {len(ordered)} images"
        )
        return morphism

    def format(self) -> str:
        """Render in the text format accepted by ``parse``."""
        lines = [
            f"{letter_char(k)} -> {image}" for k, image in enumerate(self.images)
        ]
        return "\n".join(lines) + "\n"


def compose(outer: Morphism, inner: Morphism) -> Morphism:
    """The morphism ``outer ∘ inner``."""
    return Morphism(
        [outer.apply(image) for image in inner.images],
        outer.target_alphabet,
        f"{outer.name}∘{inner.name}" if outer.name and inner.name else "",
    )


def identity(size: int) -> Morphism:
    return Morphism([letter_char(k) for k in range(size)], Alphabet(size), "id")
