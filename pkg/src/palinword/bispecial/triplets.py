"""
Bispecial triplets and their f-images under a morphism.

A triplet ``((a, b), w, (c, d))`` pairs two left and two right extensions of
``w`` such that ``awc`` and ``bwd`` (parallel) or ``awd`` and ``bwc``
(crossed) occur.  Its f-image is ``((a', b'), u1 m(w) u2, (c', d'))`` where
``u1`` is the longest common suffix of ``m(a)`` and ``m(b)`` and ``u2`` the
longest common prefix of ``m(c)`` and ``m(d)``.
"""

import logging
import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Tuple

from ..morphisms.morphism import Morphism
from ..morphisms.synchronization import synchronization_point_check
from ..utils.errors import DegenerateImageError, ExtensionPeriodError
from ..utils.types import Crossing
from ..words.alphabet import letter_index
from ..words.word import WordLike
from .profile import ExtensionProfile, bispecial_profiles

logger = logging.getLogger(__name__)

Pair = Tuple[str, str]


def _pair(x: str, y: str) -> Pair:
    if x == y:
        raise ValueError(f"Extension pair needs two distinct letters, got {x}, {y}")
    return (x, y) if x < y else (y, x)


@dataclass(frozen=True)
class BispecialTriplet:
    """Triplet with unordered extension pairs stored in ascending order."""

    left: Pair
    core: str
    right: Pair
    crossing: Optional[Crossing] = field(default=None, compare=False)

    @classmethod
    def of(
        cls,
        left: Tuple[str, str],
        core: str,
        right: Tuple[str, str],
        crossing: Optional[Crossing] = None,
    ) -> "BispecialTriplet":
        return cls(_pair(*left), core, _pair(*right), crossing)

    @property
    def extensions(self) -> Tuple[Pair, Pair]:
        return self.left, self.right

    def __str__(self) -> str:
        a, b = self.left
        c, d = self.right
        return f"(({a},{b}), {self.core or 'ε'}, ({c},{d}))"


@dataclass(frozen=True)
class ImageStep:
    """How one application of the morphism moves a pair of extension pairs."""

    left: Pair
    prefix: str
    right: Pair
    suffix: str
    flips: bool


def common_suffix(x: str, y: str) -> str:
    k = 0
    while k < min(len(x), len(y)) and x[-1 - k] == y[-1 - k]:
        k += 1
    return x[len(x) - k :]


def image_step(m: Morphism, left: Pair, right: Pair) -> ImageStep:
    """New extension pairs, ``u1`` and ``u2`` for one f-image.

    Raises:
        DegenerateImageError: When one image is a suffix (or prefix) of the
            other, so a longer extension would be needed
    """
    a, b = (m.image(letter_index(x)) for x in left)
    c, d = (m.image(letter_index(x)) for x in right)
    u1 = common_suffix(a, b)
    if len(u1) == min(len(a), len(b)):
        raise DegenerateImageError(
            f"Image of one of {left} is a suffix of the other under {m!r}"
        )
    u2 = os.path.commonprefix([c, d])
    if len(u2) == min(len(c), len(d)):
        raise DegenerateImageError(
            f"Image of one of {right} is a prefix of the other under {m!r}"
        )
    a2, b2 = a[-len(u1) - 1], b[-len(u1) - 1]
    c2, d2 = c[len(u2)], d[len(u2)]
    # each pair is ordered; a swap on exactly one side exchanges the pairing
    flips = (a2 > b2) != (c2 > d2)
    return ImageStep(_pair(a2, b2), u1, _pair(c2, d2), u2, flips)


def f_image(t: BispecialTriplet, m: Morphism) -> BispecialTriplet:
    step = image_step(m, t.left, t.right)
    crossing = t.crossing
    if crossing is not None and step.flips:
        crossing = crossing.flipped()
    return BispecialTriplet(
        step.left, step.prefix + m.apply(t.core) + step.suffix, step.right, crossing
    )


@dataclass(frozen=True)
class FImageChain:
    """An initial triplet followed by its successive f-images."""

    initial: BispecialTriplet
    images: Tuple[BispecialTriplet, ...]

    def step(self, k: int) -> BispecialTriplet:
        """``f^k`` of the initial triplet; step 0 is the triplet itself."""
        return self.initial if k == 0 else self.images[k - 1]

    def __len__(self) -> int:
        return len(self.images) + 1


def check_extension_period(chain: FImageChain, period: int = 3) -> None:
    """Extension pairs of ``f^k`` and ``f^(k+period)`` agree for ``k >= 1``.

    Raises:
        ExtensionPeriodError: Naming the first step that breaks the period
    """
    for k in range(1, len(chain) - period):
        if chain.step(k).extensions != chain.step(k + period).extensions:
            raise ExtensionPeriodError(
                f"Chain from {chain.initial}: extensions of step {k} and "
                f"{k + period} differ"
            )


def iterate_f_images(
    initials: List[BispecialTriplet], m: Morphism, n: int, period: int = 3
) -> List[FImageChain]:
    """The first ``n`` f-images of every initial triplet."""
    chains = []
    for initial in initials:
        images = []
        current = initial
        for _ in range(n):
            current = f_image(current, m)
            images.append(current)
        chain = FImageChain(initial, tuple(images))
        check_extension_period(chain, period)
        chains.append(chain)
        logger.debug(f"f-image chain of {initial}: {len(images)} steps")
    return chains


def triplets_of(profile: ExtensionProfile) -> List[BispecialTriplet]:
    """Every triplet whose middle word is ``profile.word``."""
    found = []
    for a, b in combinations(sorted(profile.left), 2):
        for c, d in combinations(sorted(profile.right), 2):
            if (a, c) in profile.bi and (b, d) in profile.bi:
                crossing = Crossing.PARALLEL
            elif (a, d) in profile.bi and (b, c) in profile.bi:
                crossing = Crossing.CROSSED
            else:
                continue
            found.append(BispecialTriplet((a, b), profile.word, (c, d), crossing))
    return found


def has_synchronization_point(m: Morphism, context_prefix: WordLike, w: str) -> bool:
    """Whether some cut of ``w`` is a synchronization point."""
    return any(
        synchronization_point_check(m, context_prefix, w, split)
        for split in range(len(w) + 1)
    )


def discover_initial_triplets(
    m: Morphism, prefix: WordLike, max_len: int
) -> List[BispecialTriplet]:
    """Triplets around bispecial factors of the fixed-point ``prefix`` that
    have no synchronization point, shortest core first."""
    found = []
    for profile in bispecial_profiles(prefix, max_len):
        if has_synchronization_point(m, prefix, profile.word):
            continue
        found.extend(triplets_of(profile))
    logger.info(f"{len(found)} initial triplets up to core length {max_len}")
    return found


def reduce_initial_triplets(
    triplets: List[BispecialTriplet], m: Morphism
) -> List[BispecialTriplet]:
    """Drop triplets whose f-image is another initial triplet or repeats the
    f-image of an earlier one."""
    initial = set(triplets)
    seen = set()
    kept = []
    for t in triplets:
        try:
            image = f_image(t, m)
        except DegenerateImageError:
            kept.append(t)
            continue
        if image in initial or image in seen:
            continue
        seen.add(image)
        kept.append(t)
    return kept
