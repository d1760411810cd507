"""
Synchronization points.

``(w[:split], w[split:])`` is a synchronization point of ``w`` when every
occurrence of ``w`` inside the image of a factor of the source language has
its cut at a boundary between letter images.
"""

import logging
import math
from itertools import accumulate
from typing import Optional, Set

from ..repetitions.returns import occurrences
from ..words.alphabet import letter_index
from ..words.word import WordLike, factors
from .morphism import Morphism

logger = logging.getLogger(__name__)


def locality_radius(m: Morphism, w: WordLike) -> int:
    """Image window that witnesses any violation: ``|w| + 2 * max|m(a)|``."""
    return len(w) + 2 * m.max_image_length


def synchronization_point_check(
    m: Morphism,
    context_prefix: WordLike,
    w: WordLike,
    split: int,
    bound: Optional[int] = None,
) -> bool:
    """Check the cut ``split`` of ``w`` against every image of a source
    factor taken from ``context_prefix``.

    Args:
        m: Morphism producing the images
        context_prefix: Prefix of the source word; its factors form the
            source language
        w: Factor of the image language
        split: Cut position, ``0 <= split <= len(w)``
        bound: Image window length; at least the locality radius
    """
    w = str(w)
    if not 0 <= split <= len(w):
        raise ValueError(f"Split {split} outside 0..{len(w)}")
    radius = locality_radius(m, w)
    if bound is None:
        bound = radius
    if bound < radius:
        raise ValueError(
            f"Bound {bound} is below the locality radius {radius} for {w!r}"
        )
    source_length = math.ceil(bound / m.min_image_length) + 1
    context = str(context_prefix)
    if len(context) < source_length:
        raise ValueError(
            f"Context prefix of length {len(context)} is shorter than the "
            f"{source_length} source letters needed"
        )
    for u in factors(context, source_length):
        image = m.apply(u)
        lengths = (len(m.images[letter_index(ch)]) for ch in u)
        boundaries: Set[int] = {0, *accumulate(lengths)}
        for start in occurrences(image, w):
            if start + split not in boundaries:
                logger.debug(f"{w!r} at {start} in the image of {u!r} is not cut")
                return False
    return True
