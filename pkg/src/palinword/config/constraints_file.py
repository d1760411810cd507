"""
The ``key=value`` text format of constraint sets.

Example::

    # ternary words with at most 6 palindromes, 9/4-free
    alphabet=3
    threshold=9/4
    max_palindromes=6
    palindrome_quota=00,11,22:1

``preset=<name>`` starts from a named constraint set; later keys override it.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Union

from ..avoidance.constraints import ConstraintSet, PalindromeQuota
from ..avoidance.presets import preset
from ..patterns.letter_pattern import LetterPattern
from ..repetitions.threshold import Threshold
from ..words.alphabet import Alphabet
from .config_parsing import FALSE_WORDS, TRUE_WORDS

logger = logging.getLogger(__name__)

KEYS = (
    "preset",
    "name",
    "alphabet",
    "threshold",
    "max_palindromes",
    "forbid",
    "square_free",
    "letter_patterns",
    "overpals",
    "allowed_palindromes",
    "palindrome_quota",
    "symmetry",
)


def _words(value: str) -> frozenset:
    return frozenset(w.strip() for w in value.split(",") if w.strip())


def _yes(key: str, value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in TRUE_WORDS:
        return True
    if lowered in FALSE_WORDS:
        return False
    raise ValueError(f"{key} expects yes or no, got {value!r}")


def _quota(value: str) -> PalindromeQuota:
    words, sep, count = value.rpartition(":")
    if not sep:
        raise ValueError(f"palindrome_quota expects words:count, got {value!r}")
    return PalindromeQuota(_words(words), int(count))


def parse_constraints(text: str) -> ConstraintSet:
    """Read a constraint set; unknown keys and malformed values raise."""
    values: Dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep:
            raise ValueError(f"Line {lineno}: expected key=value, got {raw!r}")
        if key not in KEYS:
            raise ValueError(f"Line {lineno}: unknown constraint key {key!r}")
        if key in values:
            raise ValueError(f"Line {lineno}: {key} given twice")
        values[key] = value.strip()

    fields = _fields(values)
    if "preset" in values:
        constraints = preset(values["preset"]).with_(**fields)
    else:
        if "alphabet" not in fields:
            raise ValueError("Constraint file needs alphabet= or preset=")
        constraints = ConstraintSet(**fields)
    logger.debug(f"Parsed constraints: {constraints}")
    return constraints


def apply_overrides(c: ConstraintSet, overrides: Dict[str, str]) -> ConstraintSet:
    """Replace the fields named by ``key: value`` overrides."""
    rejected = sorted(set(overrides) - set(KEYS[1:]))
    if rejected:
        raise ValueError(f"Cannot override constraint keys {rejected}")
    if not overrides:
        return c
    return c.with_(**_fields(overrides))


def _fields(values: Dict[str, str]) -> Dict[str, Any]:
    fields: Dict[str, Any] = {}
    try:
        if "alphabet" in values:
            fields["alphabet"] = Alphabet(int(values["alphabet"]))
        if "name" in values:
            fields["name"] = values["name"]
        if "threshold" in values:
            fields["threshold"] = Threshold.parse(values["threshold"])
        if "max_palindromes" in values:
            fields["max_palindromes"] = int(values["max_palindromes"])
        if "forbid" in values:
            fields["forbidden_factors"] = _words(values["forbid"])
        if "square_free" in values:
            fields["square_free"] = _yes("square_free", values["square_free"])
        if "letter_patterns" in values:
            fields["letter_patterns"] = frozenset(
                LetterPattern.parse(p) for p in _words(values["letter_patterns"])
            )
        if "overpals" in values:
            fields["forbid_overpals"] = not _yes("overpals", values["overpals"])
        if "allowed_palindromes" in values:
            fields["allowed_palindromes"] = _words(values["allowed_palindromes"])
        if "palindrome_quota" in values:
            fields["palindrome_quota"] = _quota(values["palindrome_quota"])
        if "symmetry" in values:
            fields["symmetry"] = _yes("symmetry", values["symmetry"])
    except ValueError as e:
        raise ValueError(f"Malformed constraint value: {e}") from e
    return fields


def load_constraints(path: Union[str, Path]) -> ConstraintSet:
    target = Path(path)
    if not target.exists():
        raise FileNotFoundError(f"Constraint file not found: {path}")
    return parse_constraints(target.read_text(encoding="utf-8"))
