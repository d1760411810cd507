"""
Exact exponent thresholds.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[Fraction, int, str]


@dataclass(frozen=True)
class Threshold:
    """Freeness threshold.

    ``plus=True`` reads "beta+-free" and forbids exponents strictly greater
    than ``value``; ``plus=False`` reads "beta-free" and forbids exponents
    greater than or equal to ``value``.
    """

    value: Fraction
    plus: bool = False

    def __post_init__(self) -> None:
        value = Fraction(self.value)
        if value <= 1:
            raise ValueError(f"Threshold must exceed 1, got {value}")
        object.__setattr__(self, "value", value)

    @classmethod
    def parse(cls, text: str) -> "Threshold":
        """Parse ``"41/22+"``, ``"52/27"`` or ``"2+"``."""
        raw = text.strip()
        plus = raw.endswith("+")
        if plus:
            raw = raw[:-1].strip()
        try:
            value = Fraction(raw)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Malformed threshold {text!r}: {e}") from e
        return cls(value, plus)

    def violated_by(self, exponent: Rational) -> bool:
        exponent = Fraction(exponent)
        if self.plus:
            return exponent > self.value
        return exponent >= self.value

    def min_violating_length(self, period: int) -> int:
        """Shortest length of a violating repetition with the given period."""
        bound = self.value * period
        if self.plus:
            return math.floor(bound) + 1
        return math.ceil(bound)

    def __str__(self) -> str:
        return f"{self.value}{'+' if self.plus else ''}"
