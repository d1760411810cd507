"""
Repetitions and freeness reports.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple


@dataclass(frozen=True)
class Repetition:
    """Factor ``w[start:start+length]`` having period ``period``."""

    start: int
    period: int
    length: int

    def __post_init__(self) -> None:
        if self.period < 1 or self.length < 1 or self.start < 0:
            raise ValueError(f"Invalid repetition {self}")

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.length, self.period)

    @property
    def end(self) -> int:
        return self.start + self.length

    def factor(self, w: str) -> str:
        return w[self.start : self.end]

    def root(self, w: str) -> str:
        return w[self.start : self.start + self.period]

    def holds_in(self, w: str) -> bool:
        """Check the period positionally."""
        if self.end > len(w):
            return False
        stop = self.end - self.period
        return all(w[i] == w[i + self.period] for i in range(self.start, stop))

    def as_tuple(self) -> Tuple[int, int, int, Fraction]:
        return (self.start, self.period, self.length, self.exponent)

    def __str__(self) -> str:
        return (
            f"(start={self.start}, period={self.period}, length={self.length}, "
            f"exponent={self.exponent})"
        )


@dataclass(frozen=True)
class FreenessReport:
    """Result of a freeness check; truthy iff the word is free."""

    free: bool
    witness: Optional[Repetition] = None

    def __bool__(self) -> bool:
        return self.free
