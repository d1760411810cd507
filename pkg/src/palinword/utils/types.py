"""
Enums and basic types shared across the package.
"""

from enum import Enum, IntEnum


class Outcome(Enum):
    """Outcome of a bounded exhaustive search."""

    EXHAUSTED = "EXHAUSTED"  # the whole tree was explored
    REACHED = "REACHED"  # a word of the target length exists
    BUDGET = "BUDGET"  # node budget spent, no claim either way


class ExitCode(IntEnum):
    """Process exit codes of the command-line front end."""

    VERIFIED = 0
    REFUTED = 1
    INCONCLUSIVE = 2
    USAGE = 3
    INAPPLICABLE = 4


class Crossing(Enum):
    """Which pairing of extension letters witnesses a bispecial triplet.

    For ``((a, b), w, (c, d))``: PARALLEL means ``awc`` and ``bwd`` occur,
    CROSSED means ``awd`` and ``bwc`` occur.
    """

    PARALLEL = "parallel"
    CROSSED = "crossed"

    def flipped(self) -> "Crossing":
        if self is Crossing.PARALLEL:
            return Crossing.CROSSED
        return Crossing.PARALLEL


class BispecialKind(Enum):
    """Classification of a bispecial factor by its bilateral multiplicity."""

    WEAK = "weak"
    ORDINARY = "ordinary"
    STRONG = "strong"


class Provenance(Enum):
    """Where a ratio in a critical-exponent audit comes from."""

    BRUTE_FORCE = "brute-force"
    FAMILY = "family"


class VisitAction(Enum):
    """What the tree walker does after visiting a node."""

    CONTINUE = "continue"  # descend into children
    SKIP = "skip"  # do not descend
    STOP = "stop"  # abort the walk


class ClaimStatus(Enum):
    """Status of one reproduced claim."""

    VERIFIED = "verified"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"
    SKIPPED = "skipped"

    @property
    def exit_code(self) -> ExitCode:
        return {
            ClaimStatus.VERIFIED: ExitCode.VERIFIED,
            ClaimStatus.REFUTED: ExitCode.REFUTED,
            ClaimStatus.INCONCLUSIVE: ExitCode.INCONCLUSIVE,
            ClaimStatus.SKIPPED: ExitCode.INCONCLUSIVE,
        }[self]
