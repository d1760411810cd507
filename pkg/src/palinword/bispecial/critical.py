"""
Critical exponent from bispecial factors and their shortest return words.

For a uniformly recurrent aperiodic word the critical exponent is
``1 + sup |w| / |r|`` over bispecial factors ``w`` with shortest return word
``r``.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from ..morphisms.classify import classify
from ..morphisms.generate import FixedPointWord, ImageWord, PeriodicWord, WordSource
from ..utils.errors import InstabilityError, InsufficientDataError
from ..utils.types import Provenance
from .families import sweep_families
from .profile import bispecial_profiles, stable_bispecial_prefix
from .returns import shortest_return_length

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AuditRecord:
    word_length: int
    return_length: int
    provenance: Provenance
    word: str = ""
    family: Optional[str] = None
    step: Optional[int] = None

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.word_length, self.return_length)

    def record(self) -> Dict[str, Any]:
        record: Dict[str, Any] = {
            "word_length": self.word_length,
            "return_length": self.return_length,
            "ratio": str(self.ratio),
            "provenance": self.provenance.value,
        }
        if self.family is not None:
            record["family"] = self.family
            record["step"] = self.step
        return record


@dataclass(frozen=True)
class CriticalExponentReport:
    source: str
    prefix_length: int
    records: Tuple[AuditRecord, ...] = field(default_factory=tuple)

    @property
    def maximum(self) -> AuditRecord:
        """Record with the largest ratio; the first one on ties."""
        best = self.records[0]
        for record in self.records[1:]:
            if record.ratio > best.ratio:
                best = record
        return best

    @property
    def max_ratio(self) -> Fraction:
        return self.maximum.ratio

    @property
    def exponent(self) -> Fraction:
        return 1 + self.max_ratio


def _check_preconditions(source: WordSource) -> None:
    if isinstance(source, PeriodicWord):
        raise ValueError(f"{source.name} is periodic; the formula needs aperiodicity")
    inner = source
    while isinstance(inner, ImageWord):
        inner = inner.inner
    if isinstance(inner, FixedPointWord) and not classify(inner.morphism).primitive:
        logger.warning(
            f"{inner.morphism.name or 'morphism'} is not primitive; uniform "
            f"recurrence of {source.name} is assumed"
        )


def critical_exponent_ddp(
    source: WordSource,
    max_length: int = 60,
    n_bispecial: Optional[int] = None,
    prefix_length: Optional[int] = None,
    family_steps: Optional[int] = None,
) -> CriticalExponentReport:
    """Brute-force ratios of bispecial factors, optionally joined by the
    family towers of ``g(h^ω(0))``.

    Args:
        source: Infinite word
        max_length: Longest bispecial factor examined
        n_bispecial: Only the first this many bispecial factors
        prefix_length: Fixed prefix length; stabilised by doubling when omitted
        family_steps: Add family members up to this step
    """
    _check_preconditions(source)
    if prefix_length is None:
        prefix_length, profiles = stable_bispecial_prefix(source, max_length)
    else:
        profiles = bispecial_profiles(source.prefix(prefix_length), max_length)
    if n_bispecial is not None:
        profiles = profiles[:n_bispecial]
    text = source.prefix(prefix_length)

    records: List[AuditRecord] = []
    for profile in profiles:
        try:
            r_length = shortest_return_length(text, profile.word)
        except InsufficientDataError as e:
            raise InstabilityError(
                f"Prefix of length {prefix_length} too short for {profile.word!r}"
            ) from e
        records.append(
            AuditRecord(
                len(profile.word), r_length, Provenance.BRUTE_FORCE, profile.word
            )
        )
    if family_steps is not None:
        for member in sweep_families(family_steps, bound=None):
            records.append(
                AuditRecord(
                    member.w_length,
                    member.r_length,
                    Provenance.FAMILY,
                    family=member.family,
                    step=member.step,
                )
            )
    if not records:
        raise InstabilityError(f"No bispecial factor of {source.name} found")
    report = CriticalExponentReport(source.name, prefix_length, tuple(records))
    logger.info(
        f"Critical exponent of {source.name}: {report.exponent} from "
        f"{len(records)} ratios"
    )
    return report
