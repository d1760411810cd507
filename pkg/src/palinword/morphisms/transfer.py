"""
Freeness transfer through uniform synchronizing morphisms.

If ``h`` is q-uniform and synchronizing, ``1 < a < b``, and ``h(w)`` is
beta-free for every alpha-free word ``w`` with ``|w| <= t``, then ``h(z)`` is
beta-free for every alpha-free ``z``, where
``t = max(2b/(b-a), 2(q-1)(2b-1)/(q(b-1)))``.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

from ..avoidance.constraints import ConstraintSet
from ..avoidance.counting import enumerate_words
from ..avoidance.engine import walk
from ..avoidance.state import SearchState
from ..repetitions.exponents import is_free
from ..repetitions.repetition import Repetition
from ..repetitions.threshold import Threshold
from ..search.partition import map_ordered
from ..utils.errors import LemmaInapplicableError
from ..utils.types import VisitAction
from ..words.alphabet import Alphabet
from .classify import classify
from .morphism import Morphism

logger = logging.getLogger(__name__)

CUBEFREE_MORPHISM = Morphism(["012", "0012"], Alphabet(3), "f")
SPLIT_DEPTH = 2


def mrs_bound(a: Union[Fraction, int], b: Union[Fraction, int], q: int) -> Fraction:
    """``max(2b/(b-a), 2(q-1)(2b-1)/(q(b-1)))`` in exact arithmetic."""
    a, b = Fraction(a), Fraction(b)
    if not 1 < a < b:
        raise ValueError(f"Transfer bound needs 1 < a < b, got a={a}, b={b}")
    if q < 1:
        raise ValueError(f"Uniformity q must be positive, got {q}")
    return max(2 * b / (b - a), Fraction(2 * (q - 1) * (2 * b - 1), q * (b - 1)))


@dataclass(frozen=True)
class TransferCertificate:
    morphism: str
    alpha: Optional[Threshold]
    beta: Threshold
    uniform_length: Optional[int]
    bound: Optional[Fraction]
    length: int
    words_checked: int
    leaves_checked: int
    counterexample: Optional[str] = None
    witness: Optional[Repetition] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def record(self) -> Dict[str, Any]:
        record: Dict[str, Any] = {
            "morphism": self.morphism,
            "alpha": str(self.alpha) if self.alpha else "",
            "beta": str(self.beta),
            "q": self.uniform_length if self.uniform_length else "non-uniform",
            "t": str(self.bound) if self.bound is not None else "",
            "length": self.length,
            "words_checked": self.words_checked,
            "result": "pass" if self.passed else "fail",
        }
        if not self.passed and self.witness is not None:
            record["counterexample"] = self.counterexample
            record["witness"] = self.witness.as_tuple()
        return record


class _LeafChecker:
    """Visitor checking images at the leaves of the source tree.

    Images of prefixes are factors of images of their extensions, so
    checking leaves covers every visited word.
    """

    def __init__(self, m: Morphism, beta: Threshold, roots_at: Optional[int] = None):
        self.m = m
        self.beta = beta
        self.roots_at = roots_at
        self.pending: Optional[str] = None
        self.words = 0
        self.leaves = 0
        self.roots: List[str] = []
        self.failure: Optional[Tuple[str, Repetition]] = None

    def __call__(self, state: SearchState) -> VisitAction:
        text = state.text
        if self.pending is not None and len(text) <= len(self.pending):
            if self._check(self.pending):
                return VisitAction.STOP
        self.pending = None
        if text:
            self.words += 1
        if self.roots_at is not None and len(text) == self.roots_at:
            self.roots.append(text)
            return VisitAction.SKIP
        self.pending = text
        return VisitAction.CONTINUE

    def finish(self) -> None:
        if self.pending is not None and self.failure is None:
            self._check(self.pending)
        self.pending = None

    def _check(self, w: str) -> bool:
        self.leaves += 1
        if is_free(self.m.apply(w), self.beta):
            return False
        for k in range(1, len(w) + 1):
            report = is_free(self.m.apply(w[:k]), self.beta)
            if not report:
                assert report.witness is not None
                self.failure = (w[:k], report.witness)
                logger.info(f"Transfer counterexample {w[:k]!r}: {report.witness}")
                return True
        return False


_Task = Tuple[Morphism, Threshold, Threshold, int, str]


def _check_subtree(task: _Task) -> Tuple[int, int, Optional[Tuple[str, Repetition]]]:
    m, alpha, beta, length, prefix = task
    checker = _LeafChecker(m, beta)
    source = ConstraintSet(m.source_alphabet, threshold=alpha)
    walk(source, checker, max_length=length, prefix=prefix)
    checker.finish()
    return checker.words, checker.leaves, checker.failure


def verify_transfer(
    m: Morphism,
    alpha: Threshold,
    beta: Threshold,
    max_length: Optional[int] = None,
    jobs: int = 1,
) -> TransferCertificate:
    """Check the transfer hypothesis for every alpha-free word of length at
    most ``ceil(t)``.

    ``max_length`` overrides the computed length.  The counterexample, when
    there is one, is the lexicographically least failing source word.

    Raises:
        LemmaInapplicableError: ``m`` is not uniform and synchronizing
    """
    cls = classify(m)
    if cls.uniform_length is None or not cls.synchronizing:
        raise LemmaInapplicableError(
            f"{m.name or m!r} is not uniform and synchronizing "
            f"(uniform_length={cls.uniform_length}, synchronizing={cls.synchronizing})"
        )
    bound: Optional[Fraction] = None
    if max_length is None:
        bound = mrs_bound(alpha.value, beta.value, cls.uniform_length)
        max_length = math.ceil(bound)
    logger.info(
        f"Transfer check for {m.name or 'morphism'}: {alpha} -> {beta}, "
        f"q={cls.uniform_length}, t={bound}, length {max_length}"
    )

    source = ConstraintSet(m.source_alphabet, threshold=alpha)
    if jobs > 1 and max_length > SPLIT_DEPTH:
        shallow = _LeafChecker(m, beta, roots_at=SPLIT_DEPTH)
        walk(source, shallow, max_length=SPLIT_DEPTH)
        shallow.finish()
        results = map_ordered(
            _check_subtree,
            [(m, alpha, beta, max_length, root) for root in shallow.roots],
            jobs,
        )
        words = shallow.words + sum(r[0] - 1 for r in results)
        leaves = shallow.leaves + sum(r[1] for r in results)
        failures = [shallow.failure] + [r[2] for r in results]
        failure = _least_failure([f for f in failures if f is not None])
    else:
        checker = _LeafChecker(m, beta)
        walk(source, checker, max_length=max_length)
        checker.finish()
        words, leaves, failure = checker.words, checker.leaves, checker.failure

    return TransferCertificate(
        morphism=m.name,
        alpha=alpha,
        beta=beta,
        uniform_length=cls.uniform_length,
        bound=bound,
        length=max_length,
        words_checked=words,
        leaves_checked=leaves,
        counterexample=failure[0] if failure else None,
        witness=failure[1] if failure else None,
    )


def _least_failure(
    failures: List[Tuple[str, Repetition]]
) -> Optional[Tuple[str, Repetition]]:
    return min(failures, key=lambda f: f[0]) if failures else None


def verify_cubefree_transfer_nonuniform(
    beta: Threshold = Threshold(Fraction(10, 3), plus=True),
    length: int = 24,
    m: Morphism = CUBEFREE_MORPHISM,
) -> TransferCertificate:
    """Check that the image of every binary cube-free word of ``length``
    letters is ``beta``-free."""
    source = ConstraintSet(Alphabet(2), threshold=Threshold(3), name="cube-free")
    words = enumerate_words(source, length)
    logger.info(f"{len(words)} binary cube-free words of length {length}")
    for w in words:
        report = is_free(m.apply(w), beta)
        if not report:
            return TransferCertificate(
                morphism=m.name,
                alpha=Threshold(3),
                beta=beta,
                uniform_length=None,
                bound=None,
                length=length,
                words_checked=len(words),
                leaves_checked=len(words),
                counterexample=w,
                witness=report.witness,
            )
    return TransferCertificate(
        morphism=m.name,
        alpha=Threshold(3),
        beta=beta,
        uniform_length=None,
        bound=None,
        length=length,
        words_checked=len(words),
        leaves_checked=len(words),
    )
