"""
Families of bispecial factors of the fixed point of h and of its image
under g.

Each family starts from an initial triplet and follows its f-images.  Cores
grow exponentially, so towers are carried as Parikh vectors with exact
matrices: ``core' = parikh(u1) + M core + parikh(u2)``.  From the base step
on, the core has exactly two left and two right extensions, so the shortest
return words of later members are images of those at the base step.

Lengths in ``g(h^ω(0))``: the member ``W = x g(w) y`` with ``x`` the longest
common suffix of the g-images of the left extensions and ``y`` the longest
common prefix of the g-images of the right extensions, where 2 is read as
12 on the left and 0 as 01 on the right (2 is always preceded by 1 and 0 is
always followed by 1 in the fixed point of h).
"""

import logging
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import sympy

from ..morphisms.expressions import evaluate
from ..morphisms.matrix import parikh_matrix
from ..morphisms.morphism import Morphism
from ..morphisms.registry import load_morphism
from ..utils.errors import RatioBoundError
from ..words.transforms import parikh
from .triplets import BispecialTriplet, Pair, common_suffix, f_image, image_step

logger = logging.getLogger(__name__)

RATIO_BOUND = Fraction(19, 22)
LEFT_CONTEXT = {"2": "12"}
RIGHT_CONTEXT = {"0": "01"}


@dataclass(frozen=True)
class FamilySeed:
    """Initial triplet of a family and the shortest return words at its
    base step, in word-expression notation over h."""

    label: str
    initial: BispecialTriplet
    base_step: int
    base_word: str
    base_returns: Tuple[str, ...]


def _seed(
    label: str,
    left: str,
    core: str,
    right: str,
    base_step: int,
    base_word: str,
    *returns: str,
) -> FamilySeed:
    triplet = BispecialTriplet.of((left[0], left[1]), core, (right[0], right[1]))
    return FamilySeed(label, triplet, base_step, base_word, returns)


# fmt: off
FAMILY_SEEDS: Tuple[FamilySeed, ...] = (
    _seed("1", "02", "", "13", 2, "12h(12)0121301", "12h(12)h(01)01213013"),
    _seed("2", "12", "", "23", 2, "h(012)", "h(01231)"),
    _seed("3", "12", "", "03", 1, "0121301", "0121301231"),
    _seed("4", "23", "", "03", 1, "013120121301", "013120121301231012"),
    _seed("5", "23", "", "13", 1, "01312", "0131201213"),
    _seed("6", "03", "1", "02", 1, "12h(1)012", "12h(1)012013"),
    _seed("7", "23", "1", "03", 1, "01312h(1)0121301", "01312h(1)0121301231012"),
    _seed("8", "03", "1", "03", 1, "12h(1)0121301", "12h(1)0121301231012013"),
    _seed("9", "23", "1", "23", 1, "01312h(1)012", "01312h(1)0120131201213"),
    _seed("10", "12", "3", "01", 0, "3", "301", "312"),
    _seed("11", "23", "01", "23", 1, "01312h(01)012", "01312h(01)012130131231012"),
    _seed("12", "12", "01", "23", 1, "h(01)012", "h(01)01201312"),
    _seed("13", "03", "12", "01", 1, "12h(12)", "12h(12)012130"),
    _seed("14", "02", "13", "01", 0, "13", "130"),
    _seed("15", "12", "31", "02", 0, "31", "312"),
    _seed("16", "23", "012", "13", 1, "01312h(012)", "01312h(012)3101213"),
    _seed("17", "13", "012", "03", 1, "h(012)0121301", "h(01231)"),
    _seed("18", "03", "1201", "23", 0, "1201", "12013"),
)
# fmt: on


def family_seed(label: str) -> FamilySeed:
    """Seed by label; ``case-15`` and ``15`` name the same family."""
    key = label[len("case-") :] if label.startswith("case-") else label
    for seed in FAMILY_SEEDS:
        if seed.label == key:
            return seed
    raise ValueError(f"Unknown bispecial family {label!r}")


@dataclass(frozen=True)
class FamilyMember:
    """One step of a family tower with its lengths in ``g(h^ω(0))``."""

    family: str
    step: int
    left: Pair
    right: Pair
    core: Tuple[int, ...]
    w_length: int
    r_length: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.w_length, self.r_length)


def _column(counts: Tuple[int, ...]) -> sympy.Matrix:
    return sympy.Matrix(list(counts))


class FamilyTower:
    """Parikh-level tower of one family."""

    def __init__(
        self,
        seed: FamilySeed,
        h: Optional[Morphism] = None,
        g: Optional[Morphism] = None,
    ):
        """
        Args:
            seed: Family to follow
            h: Endomorphism generating the f-images (built-in ``h`` by default)
            g: Coding applied afterwards (built-in ``g`` by default)
        """
        self.seed = seed
        self.h = h or load_morphism("h")
        self.g = g or load_morphism("g")
        self.M = parikh_matrix(self.h)
        self.weights = sympy.ones(1, self.g.target_alphabet.size) * parikh_matrix(
            self.g
        )
        self._size = self.h.target_alphabet.size

    def _parikh(self, w: str) -> sympy.Matrix:
        return _column(parikh(w, self.h.target_alphabet).counts)

    def steps(self, n: int) -> List[Tuple[Pair, Pair, sympy.Matrix]]:
        """Extension pairs and core Parikh vector for steps ``0..n``."""
        t = self.seed.initial
        left, right, core = t.left, t.right, self._parikh(t.core)
        out = [(left, right, core)]
        for _ in range(n):
            step = image_step(self.h, left, right)
            core = self._parikh(step.prefix) + self.M * core + self._parikh(step.suffix)
            left, right = step.left, step.right
            out.append((left, right, core))
        return out

    def base_word(self) -> str:
        return evaluate(self.seed.base_word, {"h": self.h})

    def base_return_vectors(self) -> List[sympy.Matrix]:
        return [
            self._parikh(evaluate(r, {"h": self.h})) for r in self.seed.base_returns
        ]

    def word_chain(self) -> List[BispecialTriplet]:
        """Word-level triplets for steps ``0..base_step``."""
        chain = [self.seed.initial]
        for _ in range(self.seed.base_step):
            chain.append(f_image(chain[-1], self.h))
        return chain

    def base_matches(self) -> bool:
        """The core at the base step equals the transcribed base word."""
        return self.word_chain()[-1].core == self.base_word()

    def outer_lengths(self, left: Pair, right: Pair) -> Tuple[int, int]:
        """``|x|`` and ``|y|`` for the g-level member."""
        a, b = (self.g.apply(LEFT_CONTEXT.get(x, x)) for x in left)
        c, d = (self.g.apply(RIGHT_CONTEXT.get(x, x)) for x in right)
        return len(common_suffix(a, b)), len(os.path.commonprefix([c, d]))

    def members(self, n_max: int) -> List[FamilyMember]:
        """Members from the base step up to step ``n_max``."""
        base = self.seed.base_step
        returns = self.base_return_vectors()
        members = []
        for step, (left, right, core) in enumerate(self.steps(n_max)):
            if step < base:
                continue
            power = self.M ** (step - base)
            r_length = min(int((self.weights * power * r)[0]) for r in returns)
            x, y = self.outer_lengths(left, right)
            w_length = x + int((self.weights * core)[0]) + y
            members.append(
                FamilyMember(
                    family=self.seed.label,
                    step=step,
                    left=left,
                    right=right,
                    core=tuple(int(v) for v in core),
                    w_length=w_length,
                    r_length=r_length,
                )
            )
        return members

    def g_level_word(self, triplet: BispecialTriplet) -> str:
        """The member ``x g(w) y`` as a word, for short cores."""
        a, b = (self.g.apply(LEFT_CONTEXT.get(x, x)) for x in triplet.left)
        c, d = (self.g.apply(RIGHT_CONTEXT.get(x, x)) for x in triplet.right)
        return (
            common_suffix(a, b)
            + self.g.apply(triplet.core)
            + os.path.commonprefix([c, d])
        )


@lru_cache(maxsize=None)
def _tower(label: str) -> FamilyTower:
    return FamilyTower(family_seed(label))


def family_ratio_bound(
    family: str, n_max: int, bound: Fraction = RATIO_BOUND
) -> List[Fraction]:
    """Exact ratios ``|W|/|R|`` of a family from its base step to ``n_max``.

    Raises:
        RatioBoundError: At the first step whose ratio exceeds ``bound``
    """
    tower = _tower(family_seed(family).label)
    ratios = []
    for member in tower.members(n_max):
        if member.ratio > bound:
            raise RatioBoundError(family, member.step, member.ratio, bound)
        ratios.append(member.ratio)
    logger.debug(f"Family {family}: {len(ratios)} ratios, max {max(ratios)}")
    return ratios


def sweep_families(
    n_max: int = 20, bound: Optional[Fraction] = RATIO_BOUND
) -> List[FamilyMember]:
    """Members of every family up to step ``n_max``, checked against
    ``bound`` unless it is ``None``."""
    members: List[FamilyMember] = []
    for seed in FAMILY_SEEDS:
        for member in _tower(seed.label).members(n_max):
            if bound is not None and member.ratio > bound:
                raise RatioBoundError(seed.label, member.step, member.ratio, bound)
            members.append(member)
    logger.info(
        f"Swept {len(FAMILY_SEEDS)} families up to step {n_max}: "
        f"max ratio {max(m.ratio for m in members)}"
    )
    return members


def _vector(*entries: int) -> sympy.Matrix:
    return sympy.Matrix(list(entries))


def closed_form_core(family: str, n: int, M: sympy.Matrix) -> sympy.Matrix:
    """Parikh vector of the core at step ``1 + 3n`` for families 1 and 15."""
    label = family_seed(family).label
    ones_pair = _vector(0, 1, 1, 0)
    boundary = _vector(2, 3, 1, 1)
    tail = _vector(1, 1, 1, 0)
    total = sympy.zeros(4, 1)
    if label == "1":
        for j in range(3 * n + 1):
            total += M**j * ones_pair
        for j in range(n):
            total += M ** (3 * j) * (M**2 * boundary + M * tail)
        return total
    if label == "15":
        total += M ** (3 * n + 1) * _vector(0, 1, 0, 1)
        for j in range(n + 1):
            total += M ** (3 * j) * tail
        for j in range(n):
            total += M ** (3 * j + 1) * boundary
        return total
    raise ValueError(f"No closed form for family {family!r}")


def weighted_lengths(j: int, tower: Optional[FamilyTower] = None) -> Tuple[int, ...]:
    """``(1, 1, 1) N M^j``: the g-image length of each letter's M^j image."""
    tower = tower or _tower("1")
    row = tower.weights * tower.M**j
    return tuple(int(v) for v in row)


def weighted_lengths_closed_form(j: int) -> Tuple[Fraction, ...]:
    p = 6**j
    return tuple(
        Fraction(v, 5) for v in (44 * p - 9, 11 * p + 9, 44 * p - 9, 55 * p)
    )


def tail_bound(family: str, step: int) -> Fraction:
    """Upper bound on the ratio at ``step`` for families 1 and 15."""
    label = family_seed(family).label
    if step < 1:
        raise ValueError(f"Tail bounds start at step 1, got {step}")
    n, phase = divmod(step - 1, 3)
    constants: Dict[str, Tuple[Fraction, Tuple[Fraction, Fraction, Fraction]]] = {
        "1": (
            Fraction(688, 1075),
            (
                Fraction(10, 33 * 6 ** (3 * n)),
                Fraction(5, 33 * 6 ** (3 * n + 1)),
                Fraction(4, 33 * 6 ** (3 * n + 2)),
            ),
        ),
        "15": (
            Fraction(817, 1075),
            (
                Fraction(2, 55 * 6 ** (3 * n)),
                Fraction(9, 110 * 6 ** (3 * n + 1)),
                Fraction(29, 110 * 6 ** (3 * n + 3)),
            ),
        ),
    }
    if label not in constants:
        raise ValueError(f"No tail bound for family {family!r}")
    limit, terms = constants[label]
    return limit + terms[phase]
