"""
Named constraint sets.
"""

from fractions import Fraction
from typing import Callable, Dict, List

from ..repetitions.threshold import Threshold
from ..words.alphabet import Alphabet
from .constraints import ConstraintSet, PalindromeQuota

TERNARY = Alphabet(3)

# fmt: off
F_ETA = frozenset(
    {
        "12", "21", "23", "31", "103", "302", "303", "132013", "320132",
        "2010201", "2013201", "3013203", "030102030",
    }
)
# fmt: on

F_GAMMA = frozenset(
    {
        "0210",
        "1021",
        "2102",
        "012010201210120212012",
        "020121012021201020121",
        "101202120102012101202",
        "120121012021201020120",
        "201202120102012101201",
        "212010201210120212010",
    }
)

BETTER_PALINDROME_HOSTS = frozenset(
    {"0120210", "01210", "02120", "10201", "20102", "21012"}
)

# the 16 palindromes of the ternary word with exactly 16 palindromes
# fmt: off
SIXTEEN_PALINDROMES = frozenset(
    {
        "", "0", "1", "2",
        "010", "020", "101", "121", "202", "212",
        "01210", "02120", "10201", "12021", "20102", "21012",
    }
)
# fmt: on


def eta_good() -> ConstraintSet:
    return ConstraintSet(
        Alphabet(4), square_free=True, forbidden_factors=F_ETA, name="eta-good"
    )


def gamma_good() -> ConstraintSet:
    return ConstraintSet(
        TERNARY, square_free=True, forbidden_factors=F_GAMMA, name="gamma-good"
    )


def sixteen_good() -> ConstraintSet:
    return ConstraintSet(
        TERNARY,
        threshold=Threshold(Fraction(52, 27)),
        max_palindromes=16,
        name="16-good",
    )


def seventeen_good() -> ConstraintSet:
    return ConstraintSet(
        TERNARY,
        threshold=Threshold(Fraction(25, 13)),
        max_palindromes=17,
        name="17-good",
    )


def seventeen_better() -> ConstraintSet:
    return seventeen_good().with_(
        allowed_palindromes=BETTER_PALINDROME_HOSTS, name="17-better"
    )


def seventeen_good_avoiding_01210() -> ConstraintSet:
    return seventeen_good().with_(
        forbidden_factors=frozenset({"01210"}), name="17-good-01210"
    )


def finite_six() -> ConstraintSet:
    return ConstraintSet(
        TERNARY,
        threshold=Threshold(Fraction(9, 4)),
        max_palindromes=6,
        palindrome_quota=PalindromeQuota(frozenset({"00", "11", "22"}), 1),
        name="finite-6",
    )


def square_free_avoiding_010() -> ConstraintSet:
    return ConstraintSet(
        TERNARY,
        square_free=True,
        forbidden_factors=frozenset({"010"}),
        max_palindromes=16,
        name="sqfree-010-16",
    )


def few_palindromes(at_most: int) -> ConstraintSet:
    return ConstraintSet(TERNARY, max_palindromes=at_most, name=f"pal-{at_most}")


def optimality(at_most: int, threshold: Threshold) -> ConstraintSet:
    """Ternary ``threshold``-free words with at most ``at_most`` palindromes."""
    return ConstraintSet(
        TERNARY,
        threshold=threshold,
        max_palindromes=at_most,
        name=f"opt-{at_most}-{threshold}",
    )


PRESETS: Dict[str, Callable[[], ConstraintSet]] = {
    "eta-good": eta_good,
    "gamma-good": gamma_good,
    "16-good": sixteen_good,
    "17-good": seventeen_good,
    "17-better": seventeen_better,
    "17-good-01210": seventeen_good_avoiding_01210,
    "finite-6": finite_six,
    "sqfree-010-16": square_free_avoiding_010,
    "pal-5": lambda: few_palindromes(5),
    "pal-3": lambda: few_palindromes(3),
    "opt-5-10/3": lambda: optimality(5, Threshold(Fraction(10, 3))),
    "opt-6-2": lambda: optimality(6, Threshold(2)),
    "opt-15-2": lambda: optimality(15, Threshold(2)),
    "opt-16-41/22": lambda: optimality(16, Threshold(Fraction(41, 22))),
    "opt-17-41/22": lambda: optimality(17, Threshold(Fraction(41, 22))),
}


def preset(name: str) -> ConstraintSet:
    if name not in PRESETS:
        raise ValueError(f"Unknown preset {name!r}; known: {', '.join(PRESETS)}")
    return PRESETS[name]()


def preset_names() -> List[str]:
    return list(PRESETS)
