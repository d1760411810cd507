"""
Built-in claims and the checks that reproduce them.

Every claim pairs a cell of the palindromes-versus-exponent table (or one of
the letter-pattern results) with a battery of checks.  Batteries that exceed
desk-scale runtimes run their expensive parts only in long mode and report
them as skipped otherwise.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

from ..avoidance.backtrack import backtrack
from ..avoidance.constraints import ConstraintSet
from ..avoidance.insertion import xyxyx_exponent_check
from ..avoidance.presets import preset
from ..bispecial.critical import critical_exponent_ddp
from ..bispecial.families import RATIO_BOUND, sweep_families
from ..config.config_main import PalinwordConfig
from ..generators.table import ClaimRow
from ..languages.factors import (
    extendable_core,
    factor_sets_equal,
    stable_factor_set,
)
from ..languages.rauzy import (
    component_containing,
    components_reversal_symmetric,
    is_isomorphic,
    rauzy_graph,
    scc_condensation,
    weak_components,
)
from ..morphisms.registry import fixture_for_claim, resolve_source
from ..morphisms.transfer import verify_cubefree_transfer_nonuniform, verify_transfer
from ..patterns.letter_pattern import LetterPattern, letter_pattern_occurs
from ..repetitions.exponents import max_exponent
from ..repetitions.returns import return_words
from ..repetitions.threshold import Threshold
from ..utils.errors import PalinwordError, RatioBoundError, SearchBudgetError
from ..utils.types import ClaimStatus, ExitCode, Outcome
from ..words.alphabet import Alphabet
from ..words.palindromes import palindrome_count
from ..words.transforms import erase_letter

logger = logging.getLogger(__name__)

CENSUS_SOURCE_LENGTH = 1_000
PREFIX_LENGTH = 10_000
G_PREFIX_LENGTH = 100_000
FAMILY_STEPS = 20
CORE_LENGTH = 186
BRUTE_FORCE_LENGTH = 200
FACTOR_LENGTH = 20
RAUZY_ORDER = 21
T_RETURNS = frozenset({"201", "2001", "2011", "20011"})
CRITICAL_41_22 = 1 + RATIO_BOUND
WITNESS_ROOTS = ("2012101202120102012021", "1201020121012021201210")


@dataclass(frozen=True)
class Claim:
    label: str
    palindromes: str
    exponent: str
    kind: str
    description: str


@dataclass
class ClaimResult:
    claim: Claim
    status: ClaimStatus = ClaimStatus.VERIFIED
    details: Dict[str, Any] = field(default_factory=dict)

    def check(self, name: str, ok: bool) -> bool:
        """Record a named check; a failed check refutes the claim."""
        self.details[name] = "pass" if ok else "fail"
        if not ok:
            logger.warning(f"Claim {self.claim.label}: check {name} failed")
            self.status = ClaimStatus.REFUTED
        return ok

    def skip(self, name: str) -> None:
        """Record a check that needs long mode."""
        self.details[name] = "skipped (--long)"
        if self.status is ClaimStatus.VERIFIED:
            self.status = ClaimStatus.INCONCLUSIVE

    def inconclusive(self, name: str, reason: str) -> None:
        self.details[name] = f"inconclusive: {reason}"
        if self.status is ClaimStatus.VERIFIED:
            self.status = ClaimStatus.INCONCLUSIVE

    def row(self) -> ClaimRow:
        return ClaimRow(
            self.claim.label,
            self.claim.palindromes,
            self.claim.exponent,
            self.claim.kind,
            self.status.value,
        )

    def record(self) -> Dict[str, Any]:
        record = {f"{self.claim.label}.{k}": v for k, v in self.details.items()}
        record[f"{self.claim.label}.status"] = self.status.value
        return record


# fmt: off
CLAIMS: List[Claim] = [
    Claim("3.a", "5", "10/3+", "exponential",
          "f maps binary cube-free words to 10/3+-free words, 5 palindromes"),
    Claim("3.b", "6", "9/4+", "exponential",
          "25-uniform morphism, 7/4+ -> 9/4+, 6 palindromes"),
    Claim("3.c", "7", "2+", "exponential",
          "4-uniform morphism, 7/4+ -> 2+, 7 palindromes"),
    Claim("3.d", "16", "52/27+", "exponential",
          "609-uniform morphism, 7/4+ -> 52/27+, 16 palindromes"),
    Claim("3.e", "17", "25/13+", "exponential",
          "121-uniform morphism, 7/4+ -> 25/13+, 17 palindromes"),
    Claim("3.f", "18", "7/4+", "exponential",
          "87-uniform morphism, 4-ary 7/5+ -> 7/4+, 18 palindromes"),
    Claim("5", "6", "2+", "polynomial",
          "fixed point of t: 6 palindromes, 2+-free"),
    Claim("8", "16", "41/22+", "polynomial",
          "g(h^w(0)): 16 palindromes, critical exponent 41/22"),
    Claim("periodic", "4", "inf", "polynomial",
          "(012)^w has 4 palindromes"),
    Claim("lp.a", "-", "15/8+", "pattern",
          "72-uniform morphism, 7/4+ -> 15/8+, avoids abaca"),
    Claim("lp.b", "-", "11/6+", "pattern",
          "73-uniform morphism, 7/4+ -> 11/6+, avoids abcab"),
    Claim("lp.c", "-", "7/4+", "pattern",
          "128-uniform morphism, 4-ary 7/5+ -> 7/4+, avoids abacbc"),
]
# fmt: on

TABLE_LABELS = ["3.a", "3.b", "3.c", "3.d", "3.e", "3.f", "5", "8", "periodic"]
LONG_TRANSFERS = frozenset({"3.d", "3.e", "3.f", "lp.a", "lp.b", "lp.c"})


def claim_labels() -> List[str]:
    return [c.label for c in CLAIMS]


def get_claim(label: str) -> Claim:
    for claim in CLAIMS:
        if claim.label == label:
            return claim
    raise ValueError(f"Unknown claim {label!r}; known: {', '.join(claim_labels())}")


def expand_selection(selection: str) -> List[str]:
    """Labels selected by ``table1``, ``all`` or a single label."""
    if selection == "table1":
        return list(TABLE_LABELS)
    if selection == "all":
        return claim_labels()
    return [get_claim(selection).label]


def source_word(
    size: int, threshold: Threshold, length: int, config: PalinwordConfig
) -> str:
    """A ``threshold``-free word of ``length`` letters over ``size`` letters.

    Raises:
        SearchBudgetError: When the search does not reach ``length``
    """
    c = ConstraintSet(Alphabet(size), threshold=threshold, name=f"{threshold}-free")
    certificate = backtrack(c, length, budget=config.budget.nodes)
    if certificate.outcome is not Outcome.REACHED:
        raise SearchBudgetError(
            f"No {threshold}-free word of length {length} over {size} letters "
            f"({certificate.outcome.value})"
        )
    return certificate.witness


def fractional_power(root: str, exponent: Fraction) -> str:
    """The prefix of ``root^ω`` of length ``exponent·|root|``."""
    length = exponent * len(root)
    if length.denominator != 1:
        raise ValueError(f"{root!r}^{exponent} has non-integral length")
    repeats = -(-int(length) // len(root))
    return (root * repeats)[: int(length)]


def _morphism_battery(result: ClaimResult, config: PalinwordConfig) -> None:
    fixture = fixture_for_claim(result.claim.label)
    m = fixture.morphism
    assert fixture.alpha is not None and fixture.beta is not None
    result.details["morphism"] = fixture.name

    source = source_word(
        m.source_alphabet.size, fixture.alpha, CENSUS_SOURCE_LENGTH, config
    )
    image = m.apply(source)
    result.details["census_source_length"] = len(source)
    if fixture.palindromes is not None:
        found = palindrome_count(image)
        result.details["image_palindromes"] = found
        result.check("palindrome_census", found <= fixture.palindromes)
    if fixture.pattern is not None:
        pattern = LetterPattern.parse(fixture.pattern)
        result.check("pattern_absent", not letter_pattern_occurs(image, pattern))

    if result.claim.label in LONG_TRANSFERS and not config.long_mode:
        result.skip("transfer")
        return
    transfer = verify_transfer(m, fixture.alpha, fixture.beta, jobs=config.jobs)
    result.details["transfer_t"] = transfer.bound
    result.details["transfer_length"] = transfer.length
    result.details["words_checked"] = transfer.words_checked
    if not transfer.passed:
        result.details["counterexample"] = transfer.counterexample
    result.check("transfer", transfer.passed)


def _cubefree_battery(result: ClaimResult, config: PalinwordConfig) -> None:
    fixture = fixture_for_claim("3.a")
    transfer = verify_cubefree_transfer_nonuniform()
    result.details["cube_free_words"] = transfer.words_checked
    if not transfer.passed:
        result.details["counterexample"] = transfer.counterexample
    result.check("transfer", transfer.passed)

    image = fixture.morphism.apply(resolve_source("thue-morse").prefix(2000))
    found = palindrome_count(image)
    result.details["image_palindromes"] = found
    result.check("palindrome_census", found <= 5)


def _t_battery(result: ClaimResult, config: PalinwordConfig) -> None:
    prefix = resolve_source("t").prefix(PREFIX_LENGTH)
    found = palindrome_count(prefix)
    result.details["palindromes"] = found
    result.check("palindrome_census", found == 6)

    exponent, _ = max_exponent(prefix)
    result.details["max_exponent"] = exponent
    result.check("square_plus_free", exponent == 2)

    returns = return_words(prefix, "2").returns
    result.details["returns_to_2"] = sorted(returns, key=lambda r: (len(r), r))
    result.check("returns_in_r1", returns <= T_RETURNS)

    same = factor_sets_equal(
        resolve_source("t"), resolve_source("inserted-tm"), FACTOR_LENGTH
    )
    result.check("insertion_factor_set", same)

    erased = erase_letter(prefix, "2")
    thue_morse = resolve_source("thue-morse").prefix(len(erased))
    result.check("erasure_is_thue_morse", erased == thue_morse)
    erased_exponent, _ = max_exponent(erased)
    result.check("erasure_overlap_free", erased_exponent == 2)

    xyxyx = xyxyx_exponent_check()
    result.details["xyxyx_candidates"] = xyxyx.candidates
    result.details["xyxyx_min_ratio"] = xyxyx.min_ratio
    result.check("xyxyx_above_9/4", xyxyx.ok)

    if not config.long_mode:
        result.skip("finite_6")
        return
    search = backtrack(preset("finite-6"), 10_000, budget=config.budget.nodes)
    result.details["finite_6_longest"] = search.longest_length
    if search.outcome is Outcome.BUDGET:
        result.inconclusive("finite_6", "node budget spent")
    else:
        result.check("finite_6", search.outcome is Outcome.EXHAUSTED)


def _rauzy_checks(result: ClaimResult, config: PalinwordConfig) -> None:
    core16 = extendable_core(preset("16-good"), RAUZY_ORDER, config.budget.nodes)
    g16 = rauzy_graph(core16)
    components = weak_components(g16)
    result.details["g16_arcs"] = g16.number_of_arcs()
    result.check("g16_two_components", len(components) == 2)
    result.check("g16_reversal_symmetric", components_reversal_symmetric(g16))

    factors = stable_factor_set(resolve_source("gamma(eta)"), RAUZY_ORDER)
    reference = rauzy_graph(factors)
    component = component_containing(g16, "0120")
    same = component is not None and component.same_as(reference)
    result.check("g16_component_is_gamma_eta", same)

    core17 = extendable_core(preset("17-better"), RAUZY_ORDER, config.budget.nodes)
    recurrent = scc_condensation(rauzy_graph(core17)).recurrent
    result.check("g17_recurrent_isomorphic", is_isomorphic(recurrent, g16))


def _core_186_checks(result: ClaimResult, config: PalinwordConfig) -> None:
    gamma_eta = stable_factor_set(resolve_source("gamma(eta)"), CORE_LENGTH)
    gh = stable_factor_set(resolve_source("g(h)"), CORE_LENGTH)
    result.check("gh_factors_are_gamma_eta", gh == gamma_eta)
    if not config.long_mode:
        result.skip("s186_core_is_gamma_eta")
        return
    core = extendable_core(preset("gamma-good"), CORE_LENGTH, config.budget.nodes)
    result.details["s186_size"] = len(core)
    result.check("s186_core_is_gamma_eta", core == gamma_eta)


def _g_battery(result: ClaimResult, config: PalinwordConfig) -> None:
    prefix = resolve_source("g(h)").prefix(G_PREFIX_LENGTH)
    found = palindrome_count(prefix)
    result.details["palindromes"] = found
    result.check("palindrome_census", found == 16)
    gamma_eta = palindrome_count(resolve_source("gamma(eta)").prefix(PREFIX_LENGTH))
    result.details["gamma_eta_palindromes"] = gamma_eta
    result.check("gamma_eta_census", gamma_eta == 16)

    exponent, _ = max_exponent(prefix)
    result.details["prefix_length"] = G_PREFIX_LENGTH
    result.details["max_exponent"] = exponent
    result.check("max_exponent_41/22", exponent == CRITICAL_41_22)
    for k, root in enumerate(WITNESS_ROOTS, start=1):
        witness = fractional_power(root, CRITICAL_41_22)
        result.check(f"witness_{k}", witness in prefix)

    try:
        members = sweep_families(n_max=FAMILY_STEPS)
    except RatioBoundError as e:
        result.details["family_violation"] = str(e)
        result.check("family_ratios", False)
    else:
        result.details["family_members"] = len(members)
        result.details["family_max_ratio"] = max(m.ratio for m in members)
        result.check("family_ratios", True)

    report = critical_exponent_ddp(resolve_source("g(h)"), family_steps=FAMILY_STEPS)
    result.details["critical_exponent"] = report.exponent
    result.check("critical_exponent", report.exponent == CRITICAL_41_22)
    _rauzy_checks(result, config)
    _core_186_checks(result, config)

    if not config.long_mode:
        result.skip("bispecial_ratios_200")
        return
    brute = critical_exponent_ddp(
        resolve_source("g(h)"), max_length=BRUTE_FORCE_LENGTH
    )
    result.details["bispecial_max_ratio_200"] = brute.max_ratio
    result.check("bispecial_ratios_200", brute.max_ratio <= RATIO_BOUND)


def _periodic_battery(result: ClaimResult, config: PalinwordConfig) -> None:
    found = palindrome_count(resolve_source("periodic-012").prefix(PREFIX_LENGTH))
    result.details["palindromes"] = found
    result.check("palindrome_census", found == 4)


BATTERIES: Dict[str, Callable[[ClaimResult, PalinwordConfig], None]] = {
    "3.a": _cubefree_battery,
    "3.b": _morphism_battery,
    "3.c": _morphism_battery,
    "3.d": _morphism_battery,
    "3.e": _morphism_battery,
    "3.f": _morphism_battery,
    "5": _t_battery,
    "8": _g_battery,
    "periodic": _periodic_battery,
    "lp.a": _morphism_battery,
    "lp.b": _morphism_battery,
    "lp.c": _morphism_battery,
}


def run_claim(label: str, config: Optional[PalinwordConfig] = None) -> ClaimResult:
    """Run the battery of one claim; budget exhaustion makes it inconclusive."""
    config = config or PalinwordConfig()
    result = ClaimResult(get_claim(label))
    logger.info(f"Reproducing claim {label}: {result.claim.description}")
    try:
        BATTERIES[label](result, config)
    except SearchBudgetError as e:
        result.inconclusive("search", str(e))
    except PalinwordError as e:
        logger.error(f"Claim {label}: {e}")
        result.inconclusive("error", str(e))
    logger.info(f"Claim {label}: {result.status.value}")
    return result


def combined_exit_code(results: List[ClaimResult]) -> ExitCode:
    """Refuted beats inconclusive beats verified."""
    statuses = {r.status for r in results}
    if ClaimStatus.REFUTED in statuses:
        return ExitCode.REFUTED
    if statuses & {ClaimStatus.INCONCLUSIVE, ClaimStatus.SKIPPED} or not results:
        return ExitCode.INCONCLUSIVE
    return ExitCode.VERIFIED
