"""
Subcommand implementations.

Each command reads its parsed arguments, records the canonical inputs, and
returns the result record with the exit code.  With ``--check-only`` a
command stops once its inputs are parsed.
"""

import argparse
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Tuple

from ..avoidance.backtrack import backtrack
from ..avoidance.constraints import ConstraintSet
from ..avoidance.engine import WalkCheckpoint
from ..avoidance.presets import preset
from ..bispecial.critical import critical_exponent_ddp
from ..bispecial.families import RATIO_BOUND, sweep_families
from ..bispecial.profile import bispecial_profiles
from ..bispecial.triplets import discover_initial_triplets, reduce_initial_triplets
from ..config.config_main import PalinwordConfig
from ..config.constraints_file import KEYS, apply_overrides, load_constraints
from ..generators.table import render_claims_table
from ..languages.factors import extendable_core, stable_factor_set
from ..languages.rauzy import (
    component_containing,
    components_reversal_symmetric,
    is_isomorphic,
    rauzy_graph,
    scc_condensation,
    weak_components,
)
from ..morphisms.classify import classify
from ..morphisms.generate import fixed_point_prefix
from ..morphisms.morphism import Morphism
from ..morphisms.registry import fixture_names, load_fixture, resolve_source
from ..morphisms.transfer import verify_transfer
from ..repetitions.exponents import is_free, max_exponent
from ..repetitions.threshold import Threshold
from ..utils.errors import UsageError
from ..utils.types import ExitCode, Outcome
from ..words.palindromes import distinct_palindromes
from .claims import combined_exit_code, expand_selection, run_claim, source_word

logger = logging.getLogger(__name__)

OVERRIDE_KEYS = KEYS[3:]


@dataclass
class CommandResult:
    inputs: Dict[str, Any] = field(default_factory=dict)
    result: Dict[str, Any] = field(default_factory=dict)
    exit_code: ExitCode = ExitCode.VERIFIED
    report: str = ""


def _checked(inputs: Dict[str, Any]) -> CommandResult:
    return CommandResult(inputs, {"check_only": True})


def _verdict(ok: bool) -> ExitCode:
    return ExitCode.VERIFIED if ok else ExitCode.REFUTED


def read_word(args: argparse.Namespace) -> Tuple[str, Dict[str, Any]]:
    """The word named by ``--word`` or the prefix of ``--source``."""
    if args.word is not None:
        if not args.word.isdigit():
            raise UsageError(f"--word expects digits, got {args.word!r}")
        return args.word, {"word": args.word}
    if args.length < 1:
        raise UsageError(f"--length must be positive, got {args.length}")
    source = resolve_source(args.source)
    return source.prefix(args.length), {"source": args.source, "length": args.length}


def read_constraints(args: argparse.Namespace) -> ConstraintSet:
    """Constraint set from ``--preset`` or ``--constraints`` plus overrides."""
    if args.preset and args.constraints:
        raise UsageError("--preset and --constraints are mutually exclusive")
    if args.constraints:
        c = load_constraints(args.constraints)
    elif args.preset:
        c = preset(args.preset)
    else:
        raise UsageError("A constraint set needs --preset or --constraints")
    overrides = {
        key: getattr(args, key)
        for key in OVERRIDE_KEYS
        if getattr(args, key, None) is not None
    }
    return apply_overrides(c, overrides)


def read_morphism(spec: str) -> Tuple[Morphism, Dict[str, Any]]:
    """A morphism from a file or a built-in fixture name."""
    path = Path(spec)
    if path.is_file():
        return Morphism.parse(path.read_text(encoding="utf-8"), name=path.stem), {}
    if spec in fixture_names():
        fixture = load_fixture(spec)
        defaults = {
            "alpha": fixture.alpha,
            "beta": fixture.beta,
            "palindromes": fixture.palindromes,
        }
        return fixture.morphism, {k: v for k, v in defaults.items() if v is not None}
    raise UsageError(f"{spec!r} is neither a morphism file nor a built-in fixture")


def cmd_verify_morphism(
    args: argparse.Namespace, config: PalinwordConfig
) -> CommandResult:
    m, defaults = read_morphism(args.morphism)
    alpha = Threshold.parse(args.alpha) if args.alpha else defaults.get("alpha")
    beta = Threshold.parse(args.beta) if args.beta else defaults.get("beta")
    bound = args.palindromes
    if bound is None:
        bound = defaults.get("palindromes")
    if alpha is None or beta is None:
        raise UsageError("verify-morphism needs --alpha and --beta")
    inputs = {
        "morphism": m.name or args.morphism,
        "images": list(m.images),
        "alpha": alpha,
        "beta": beta,
        "palindrome_bound": bound,
        "census_length": args.census_length,
    }
    if args.check_only:
        return _checked(inputs)

    cls = classify(m)
    transfer = verify_transfer(m, alpha, beta, args.max_length, config.jobs)
    result: Dict[str, Any] = {
        "uniform_length": cls.uniform_length,
        "synchronizing": cls.synchronizing,
        "primitive": cls.primitive,
    }
    result.update({f"transfer_{k}": v for k, v in transfer.record().items()})
    ok = transfer.passed
    if bound is not None:
        source = source_word(m.source_alphabet.size, alpha, args.census_length, config)
        palindromes = distinct_palindromes(m.apply(source))
        result["image_palindromes"] = len(palindromes)
        ok = ok and len(palindromes) <= bound
    result["outcome"] = "PASS" if ok else "FAIL"
    return CommandResult(inputs, result, _verdict(ok))


def cmd_backtrack(args: argparse.Namespace, config: PalinwordConfig) -> CommandResult:
    c = read_constraints(args)
    inputs = {"constraints": c.describe(), "target": args.target, "expect": args.expect}
    if args.check_only:
        return _checked(inputs)
    resume = WalkCheckpoint.load(args.resume) if args.resume else None
    certificate = backtrack(
        c, args.target, config.budget.nodes, config.policy(), resume=resume
    )
    result = certificate.record()
    result["nodes_expanded"] = certificate.nodes_expanded
    if certificate.outcome is Outcome.BUDGET:
        return CommandResult(inputs, result, ExitCode.INCONCLUSIVE)
    return CommandResult(
        inputs, result, _verdict(certificate.outcome.value.lower() == args.expect)
    )


def cmd_census(args: argparse.Namespace, config: PalinwordConfig) -> CommandResult:
    w, inputs = read_word(args)
    inputs["expect"] = args.expect
    if args.check_only:
        return _checked(inputs)
    palindromes = distinct_palindromes(w)
    result: Dict[str, Any] = {"palindromes": len(palindromes)}
    if args.list:
        result["palindrome_list"] = [p or "ε" for p in palindromes]
    ok = args.expect is None or len(palindromes) == args.expect
    return CommandResult(inputs, result, _verdict(ok))


def cmd_max_exponent(
    args: argparse.Namespace, config: PalinwordConfig
) -> CommandResult:
    w, inputs = read_word(args)
    threshold = Threshold.parse(args.threshold) if args.threshold else None
    inputs["threshold"] = threshold
    if args.check_only:
        return _checked(inputs)
    exponent, witness = max_exponent(w)
    result: Dict[str, Any] = {
        "exponent": exponent,
        "start": witness.start,
        "period": witness.period,
        "length": witness.length,
    }
    if threshold is None:
        return CommandResult(inputs, result)
    report = is_free(w, threshold)
    result["free"] = report.free
    return CommandResult(inputs, result, _verdict(report.free))


def cmd_core(args: argparse.Namespace, config: PalinwordConfig) -> CommandResult:
    c = read_constraints(args)
    inputs = {"constraints": c.describe(), "length": args.length}
    inputs["compare"] = args.compare
    if args.check_only:
        return _checked(inputs)
    core = extendable_core(c, args.length, config.budget.nodes)
    result: Dict[str, Any] = {
        "size": len(core),
        "reversal_closed": core.is_reversal_closed(),
    }
    if args.compare is None:
        return CommandResult(inputs, result)
    factors = stable_factor_set(resolve_source(args.compare), args.length)
    result["only_core"] = len(core.members - factors.members)
    result["only_source"] = len(factors.members - core.members)
    return CommandResult(inputs, result, _verdict(core == factors))


def cmd_rauzy(args: argparse.Namespace, config: PalinwordConfig) -> CommandResult:
    c = read_constraints(args)
    inputs = {
        "constraints": c.describe(),
        "order": args.order,
        "anchor": args.anchor,
        "compare": args.compare,
        "against": args.against,
    }
    if args.check_only:
        return _checked(inputs)
    g = rauzy_graph(extendable_core(c, args.order, config.budget.nodes))
    components = weak_components(g)
    scc = scc_condensation(g)
    result: Dict[str, Any] = {
        "vertices": len(g.vertices),
        "arcs": g.number_of_arcs(),
        "components": len(components),
        "strong_components": len(scc.nontrivial),
        "reversal_symmetric": components_reversal_symmetric(g),
    }
    if len(scc.nontrivial) != len(components):
        logger.warning(
            f"{len(components)} weak components but "
            f"{len(scc.nontrivial)} cyclic strong components"
        )
    ok = True
    if args.compare is not None:
        reference = rauzy_graph(
            stable_factor_set(resolve_source(args.compare), args.order)
        )
        part = component_containing(g, args.anchor) if args.anchor else g
        same = part is not None and part.same_as(reference)
        result["equals_source_graph"] = same
        ok = ok and same
    if args.against is not None:
        other = preset(args.against)
        other_core = extendable_core(other, args.order, config.budget.nodes)
        recurrent = scc.recurrent
        isomorphic = is_isomorphic(recurrent, rauzy_graph(other_core))
        result["recurrent_isomorphic"] = isomorphic
        ok = ok and isomorphic
    return CommandResult(inputs, result, _verdict(ok))


def cmd_bispecial(args: argparse.Namespace, config: PalinwordConfig) -> CommandResult:
    inputs = {
        "source": args.source,
        "length": args.length,
        "max_length": args.max_length,
        "triplets": args.triplets,
        "families": args.families,
    }
    if args.check_only:
        return _checked(inputs)
    prefix = resolve_source(args.source).prefix(args.length)
    profiles = bispecial_profiles(prefix, args.max_length)
    result: Dict[str, Any] = {
        "bispecial": len(profiles),
        "factors": [str(p) for p in profiles],
    }
    if args.triplets:
        m, _ = read_morphism(args.triplets)
        text = fixed_point_prefix(m, 0, args.length)
        found = discover_initial_triplets(m, text, args.max_length)
        result["initial_triplets"] = [
            str(t) for t in reduce_initial_triplets(found, m)
        ]
    ok = True
    if args.families is not None:
        members = sweep_families(args.families, bound=None)
        worst = max(members, key=lambda member: member.ratio)
        result["family_max_ratio"] = worst.ratio
        result["family_max_at"] = f"{worst.family}@{worst.step}"
        ok = worst.ratio <= RATIO_BOUND
    return CommandResult(inputs, result, _verdict(ok))


def cmd_critical_exponent(
    args: argparse.Namespace, config: PalinwordConfig
) -> CommandResult:
    expect = Fraction(args.expect) if args.expect else None
    inputs = {
        "source": args.source,
        "max_length": args.max_length,
        "family_steps": args.family_steps,
        "expect": expect,
    }
    if args.check_only:
        return _checked(inputs)
    report = critical_exponent_ddp(
        resolve_source(args.source),
        max_length=args.max_length,
        family_steps=args.family_steps,
    )
    best = report.maximum
    result = {
        "exponent": report.exponent,
        "prefix_length": report.prefix_length,
        "records": len(report.records),
        "attained_by": best.word or f"family {best.family}@{best.step}",
        "provenance": best.provenance.value,
    }
    return CommandResult(
        inputs, result, _verdict(expect is None or report.exponent == expect)
    )


def cmd_reproduce(args: argparse.Namespace, config: PalinwordConfig) -> CommandResult:
    labels = expand_selection(args.claim)
    inputs: Dict[str, Any] = {"claims": labels}
    if args.check_only:
        return _checked(inputs)
    results = [run_claim(label, config) for label in labels]
    record: Dict[str, Any] = {}
    for r in results:
        record.update(r.record())
    report = render_claims_table([r.row() for r in results])
    return CommandResult(inputs, record, combined_exit_code(results), report)


COMMANDS = {
    "verify-morphism": cmd_verify_morphism,
    "backtrack": cmd_backtrack,
    "census": cmd_census,
    "max-exponent": cmd_max_exponent,
    "core": cmd_core,
    "rauzy": cmd_rauzy,
    "bispecial": cmd_bispecial,
    "critical-exponent": cmd_critical_exponent,
    "reproduce": cmd_reproduce,
}


def command_names() -> List[str]:
    return list(COMMANDS)
