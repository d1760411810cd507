"""
The ``palinword`` command.
"""

import argparse
import logging
import sys
import time
from pathlib import Path
from typing import List, Mapping, NoReturn, Optional

from .. import __version__
from ..avoidance.presets import preset_names
from ..config.config_classes import BudgetConfig, CheckpointConfig
from ..config.config_main import PalinwordConfig
from ..config.config_utils import configure_logging, get_palinword_config
from ..config.config_values import get_config_values
from ..generators.certificate import (
    Certificate,
    render_certificate,
    write_certificate,
)
from ..search.search_policy import SearchPolicy
from ..utils.errors import (
    LemmaInapplicableError,
    PalinwordError,
    RatioBoundError,
    UsageError,
)
from ..utils.types import ExitCode
from .claims import CENSUS_SOURCE_LENGTH, claim_labels
from .commands import COMMANDS, CommandResult

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(ExitCode.USAGE, f"{self.prog}: error: {message}\n")


def _common_flags() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument(
        "--check-only", action="store_true", help="Parse the inputs and stop."
    )
    common.add_argument(
        "--long", action="store_true", help="Run checks beyond desk-scale runtimes."
    )
    common.add_argument("--jobs", type=int, help="Worker processes.")
    common.add_argument(
        "--budget", type=int, help="Node budget (overrides PALINWORD_BUDGET)."
    )
    common.add_argument("--output", type=Path, help="Also write the certificate here.")
    common.add_argument("--debug", action="store_true", help="Debug logging.")
    common.add_argument(
        "--split-depth",
        type=int,
        default=0,
        help="Cut search trees at this depth for --jobs workers.",
    )
    common.add_argument(
        "--no-symmetry",
        action="store_true",
        help="Do not reduce searches by letter renaming.",
    )
    common.add_argument("--checkpoint", help="JSON file for search checkpoints.")
    return common


def _word_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--source", help="Infinite word, e.g. t, g(h), periodic-012.")
    group.add_argument("--word", help="Literal finite word over 0-9.")
    parser.add_argument(
        "--length", type=int, default=10_000, help="Prefix length of --source."
    )


def _constraint_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--preset", choices=preset_names(), help="Named constraints.")
    parser.add_argument("--constraints", help="Constraint file (key=value lines).")
    parser.add_argument("--threshold", help="Forbid repetitions, e.g. 9/4 or 7/4+.")
    parser.add_argument("--max-palindromes", help="Palindrome budget.")
    parser.add_argument("--forbid", help="Comma separated forbidden factors.")
    parser.add_argument("--square-free", help="yes or no.")
    parser.add_argument("--letter-patterns", help="Comma separated letter patterns.")
    parser.add_argument("--overpals", help="yes allows overpals, no forbids them.")
    parser.add_argument(
        "--allowed-palindromes", help="Palindromes must be factors of these words."
    )
    parser.add_argument("--palindrome-quota", help="words:count, e.g. 00,11,22:1.")
    parser.add_argument("--symmetry", help="yes or no.")


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = _Parser(
        prog="palinword",
        description="Checks on ternary words with few palindromes.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "verify-morphism", parents=[common], help="Freeness transfer and census."
    )
    p.add_argument("morphism", help="Morphism file or built-in name, e.g. mrs-4.")
    p.add_argument("--alpha", help="Source threshold, e.g. 7/4+.")
    p.add_argument("--beta", help="Target threshold, e.g. 2+.")
    p.add_argument("--palindromes", type=int, help="Palindrome bound of images.")
    p.add_argument("--census-length", type=int, default=CENSUS_SOURCE_LENGTH)
    p.add_argument("--max-length", type=int, help="Override the source length t.")

    p = sub.add_parser("backtrack", parents=[common], help="Exhaustive search.")
    _constraint_flags(p)
    p.add_argument("--target", type=int, required=True)
    p.add_argument(
        "--expect", choices=["exhausted", "reached"], default="exhausted"
    )
    p.add_argument("--resume", help="Continue from a checkpoint file.")

    p = sub.add_parser("census", parents=[common], help="Distinct palindromes.")
    _word_flags(p)
    p.add_argument("--expect", type=int, help="Expected number of palindromes.")
    p.add_argument("--list", action="store_true", help="List the palindromes.")

    p = sub.add_parser("max-exponent", parents=[common], help="Largest repetition.")
    _word_flags(p)
    p.add_argument("--threshold", help="Also check freeness, e.g. 41/22+.")

    p = sub.add_parser("core", parents=[common], help="Extendable factor core.")
    _constraint_flags(p)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--compare", help="Compare with the factors of this word.")

    p = sub.add_parser("rauzy", parents=[common], help="Rauzy graph of a core.")
    _constraint_flags(p)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--anchor", help="Compare only the component holding this.")
    p.add_argument("--compare", help="Infinite word whose graph should match.")
    p.add_argument(
        "--against",
        choices=preset_names(),
        help="Preset whose graph the recurrent part should be isomorphic to.",
    )

    p = sub.add_parser("bispecial", parents=[common], help="Bispecial factors.")
    p.add_argument("--source", default="g(h)")
    p.add_argument("--length", type=int, default=20_000)
    p.add_argument("--max-length", type=int, default=30)
    p.add_argument("--triplets", help="Morphism whose initial triplets to list.")
    p.add_argument("--families", type=int, help="Sweep families to this step.")

    p = sub.add_parser(
        "critical-exponent", parents=[common], help="Critical exponent audit."
    )
    p.add_argument("--source", default="g(h)")
    p.add_argument("--max-length", type=int, default=60)
    p.add_argument("--family-steps", type=int)
    p.add_argument("--expect", help="Expected exponent, e.g. 41/22.")

    p = sub.add_parser("reproduce", parents=[common], help="Reproduce claims.")
    p.add_argument("claim", choices=claim_labels() + ["table1", "all"])
    return parser


def build_config(
    args: argparse.Namespace, environ: Optional[Mapping[str, str]] = None
) -> PalinwordConfig:
    """Environment configuration with command-line flags on top."""
    config = get_palinword_config(environ)
    if args.budget is not None:
        if args.budget < 1:
            raise UsageError(f"--budget must be positive, got {args.budget}")
        config.budget = BudgetConfig(nodes=args.budget)
    if args.jobs is not None:
        if args.jobs < 1:
            raise UsageError(f"--jobs must be positive, got {args.jobs}")
        config.jobs = args.jobs
    if args.checkpoint:
        config.checkpoint = CheckpointConfig(path=args.checkpoint)
    config.long_mode = args.long
    config.debug_logging = config.debug_logging or args.debug
    config.search_policy = SearchPolicy(
        symmetry=not args.no_symmetry, split_depth=args.split_depth
    )
    return config


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = build_config(args)
    except (UsageError, ValueError) as e:
        parser.error(str(e))
    configure_logging(config.debug_logging)
    logger.debug(f"Running {args.command} with {config!r}")

    start = time.perf_counter()
    try:
        outcome: CommandResult = COMMANDS[args.command](args, config)
    except LemmaInapplicableError as e:
        logger.error(f"Transfer lemma does not apply: {e}")
        return int(ExitCode.INAPPLICABLE)
    except RatioBoundError as e:
        logger.error(str(e))
        return int(ExitCode.REFUTED)
    except UsageError as e:
        logger.error(str(e))
        return int(ExitCode.USAGE)
    except PalinwordError as e:
        logger.error(str(e))
        return int(ExitCode.INCONCLUSIVE)
    except (ValueError, FileNotFoundError) as e:
        logger.error(str(e))
        return int(ExitCode.USAGE)
    elapsed = time.perf_counter() - start

    inputs = dict(outcome.inputs)
    inputs["config"] = get_config_values(config)
    certificate = Certificate(
        command=args.command,
        inputs=inputs,
        result=outcome.result,
        elapsed=elapsed,
        tool_version=__version__,
    )
    text = render_certificate(certificate)
    if outcome.report:
        sys.stdout.write(outcome.report + "\n")
    sys.stdout.write(text)
    write_certificate(text, args.output)
    return int(outcome.exit_code)


if __name__ == "__main__":
    sys.exit(main())
