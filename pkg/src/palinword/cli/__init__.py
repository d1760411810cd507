"""Command-line front end."""

from .claims import (
    CLAIMS,
    Claim,
    ClaimResult,
    claim_labels,
    combined_exit_code,
    expand_selection,
    fractional_power,
    get_claim,
    run_claim,
)
from .commands import COMMANDS, CommandResult, command_names
from .main import build_config, build_parser, main

__all__ = [
    "CLAIMS",
    "Claim",
    "ClaimResult",
    "claim_labels",
    "combined_exit_code",
    "expand_selection",
    "fractional_power",
    "get_claim",
    "run_claim",
    "COMMANDS",
    "CommandResult",
    "command_names",
    "build_config",
    "build_parser",
    "main",
]
