"""
Environment configuration and logging setup.
"""

import logging
import os
from typing import Mapping, Optional

from .config_classes import DEFAULT_NODE_BUDGET, BudgetConfig, CheckpointConfig
from .config_main import PalinwordConfig
from .config_parsing import parse_count, parse_flag

logger = logging.getLogger(__name__)

PACKAGE_LOGGER = "palinword"


def get_palinword_config(
    environ: Optional[Mapping[str, str]] = None,
) -> PalinwordConfig:
    """Configuration from ``PALINWORD_*`` environment variables."""
    env = os.environ if environ is None else environ
    budget = parse_count(env.get("PALINWORD_BUDGET"), DEFAULT_NODE_BUDGET, minimum=1)
    jobs = parse_count(env.get("PALINWORD_JOBS"), 1, minimum=1)
    debug = parse_flag(env.get("PALINWORD_DEBUG"), False)
    checkpoint = env.get("PALINWORD_CHECKPOINT") or None
    return PalinwordConfig(
        budget=BudgetConfig(nodes=budget),
        jobs=jobs,
        checkpoint=CheckpointConfig(path=checkpoint),
        debug_logging=debug,
    )


def configure_logging(debug: bool = False) -> logging.Logger:
    """Send package logs to stderr at DEBUG or INFO level."""
    package_logger = logging.getLogger(PACKAGE_LOGGER)
    package_logger.setLevel(logging.DEBUG if debug else logging.INFO)
    if not any(getattr(h, "_palinword", False) for h in package_logger.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        handler._palinword = True  # type: ignore[attr-defined]
        package_logger.addHandler(handler)
    if debug:
        logger.info("palinword debug logging enabled")
    return package_logger
