"""
Configuration parsing functions.
"""

from typing import Any, Dict

from ..search.search_policy import SearchPolicy
from .config_classes import DEFAULT_NODE_BUDGET, BudgetConfig, CheckpointConfig
from .config_main import PalinwordConfig

TRUE_WORDS = {"1", "yes", "true", "on"}
FALSE_WORDS = {"0", "no", "false", "off"}


def parse_flag(value: Any, default: bool) -> bool:
    """Booleans and yes/no style strings; anything else gives ``default``."""
    if isinstance(value, bool):
        return value
    if isinstance(value, str):
        if value.strip().lower() in TRUE_WORDS:
            return True
        if value.strip().lower() in FALSE_WORDS:
            return False
    return default


def parse_count(value: Any, default: int, minimum: int = 0) -> int:
    """Integers (or their text, ``1e9`` allowed); malformed values give
    ``default``."""
    if isinstance(value, bool):
        return default
    if isinstance(value, str):
        try:
            value = int(float(value)) if "e" in value.lower() else int(value)
        except ValueError:
            return default
    if isinstance(value, int) and value >= minimum:
        return value
    return default


def parse_config(config_dict: Dict[str, Any]) -> PalinwordConfig:
    """Parse configuration dictionary into PalinwordConfig object."""

    # anything but a mapping gives the defaults
    if not isinstance(config_dict, dict):
        return PalinwordConfig()

    # Parse budget
    budget_config = None
    if "budget" in config_dict:
        budget_obj = config_dict["budget"]
        if isinstance(budget_obj, BudgetConfig):
            budget_config = budget_obj
        elif isinstance(budget_obj, dict):
            nodes = budget_obj.get("nodes", DEFAULT_NODE_BUDGET)
            if nodes is not None:
                nodes = parse_count(nodes, DEFAULT_NODE_BUDGET)
            budget_config = BudgetConfig(
                nodes=nodes,
                seconds=budget_obj.get("seconds"),
            )
        else:
            # Plain node count
            budget_config = BudgetConfig(
                nodes=parse_count(budget_obj, DEFAULT_NODE_BUDGET)
            )

    # Parse checkpoint
    checkpoint_config = None
    if "checkpoint" in config_dict:
        checkpoint_obj = config_dict["checkpoint"]
        if isinstance(checkpoint_obj, CheckpointConfig):
            checkpoint_config = checkpoint_obj
        elif isinstance(checkpoint_obj, dict):
            checkpoint_config = CheckpointConfig(
                path=checkpoint_obj.get("path"),
                every=parse_count(checkpoint_obj.get("every"), 1_000_000, minimum=1),
            )
        elif isinstance(checkpoint_obj, str):
            checkpoint_config = CheckpointConfig(path=checkpoint_obj)

    # Parse search policy
    search_policy = None
    if "search_policy" in config_dict:
        policy_obj = config_dict["search_policy"]
        if isinstance(policy_obj, SearchPolicy):
            search_policy = policy_obj
        elif isinstance(policy_obj, dict):
            search_policy = SearchPolicy(
                symmetry=parse_flag(policy_obj.get("symmetry"), True),
                split_depth=parse_count(policy_obj.get("split_depth"), 0),
            )

    return PalinwordConfig(
        budget=budget_config or BudgetConfig(),
        jobs=parse_count(config_dict.get("jobs"), 1, minimum=1),
        long_mode=parse_flag(config_dict.get("long_mode"), False),
        checkpoint=checkpoint_config or CheckpointConfig(),
        debug_logging=parse_flag(config_dict.get("debug_logging"), False),
        search_policy=search_policy or SearchPolicy(),
    )
