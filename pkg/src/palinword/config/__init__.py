"""Configuration management for palinword."""

from ..search.search_policy import SearchPolicy
from .config_classes import DEFAULT_NODE_BUDGET, BudgetConfig, CheckpointConfig
from .config_main import PalinwordConfig
from .config_parsing import parse_config
from .config_utils import configure_logging, get_palinword_config
from .config_values import get_config_values
from .constraints_file import apply_overrides, load_constraints, parse_constraints

__all__ = [
    # Configuration classes
    "BudgetConfig",
    "CheckpointConfig",
    "SearchPolicy",
    "PalinwordConfig",
    "DEFAULT_NODE_BUDGET",
    # Utility functions
    "parse_config",
    "get_config_values",
    "get_palinword_config",
    "configure_logging",
    "parse_constraints",
    "load_constraints",
    "apply_overrides",
]
