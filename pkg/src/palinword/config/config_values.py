"""
Configuration value extraction utilities.
"""

from typing import Any, Dict

from .config_main import PalinwordConfig


def get_config_values(config: PalinwordConfig) -> Dict[str, Any]:
    """Canonical record of the settings that can change a result.

    Jobs and checkpoint paths are left out: they never change outcomes.
    """
    return {
        "budget": config.budget.nodes,
        "long_mode": config.long_mode,
        "symmetry": config.search_policy.symmetry,
        "split_depth": config.search_policy.split_depth,
    }
