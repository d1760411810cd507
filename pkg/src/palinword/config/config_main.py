"""
Main configuration class.
"""

from typing import Optional

from ..search.search_policy import SearchPolicy
from .config_classes import BudgetConfig, CheckpointConfig


class PalinwordConfig:
    """Run configuration shared by the library and the command line."""

    def __init__(
        self,
        budget: Optional[BudgetConfig] = None,
        jobs: int = 1,
        long_mode: bool = False,
        checkpoint: Optional[CheckpointConfig] = None,
        debug_logging: bool = False,
        search_policy: Optional[SearchPolicy] = None,
    ):
        """
        Args:
            budget: Node budget of exhaustive searches
            jobs: Worker processes for parallel-capable operations
            long_mode: Run the batteries that exceed desk-scale runtimes
            checkpoint: Checkpoint settings of long searches
            debug_logging: Log per-step detail
            search_policy: Symmetry reduction and tree splitting
        """
        self.budget = budget or BudgetConfig()
        self.jobs = jobs
        self.long_mode = long_mode
        self.checkpoint = checkpoint or CheckpointConfig()
        self.debug_logging = debug_logging
        self.search_policy = search_policy or SearchPolicy()

    def policy(self) -> SearchPolicy:
        """Search policy with this configuration's jobs and checkpoint."""
        return SearchPolicy(
            symmetry=self.search_policy.symmetry,
            split_depth=self.search_policy.split_depth,
            jobs=self.jobs,
            checkpoint_path=self.checkpoint.path,
            checkpoint_every=self.checkpoint.every,
        )

    def __repr__(self) -> str:
        return (
            f"PalinwordConfig(budget={self.budget}, jobs={self.jobs}, "
            f"long_mode={self.long_mode}, checkpoint={self.checkpoint}, "
            f"debug_logging={self.debug_logging}, "
            f"search_policy={self.search_policy})"
        )
