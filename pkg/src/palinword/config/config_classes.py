"""
Configuration classes for budgets and checkpoints.
"""

from typing import Optional

DEFAULT_NODE_BUDGET = 10**9


class BudgetConfig:
    """Search budget."""

    def __init__(
        self,
        nodes: Optional[int] = DEFAULT_NODE_BUDGET,
        seconds: Optional[float] = None,
    ):
        """
        Args:
            nodes: Maximum number of search nodes; None for unlimited
            seconds: Wall-clock hint recorded with certificates; not enforced
        """
        self.nodes = nodes
        self.seconds = seconds

    def __repr__(self) -> str:
        return f"BudgetConfig(nodes={self.nodes}, seconds={self.seconds})"


class CheckpointConfig:
    """Where and how often long searches save their frontier."""

    def __init__(self, path: Optional[str] = None, every: int = 1_000_000):
        """
        Args:
            path: JSON checkpoint file; None disables checkpoints
            every: Nodes between two checkpoint writes
        """
        self.path = path
        self.every = every

    @property
    def enabled(self) -> bool:
        return self.path is not None

    def __repr__(self) -> str:
        return f"CheckpointConfig(path={self.path!r}, every={self.every})"
