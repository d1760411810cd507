"""
Search policy for the avoidance tree walker.
"""

from typing import Optional


class SearchPolicy:
    """How the backtracking tree is walked."""

    def __init__(
        self,
        symmetry: bool = True,
        split_depth: int = 0,
        jobs: int = 1,
        checkpoint_path: Optional[str] = None,
        checkpoint_every: int = 1_000_000,
    ):
        """
        Configure symmetry reduction, parallel splitting and checkpoints.

        Args:
            symmetry: Only visit words whose letters first occur in increasing
                order (0, then 1, then 2, ...); applied only to constraint
                sets invariant under letter renaming
            split_depth: Depth at which the tree is cut into independent
                subtrees; 0 disables splitting
            jobs: Number of worker processes for the subtrees
            checkpoint_path: JSON file receiving the walker state
            checkpoint_every: Nodes between two checkpoint writes

        Examples:
            SearchPolicy() walks the whole tree in one process.

            SearchPolicy(split_depth=6, jobs=8) cuts the tree at depth 6 and
            walks the subtrees on 8 processes; outcome, longest length and
            witness do not depend on the number of processes.
        """
        if split_depth < 0:
            raise ValueError(f"split_depth must be non-negative, got {split_depth}")
        if jobs < 1:
            raise ValueError(f"jobs must be positive, got {jobs}")
        if checkpoint_every < 1:
            raise ValueError(
                f"checkpoint_every must be positive, got {checkpoint_every}"
            )
        self.symmetry = symmetry
        self.split_depth = split_depth
        self.jobs = jobs
        self.checkpoint_path = checkpoint_path
        self.checkpoint_every = checkpoint_every

    @property
    def parallel(self) -> bool:
        return self.split_depth > 0 and self.jobs > 1

    def __repr__(self) -> str:
        return (
            f"SearchPolicy(symmetry={self.symmetry}, "
            f"split_depth={self.split_depth}, jobs={self.jobs}, "
            f"checkpoint_path={self.checkpoint_path!r})"
        )
