"""Search policy and subtree partitioning."""

from .partition import map_ordered
from .search_policy import SearchPolicy

__all__ = ["SearchPolicy", "map_ordered"]
