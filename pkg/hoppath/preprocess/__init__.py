"""Per-query preprocessing."""

from . import pre_bfs

__all__ = ["pre_bfs"]
