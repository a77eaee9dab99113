"""Path enumerators that run without the tier model."""

from . import base, bcdfs, join, oracle

__all__ = ["base", "bcdfs", "join", "oracle"]
