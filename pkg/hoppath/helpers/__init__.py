"""__init__.py for helpers."""

from . import helpers, ordered_set

__all__ = ["helpers", "ordered_set"]
