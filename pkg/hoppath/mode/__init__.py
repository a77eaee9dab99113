"""Modes of operation for hoppath, one per subcommand."""

from .check import check
from .convert import convert
from .gen import gen
from .pre import pre
from .run import run

__all__ = ["check", "convert", "gen", "pre", "run"]
