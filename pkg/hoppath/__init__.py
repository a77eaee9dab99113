"""hoppath - enumerate hop-constrained s-t simple paths.

Submodules:
-----------
- graph: CSR graphs, the binary CSR format and synthetic generators.
- preprocess: Pre-BFS reduction, distance and barrier maps.
- enumerators: the brute-force oracle, BC-DFS and JOIN.
- pefp: batched expansion and verification over a tiered memory model.
- bench: query generation, benchmark suites and reports.
- helpers: logging setup, timers, the ordered set and the graph cache.
- mode: one coroutine per subcommand.
- parsers: edge-list and query-file parsing.
"""
from . import parsers
from .main import main

__all__ = ["main", "parsers"]
