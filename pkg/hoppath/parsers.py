"""Parsers for the plain-text inputs hoppath reads.

Submodules:
-----------
- edge lists: SNAP/Konect style `from to` pairs, `#`/`%` comment lines.
- query files: one `s t k` triple per line, `#` comment lines.
"""
import logging
import re
from collections.abc import Iterable, Iterator
from io import StringIO
from typing import TextIO

from hoppath.graph.csr import EdgeList, Graph
from hoppath.preprocess.pre_bfs import Query, QueryError

COMMENT_PREFIXES = ("#", "%")
_INTEGER = re.compile(r"^\d+$")


class ParseError(Exception):
    """Error raised when an input line cannot be parsed."""

    def __init__(self, message: str, line_number: int | None = None) -> None:
        """Initialize the error."""
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


def _lines(text: str | TextIO | Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield (1-based line number, stripped line) for non-comment lines."""
    stream = StringIO(text) if isinstance(text, str) else text
    for line_number, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        yield line_number, line


def _integers(line: str, arity: int, line_number: int) -> list[int]:
    """Split a line into exactly `arity` non-negative integers."""
    tokens = line.split()
    if len(tokens) != arity:
        msg = f"expected {arity} integer tokens, got {len(tokens)}: {line!r}"
        raise ParseError(msg, line_number)
    for token in tokens:
        if not _INTEGER.match(token):
            msg = f"not a non-negative integer: {token!r}"
            raise ParseError(msg, line_number)
    return [int(token) for token in tokens]


def parse_edge_list(
    text: str | TextIO | Iterable[str],
    declared_vertex_count: int | None = None,
) -> EdgeList:
    """Parse an edge list.

    Args:
    ----
    text (str | TextIO | Iterable[str]): The edge list contents.
    declared_vertex_count (int | None): Optional lower bound on the vertex count.

    Returns:
    -------
    EdgeList: All edges in file order, vertex ids taken verbatim.

    Raises:
    ------
    ParseError: A line has the wrong arity or a non-integer token.
    """
    edges: list[tuple[int, int]] = []
    for line_number, line in _lines(text):
        source, target = _integers(line, 2, line_number)
        edges.append((source, target))
    logging.debug(f"Parsed {len(edges)} edges")
    return EdgeList(edges, declared_vertex_count)


def format_edge_list(graph: Graph) -> str:
    """Render a graph as an edge list, one `from to` pair per line."""
    header = f"# vertices {graph.vertex_count} edges {graph.edge_count}\n"
    return header + "".join(f"{source} {target}\n" for source, target in graph.edges())


def parse_queries(text: str | TextIO | Iterable[str]) -> list[Query]:
    """Parse a query file of `s t k` lines.

    Raises
    ------
    ParseError: A line has the wrong arity or a non-integer token.
    """
    queries = []
    for line_number, line in _lines(text):
        source, target, hops = _integers(line, 3, line_number)
        try:
            queries.append(Query(source, target, hops))
        except QueryError as ex:
            raise ParseError(str(ex), line_number) from ex
    return queries


def format_queries(queries: Iterable[Query], comment: str | None = None) -> str:
    """Render queries as `s t k` lines, optionally under a comment header."""
    header = f"# {comment}\n" if comment else ""
    return header + "".join(f"{q.s} {q.t} {q.k}\n" for q in queries)
