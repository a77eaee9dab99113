"""Random query generation for benchmark suites."""
import logging
import random
from dataclasses import dataclass, field
from pathlib import Path

from hoppath.graph.csr import Graph
from hoppath.parsers import format_queries, parse_queries
from hoppath.preprocess.pre_bfs import Query, bounded_bfs

RETRY_FACTOR = 100


class QueryGenerationError(Exception):
    """Error raised when a graph yields too few valid query pairs."""

    def __init__(self, message: str, attempts: int) -> None:
        """Initialize the error."""
        super().__init__(message)
        self.attempts = attempts


@dataclass(frozen=True)
class QuerySet:
    """Queries plus the parameters they were generated with.

    Every query's target is reachable from its source within k hops.
    """

    queries: list[Query] = field(default_factory=list)
    seed: int | None = None
    k: int | None = None

    def __len__(self) -> int:
        """Number of queries."""
        return len(self.queries)

    def to_text(self) -> str:
        """Render as a query file."""
        return format_queries(self.queries, f"seed={self.seed} k={self.k}")

    @classmethod
    def from_file(cls, filename: str | Path) -> "QuerySet":
        """Read a query file; seed and k are unknown for hand-written files.

        Raises
        ------
        ParseError: If a line is malformed.
        """
        with Path(filename).open(encoding="utf-8") as file:
            queries = parse_queries(file)
        hops = {query.k for query in queries}
        return cls(queries, None, hops.pop() if len(hops) == 1 else None)


def gen_queries(graph: Graph, k: int, count: int, seed: int) -> QuerySet:
    """Draw `count` (s, t) pairs with t reachable from s within k hops.

    s is drawn uniformly among vertices with at least one successor and t
    uniformly among the other vertices its k-hop BFS reaches. A draw with no
    candidate target is retried, up to RETRY_FACTOR * count draws in total.

    Raises
    ------
    QueryGenerationError: If the retry budget runs out.
    ValueError: If k or count is not positive.
    """
    if k < 1:
        msg = f"hop constraint must be at least 1, got {k}"
        raise ValueError(msg)
    if count < 1:
        msg = f"query count must be at least 1, got {count}"
        raise ValueError(msg)
    rng = random.Random(seed)
    sources = [v for v, degree in enumerate(graph.out_degrees) if degree > 0]
    budget = RETRY_FACTOR * count
    queries: list[Query] = []
    attempts = 0
    while len(queries) < count:
        if attempts >= budget or not sources:
            msg = (
                f"only {len(queries)} of {count} queries after {attempts} draws "
                f"on a graph of {graph.vertex_count} vertices"
            )
            raise QueryGenerationError(msg, attempts)
        attempts += 1
        source = rng.choice(sources)
        reached = [
            v for v in bounded_bfs(graph, source, k).reached_vertices() if v != source
        ]
        if not reached:
            continue
        queries.append(Query(source, rng.choice(reached), k))
    logging.info(f"Generated {len(queries)} queries with k={k} in {attempts} draws")
    return QuerySet(queries, seed, k)
