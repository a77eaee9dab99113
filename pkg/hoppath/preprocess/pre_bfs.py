"""Pre-BFS: bidirectional (k-1)-hop BFS that shrinks the search space.

Only vertices u with sd(s, u) + sd(u, t) <= k can lie on an s-t k-path, so
enumeration on the subgraph induced by those vertices (plus s and t) yields
exactly the paths of the original graph. The distances to t double as the
barrier map consulted by every pruning enumerator.
"""
import logging
from collections import deque
from dataclasses import dataclass

import numpy as np

from hoppath.graph.csr import Graph, GraphError, VertexMapping, induced_subgraph

UNREACHED = -1


class QueryError(ValueError):
    """Error raised when a query is invalid for a graph."""


@dataclass(frozen=True)
class Query:
    """One enumeration task: all simple s-t paths with at most k hops."""

    s: int
    t: int
    k: int

    def __post_init__(self) -> None:
        """Check the graph-independent invariants."""
        if self.s < 0 or self.t < 0:
            msg = f"negative vertex id in query {self}"
            raise QueryError(msg)
        if self.s == self.t:
            msg = f"source and target must differ in query {self}"
            raise QueryError(msg)
        if self.k < 1:
            msg = f"hop constraint must be at least 1 in query {self}"
            raise QueryError(msg)

    def check(self, vertex_count: int) -> None:
        """Check that both endpoints exist in a graph with `vertex_count` vertices.

        Raises
        ------
        QueryError: If s or t is out of range.
        """
        if self.s >= vertex_count or self.t >= vertex_count:
            msg = f"query {self} is outside a graph of {vertex_count} vertices"
            raise QueryError(msg)

    def __str__(self) -> str:
        """Render as `s->t k=K`."""
        return f"{self.s}->{self.t} k={self.k}"


@dataclass(frozen=True)
class DistanceMap:
    """Hop distances from `origin`, exact up to `radius`, UNREACHED beyond."""

    dist: list[int]
    origin: int
    radius: int

    def __getitem__(self, vertex: int) -> int:
        """Distance of `vertex`, or UNREACHED."""
        return self.dist[vertex]

    def reached_vertices(self) -> list[int]:
        """All vertices within the radius, ascending."""
        return [v for v, d in enumerate(self.dist) if d != UNREACHED]


@dataclass(frozen=True)
class BarrierMap:
    """Per-vertex lower bound on the hop distance to the target.

    Vertices farther than k-1 hops from the target (or unreachable) carry k+1,
    which fails every barrier check without special casing.
    """

    bar: list[int]
    k: int

    @classmethod
    def from_distances(cls, to_target: DistanceMap, k: int) -> "BarrierMap":
        """Build from distances to the target (BFS on the reverse graph)."""
        bar = [d if d != UNREACHED and d <= k - 1 else k + 1 for d in to_target.dist]
        return cls(bar, k)

    @classmethod
    def zeros(cls, vertex_count: int, k: int) -> "BarrierMap":
        """A barrier that never prunes."""
        return cls([0] * vertex_count, k)

    def __getitem__(self, vertex: int) -> int:
        """Barrier of `vertex`."""
        return self.bar[vertex]

    def __len__(self) -> int:
        """Number of vertices covered."""
        return len(self.bar)


@dataclass(frozen=True)
class PreprocessResult:
    """Everything an enumeration engine needs for one query.

    Attributes
    ----------
    query (Query): The query, in original ids.
    subgraph (Graph): The induced subgraph the engine searches.
    mapping (VertexMapping): Subgraph id <-> original id.
    barrier (BarrierMap): Barrier over subgraph ids.
    s_new (int): Source in subgraph ids.
    t_new (int): Target in subgraph ids.
    sd_s (DistanceMap | None): Forward distances, original ids.
    sd_t (DistanceMap | None): Distances to the target, original ids.
    """

    query: Query
    subgraph: Graph
    mapping: VertexMapping
    barrier: BarrierMap
    s_new: int
    t_new: int
    sd_s: DistanceMap | None = None
    sd_t: DistanceMap | None = None


def bounded_bfs(graph: Graph, origin: int, radius: int) -> DistanceMap:
    """Breadth-first hop distances from `origin`, up to `radius` hops.

    Raises
    ------
    GraphError: If `origin` is not a vertex of `graph`.
    ValueError: If `radius` is negative.
    """
    if not 0 <= origin < graph.vertex_count:
        msg = f"origin {origin} outside [0, {graph.vertex_count})"
        raise GraphError(msg)
    if radius < 0:
        msg = f"negative BFS radius {radius}"
        raise ValueError(msg)
    adjacency = graph.adjacency
    dist = [UNREACHED] * graph.vertex_count
    dist[origin] = 0
    frontier = deque([origin])
    while frontier:
        vertex = frontier.popleft()
        depth = dist[vertex]
        if depth == radius:
            continue
        for successor in adjacency[vertex]:
            if dist[successor] == UNREACHED:
                dist[successor] = depth + 1
                frontier.append(successor)
    return DistanceMap(dist, origin, radius)


def barrier_to_target(
    graph: Graph,
    target: int,
    k: int,
    radius: int | None = None,
) -> BarrierMap:
    """Barrier map over `graph` from a reverse BFS rooted at `target`."""
    to_target = bounded_bfs(graph.reversed, target, k - 1 if radius is None else radius)
    return BarrierMap.from_distances(to_target, k)


def pre_bfs(graph: Graph, query: Query) -> PreprocessResult:
    """Reduce `graph` to the vertices that can lie on an s-t k-path.

    s and t are always kept, even when the (k-1)-hop searches miss them.

    Raises
    ------
    QueryError: If the query does not fit the graph.
    """
    query.check(graph.vertex_count)
    s, t, k = query.s, query.t, query.k
    sd_s = bounded_bfs(graph, s, k - 1)
    sd_t = bounded_bfs(graph.reversed, t, k - 1)
    forward = np.asarray(sd_s.dist)
    backward = np.asarray(sd_t.dist)
    valid = (forward != UNREACHED) & (backward != UNREACHED) & (forward + backward <= k)
    valid[s] = True
    valid[t] = True
    subgraph, mapping = induced_subgraph(graph, np.flatnonzero(valid))
    barrier = BarrierMap(
        [
            sd_t.dist[old] if sd_t.dist[old] != UNREACHED else k + 1
            for old in mapping.new_to_old.tolist()
        ],
        k,
    )
    logging.debug(
        f"Pre-BFS {query}: kept {subgraph.vertex_count} of {graph.vertex_count} "
        f"vertices and {subgraph.edge_count} of {graph.edge_count} edges",
    )
    return PreprocessResult(
        query=query,
        subgraph=subgraph,
        mapping=mapping,
        barrier=barrier,
        s_new=mapping.to_new(s),
        t_new=mapping.to_new(t),
        sd_s=sd_s,
        sd_t=sd_t,
    )


def identity_preprocess(graph: Graph, query: Query) -> PreprocessResult:
    """Skip the subgraph reduction and keep only a k-hop barrier."""
    query.check(graph.vertex_count)
    return PreprocessResult(
        query=query,
        subgraph=graph,
        mapping=VertexMapping.identity(graph.vertex_count),
        barrier=barrier_to_target(graph, query.t, query.k, radius=query.k),
        s_new=query.s,
        t_new=query.t,
    )


def validate_theorem1(graph: Graph, query: Query) -> bool:
    """Check that the reduced subgraph has exactly the original path set.

    Intended for small graphs only; both sides are enumerated by brute force.
    """
    from hoppath.enumerators.oracle import oracle_enumerate

    pre = pre_bfs(graph, query)
    original = oracle_enumerate(graph, query)
    reduced = oracle_enumerate(
        pre.subgraph,
        Query(pre.s_new, pre.t_new, query.k),
    )
    mapped = {pre.mapping.path_to_old(path) for path in reduced}
    return set(original) == mapped


def dump_preprocess(result: PreprocessResult) -> str:
    """Render the vertex mapping and barrier values as a diagnostic table."""
    query = result.query
    lines = [
        f"# pre-bfs s={query.s} t={query.t} k={query.k}",
        f"# kept {result.subgraph.vertex_count} vertices, "
        f"{result.subgraph.edge_count} edges; s_new={result.s_new} "
        f"t_new={result.t_new}",
        "new old bar sd_s sd_t",
    ]
    for new in range(result.subgraph.vertex_count):
        old = result.mapping.to_old(new)
        sd_s = result.sd_s[old] if result.sd_s is not None else UNREACHED
        sd_t = result.sd_t[old] if result.sd_t is not None else UNREACHED
        lines.append(f"{new} {old} {result.barrier[new]} {sd_s} {sd_t}")
    return "\n".join(lines) + "\n"
