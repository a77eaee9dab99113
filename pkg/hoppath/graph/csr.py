"""Directed graphs in compressed sparse row (CSR) form.

Successor lists are sorted ascending so every search over a `Graph` walks
vertices in a deterministic order.
"""
import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

import numpy as np

INDEX_DTYPE = np.int64


class GraphError(ValueError):
    """Error raised when CSR arrays or vertex ids are malformed."""


@dataclass
class EdgeList:
    """Edges as read from a file, before CSR construction.

    Attributes
    ----------
    edges (list[tuple[int, int]]): (from, to) pairs in file order.
    declared_vertex_count (int | None): Vertex count to use if larger than max id + 1.
    keep_self_loops (bool): Keep (v, v) edges instead of dropping them.
    deduplicate (bool): Collapse parallel edges into one.
    """

    edges: list[tuple[int, int]]
    declared_vertex_count: int | None = None
    keep_self_loops: bool = False
    deduplicate: bool = True

    def as_array(self) -> np.ndarray:
        """Return the edges as an (m, 2) integer array."""
        if not self.edges:
            return np.empty((0, 2), dtype=INDEX_DTYPE)
        return np.asarray(self.edges, dtype=INDEX_DTYPE).reshape(-1, 2)


@dataclass(frozen=True)
class GraphStats:
    """Summary numbers logged when a graph is loaded."""

    vertex_count: int
    edge_count: int
    avg_out_degree: float
    max_out_degree: int

    def __str__(self) -> str:
        """Render as a single log-friendly line."""
        return (
            f"vertices={self.vertex_count} edges={self.edge_count} "
            f"avg_out_degree={self.avg_out_degree:.2f} "
            f"max_out_degree={self.max_out_degree}"
        )


@dataclass(frozen=True, eq=False)
class Graph:
    """An immutable directed graph in CSR layout.

    The successors of `v` are `targets[offsets[v]:offsets[v + 1]]`.
    """

    vertex_count: int
    offsets: np.ndarray
    targets: np.ndarray

    def __post_init__(self) -> None:
        """Normalise the arrays and check CSR well-formedness."""
        offsets = np.array(self.offsets, dtype=INDEX_DTYPE)
        targets = np.array(self.targets, dtype=INDEX_DTYPE)
        offsets.setflags(write=False)
        targets.setflags(write=False)
        object.__setattr__(self, "offsets", offsets)
        object.__setattr__(self, "targets", targets)
        self.validate()

    def validate(self) -> None:
        """Check the CSR invariants.

        Raises
        ------
        GraphError: If any invariant is violated.
        """
        n = self.vertex_count
        if n < 0:
            msg = f"negative vertex count {n}"
            raise GraphError(msg)
        if self.offsets.ndim != 1 or len(self.offsets) != n + 1:
            msg = f"offsets must have length {n + 1}, got {self.offsets.shape}"
            raise GraphError(msg)
        if self.offsets[0] != 0:
            msg = "offsets[0] must be 0"
            raise GraphError(msg)
        if np.any(np.diff(self.offsets) < 0):
            msg = "offsets must be non-decreasing"
            raise GraphError(msg)
        if self.offsets[-1] != len(self.targets):
            msg = (
                f"offsets[-1]={self.offsets[-1]} does not match "
                f"{len(self.targets)} targets"
            )
            raise GraphError(msg)
        if len(self.targets) and (self.targets.min() < 0 or self.targets.max() >= n):
            msg = f"target vertex id outside [0, {n})"
            raise GraphError(msg)

    @property
    def edge_count(self) -> int:
        """Number of stored edges."""
        return len(self.targets)

    @cached_property
    def adjacency(self) -> list[list[int]]:
        """Successor lists as plain Python lists, for tight search loops."""
        targets = self.targets.tolist()
        offsets = self.offsets.tolist()
        return [targets[offsets[v] : offsets[v + 1]] for v in range(self.vertex_count)]

    @cached_property
    def out_degrees(self) -> list[int]:
        """Out-degree of every vertex."""
        return np.diff(self.offsets).tolist()

    @cached_property
    def reversed(self) -> "Graph":
        """The reverse graph, built once and kept."""
        return reverse(self)

    def successors(self, vertex: int) -> list[int]:
        """Successors of `vertex` in ascending order."""
        return self.adjacency[vertex]

    def out_degree(self, vertex: int) -> int:
        """Number of successors of `vertex`."""
        return self.out_degrees[vertex]

    def sources(self) -> np.ndarray:
        """Source vertex of every edge, aligned with `targets`."""
        return np.repeat(
            np.arange(self.vertex_count, dtype=INDEX_DTYPE),
            np.diff(self.offsets),
        )

    def edges(self) -> Iterator[tuple[int, int]]:
        """Iterate over (from, to) pairs in CSR order."""
        return zip(self.sources().tolist(), self.targets.tolist(), strict=True)

    def stats(self) -> GraphStats:
        """Summarise the graph size and degree distribution."""
        degrees = self.out_degrees
        return GraphStats(
            vertex_count=self.vertex_count,
            edge_count=self.edge_count,
            avg_out_degree=self.edge_count / self.vertex_count
            if self.vertex_count
            else 0.0,
            max_out_degree=max(degrees, default=0),
        )

    def __eq__(self, other: object) -> bool:
        """Structural equality of the CSR arrays."""
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.vertex_count == other.vertex_count
            and np.array_equal(self.offsets, other.offsets)
            and np.array_equal(self.targets, other.targets)
        )

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False)
class VertexMapping:
    """Bijection between a kept vertex subset and the dense id range [0, len)."""

    new_to_old: np.ndarray

    @classmethod
    def identity(cls, vertex_count: int) -> "VertexMapping":
        """The mapping that keeps every id."""
        return cls(np.arange(vertex_count, dtype=INDEX_DTYPE))

    @cached_property
    def _old_ids(self) -> list[int]:
        return self.new_to_old.tolist()

    @cached_property
    def _new_ids(self) -> dict[int, int]:
        return {old: new for new, old in enumerate(self._old_ids)}

    def to_old(self, new: int) -> int:
        """Original id of a renumbered vertex."""
        return self._old_ids[new]

    def to_new(self, old: int) -> int:
        """Renumbered id of an original vertex.

        Raises
        ------
        KeyError: If `old` was not kept.
        """
        return self._new_ids[old]

    def path_to_old(self, path: Iterable[int]) -> tuple[int, ...]:
        """Translate a path over new ids back to original ids."""
        old_ids = self._old_ids
        return tuple(old_ids[v] for v in path)

    def __contains__(self, old: object) -> bool:
        """Whether an original id was kept."""
        return old in self._new_ids

    def __len__(self) -> int:
        """Number of kept vertices."""
        return len(self.new_to_old)


def _from_pairs(
    sources: np.ndarray,
    targets: np.ndarray,
    vertex_count: int,
    *,
    deduplicate: bool,
) -> Graph:
    """Build a CSR graph with ascending successor lists from edge arrays."""
    sources = np.asarray(sources, dtype=INDEX_DTYPE)
    targets = np.asarray(targets, dtype=INDEX_DTYPE)
    if len(sources):
        if deduplicate:
            pairs = np.unique(np.stack([sources, targets], axis=1), axis=0)
            sources, targets = pairs[:, 0], pairs[:, 1]
        else:
            order = np.lexsort((targets, sources))
            sources, targets = sources[order], targets[order]
    counts = np.bincount(sources, minlength=vertex_count)
    offsets = np.zeros(vertex_count + 1, dtype=INDEX_DTYPE)
    np.cumsum(counts, out=offsets[1:])
    return Graph(vertex_count, offsets, targets)


def build_graph(edges: EdgeList) -> Graph:
    """Build a CSR graph from an edge list.

    The vertex count is max id + 1, or the declared count when that is larger.
    Ids are not compacted.

    Raises
    ------
    GraphError: If an edge has a negative vertex id.
    """
    pairs = edges.as_array()
    if pairs.size and pairs.min() < 0:
        msg = "negative vertex id in edge list"
        raise GraphError(msg)
    vertex_count = int(pairs.max()) + 1 if pairs.size else 0
    if edges.declared_vertex_count is not None:
        vertex_count = max(vertex_count, edges.declared_vertex_count)
    if not edges.keep_self_loops:
        loops = pairs[:, 0] == pairs[:, 1]
        if loops.any():
            logging.debug(f"Dropping {int(loops.sum())} self-loops")
        pairs = pairs[~loops]
    graph = _from_pairs(
        pairs[:, 0],
        pairs[:, 1],
        vertex_count,
        deduplicate=edges.deduplicate,
    )
    if graph.edge_count != len(pairs):
        logging.debug(f"Dropped {len(pairs) - graph.edge_count} parallel edges")
    return graph


def reverse(graph: Graph) -> Graph:
    """Return the graph with every edge flipped."""
    return _from_pairs(
        graph.targets,
        graph.sources(),
        graph.vertex_count,
        deduplicate=False,
    )


def induced_subgraph(
    graph: Graph,
    keep: Iterable[int],
) -> tuple[Graph, VertexMapping]:
    """Extract the subgraph induced by `keep`, renumbered densely.

    New ids follow ascending original-id order.

    Raises
    ------
    GraphError: If a kept id is outside the graph.
    """
    kept = np.unique(np.fromiter(keep, dtype=INDEX_DTYPE))
    if kept.size and (kept[0] < 0 or kept[-1] >= graph.vertex_count):
        msg = f"kept vertex outside [0, {graph.vertex_count})"
        raise GraphError(msg)
    old_to_new = np.full(graph.vertex_count, -1, dtype=INDEX_DTYPE)
    old_to_new[kept] = np.arange(len(kept), dtype=INDEX_DTYPE)
    sources = old_to_new[graph.sources()]
    targets = old_to_new[graph.targets]
    inside = (sources >= 0) & (targets >= 0)
    subgraph = _from_pairs(
        sources[inside],
        targets[inside],
        len(kept),
        deduplicate=False,
    )
    return subgraph, VertexMapping(kept)


def add_edges(
    graph: Graph,
    extra: Iterable[tuple[int, int]],
    vertex_count: int | None = None,
) -> Graph:
    """Return a copy of `graph` with extra edges, optionally over more vertices."""
    extra_pairs = np.asarray(list(extra), dtype=INDEX_DTYPE).reshape(-1, 2)
    return _from_pairs(
        np.concatenate([graph.sources(), extra_pairs[:, 0]]),
        np.concatenate([graph.targets, extra_pairs[:, 1]]),
        graph.vertex_count if vertex_count is None else vertex_count,
        deduplicate=False,
    )
