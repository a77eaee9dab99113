"""Seeded synthetic graphs for tests, benchmarks and stress instances."""
import numpy as np

from hoppath.graph.csr import EdgeList, Graph, build_graph


def random_graph(vertex_count: int, avg_out_degree: float, seed: int) -> Graph:
    """Uniform random directed graph with about `avg_out_degree` edges per vertex.

    Self-loops and parallel draws are dropped, so the realised degree is a
    little lower than requested.
    """
    rng = np.random.default_rng(seed)
    edge_draws = round(vertex_count * avg_out_degree)
    sources = rng.integers(0, vertex_count, size=edge_draws)
    targets = rng.integers(0, vertex_count, size=edge_draws)
    edges = list(zip(sources.tolist(), targets.tolist(), strict=True))
    return build_graph(EdgeList(edges, declared_vertex_count=vertex_count))


def chain(length: int) -> Graph:
    """The path 0 -> 1 -> ... -> length."""
    return build_graph(
        EdgeList([(v, v + 1) for v in range(length)], declared_vertex_count=length + 1),
    )


def diamond() -> Graph:
    """0 -> {1, 2} -> 3."""
    return build_graph(EdgeList([(0, 1), (0, 2), (1, 3), (2, 3)]))


def layered_dag(width: int, layers: int) -> tuple[Graph, int, int]:
    """Source, `layers` layers of `width` vertices, target; full links between layers.

    Every source-target path has exactly `layers + 1` hops.

    Returns
    -------
    tuple[Graph, int, int]: The graph, the source id and the target id.
    """
    source = 0
    target = width * layers + 1

    def layer(index: int) -> range:
        start = 1 + index * width
        return range(start, start + width)

    edges = [(source, v) for v in layer(0)]
    for index in range(layers - 1):
        edges.extend((u, v) for u in layer(index) for v in layer(index + 1))
    edges.extend((u, target) for u in layer(layers - 1))
    return build_graph(EdgeList(edges)), source, target


def super_node_graph(degree: int) -> tuple[Graph, int, int]:
    """A hub with `degree` leaves between a source and a target.

    Even leaves link to the target, odd leaves link to the next leaf, and the
    hub links back to the source.

    Returns
    -------
    tuple[Graph, int, int]: The graph, the source id and the target id.
    """
    source, hub = 0, 1
    leaves = range(2, 2 + degree)
    target = 2 + degree
    edges = [(source, hub), (hub, source)]
    edges.extend((hub, leaf) for leaf in leaves)
    for offset, leaf in enumerate(leaves):
        if offset % 2 == 0:
            edges.append((leaf, target))
        elif leaf + 1 < target:
            edges.append((leaf, leaf + 1))
    return build_graph(EdgeList(edges)), source, target
