"""Shared builders and independent reference computations for the tests."""
import random

import networkx as nx

from hoppath.graph.csr import EdgeList, Graph, build_graph
from hoppath.graph.generators import random_graph
from hoppath.preprocess.pre_bfs import Query, bounded_bfs


def graph_of(edges: list[tuple[int, int]], vertex_count: int | None = None) -> Graph:
    """Build a graph from literal edges."""
    return build_graph(EdgeList(edges, declared_vertex_count=vertex_count))


def to_networkx(graph: Graph) -> nx.DiGraph:
    """The same graph as a networkx DiGraph, isolated vertices included."""
    digraph = nx.DiGraph()
    digraph.add_nodes_from(range(graph.vertex_count))
    digraph.add_edges_from(graph.edges())
    return digraph


def networkx_paths(graph: Graph, query: Query) -> set[tuple[int, ...]]:
    """Every s-t path with at most k hops, computed by networkx."""
    return {
        tuple(path)
        for path in nx.all_simple_paths(
            to_networkx(graph),
            query.s,
            query.t,
            cutoff=query.k,
        )
    }


def random_instances(
    count: int,
    seed: int = 0,
    max_vertices: int = 64,
    max_degree: float = 4.0,
    hops: tuple[int, ...] = (2, 3, 4, 5, 6),
) -> list[tuple[Graph, Query]]:
    """Seeded random graphs, each with one query.

    The target is drawn among vertices reachable within k hops when the
    source reaches any, so most instances have at least one path.
    """
    rng = random.Random(seed)
    instances = []
    for index in range(count):
        vertex_count = rng.randint(4, max_vertices)
        degree = rng.uniform(1.0, max_degree)
        graph = random_graph(vertex_count, degree, seed * 100_003 + index)
        k = rng.choice(hops)
        s = rng.randrange(vertex_count)
        reached = [v for v in bounded_bfs(graph, s, k).reached_vertices() if v != s]
        t = rng.choice(reached) if reached else (s + 1) % vertex_count
        instances.append((graph, Query(s, t, k)))
    return instances
