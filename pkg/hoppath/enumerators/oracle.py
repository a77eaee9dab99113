"""Brute-force reference enumerator.

A plain depth-first search bounded only by the hop constraint and path
simplicity. Slow, but independent of every pruning rule the other
enumerators rely on.
"""
from hoppath.enumerators.base import Enumerator, ResultSet, SearchGuard
from hoppath.graph.csr import Graph
from hoppath.preprocess.pre_bfs import Query


def oracle_enumerate(
    graph: Graph,
    query: Query,
    guard: SearchGuard | None = None,
) -> ResultSet:
    """Enumerate every s-t k-path.

    Paths come out in lexicographic order because successor lists are sorted.

    Raises
    ------
    QueryError: If the query does not fit the graph.
    ResultOverflowError: If the guard's result limit is exceeded.
    """
    query.check(graph.vertex_count)
    if guard is None:
        guard = SearchGuard(query=query)
    adjacency = graph.adjacency
    target, hops = query.t, query.k
    results = ResultSet()
    path = [query.s]
    # cursors[i] is the next successor index of path[i]
    cursors = [0]
    on_path = [False] * graph.vertex_count
    on_path[query.s] = True
    guard.tick()
    while path:
        vertex = path[-1]
        cursor = cursors[-1]
        successors = adjacency[vertex]
        if len(path) - 1 == hops or cursor == len(successors):
            on_path[vertex] = False
            path.pop()
            cursors.pop()
            continue
        cursors[-1] = cursor + 1
        successor = successors[cursor]
        if on_path[successor]:
            continue
        guard.tick()
        if successor == target:
            guard.emit(results, (*path, successor))
            continue
        on_path[successor] = True
        path.append(successor)
        cursors.append(0)
    return results


class OracleEnumerator(Enumerator):
    """Brute-force enumeration with no preprocessing."""

    name = "oracle"

    def prepare(self, graph: Graph, query: Query) -> None:
        """Nothing to prepare."""
        query.check(graph.vertex_count)

    def search(
        self,
        graph: Graph,
        query: Query,
        prepared: None,  # noqa: ARG002
        guard: SearchGuard,
    ) -> ResultSet:
        """Run the brute-force search."""
        return oracle_enumerate(graph, query, guard)
