"""JOIN: enumerate both halves of every path around its middle vertex, then join.

The middle vertex of an n-vertex path is its ceil(n/2)-th vertex. Left halves
(s to the middle) and right halves (the middle to t) are enumerated with
BC-DFS on two augmented graphs: a virtual target t' fed by every candidate
middle, and a virtual source s' feeding every candidate middle. A joined path
is kept iff it is simple, within k hops, and the join vertex is its middle, so
each result is produced exactly once.

Candidate middles are {u : sd(s, u) + sd(u, t) <= k}, a superset of the true
middles; the join filter removes whatever the superset lets through.
"""
import logging
import math
from collections import defaultdict
from dataclasses import dataclass

from hoppath.enumerators.base import Enumerator, Path, ResultSet, SearchGuard
from hoppath.enumerators.bcdfs import bcdfs_enumerate
from hoppath.graph.csr import Graph, add_edges
from hoppath.preprocess.pre_bfs import (
    UNREACHED,
    BarrierMap,
    DistanceMap,
    Query,
    barrier_to_target,
    bounded_bfs,
)


@dataclass(frozen=True)
class HalfInstance:
    """An augmented graph and the BC-DFS query over it."""

    graph: Graph
    query: Query
    barrier: BarrierMap


@dataclass(frozen=True)
class JoinPlan:
    """Output of JOIN's preprocessing for one query."""

    query: Query
    sd_s: DistanceMap
    sd_t: DistanceMap
    middles: list[int]
    left: HalfInstance
    right: HalfInstance


def half_hops(k: int) -> tuple[int, int]:
    """Hop bounds of the left and right half instances, virtual edge included.

    A path with k + 1 vertices has floor(k/2) edges before its middle vertex
    and ceil(k/2) after it, so ceil(k/2) + 1 covers both sides.
    """
    bound = math.ceil(k / 2) + 1
    return bound, bound


def join_preprocess(graph: Graph, query: Query) -> JoinPlan:
    """Compute distances, candidate middles and both half instances.

    Raises
    ------
    QueryError: If the query does not fit the graph.
    """
    query.check(graph.vertex_count)
    s, t, k = query.s, query.t, query.k
    sd_s = bounded_bfs(graph, s, k)
    sd_t = bounded_bfs(graph.reversed, t, k)
    middles = [
        u
        for u in sd_s.reached_vertices()
        if u != t and sd_t[u] != UNREACHED and sd_s[u] + sd_t[u] <= k
    ]
    virtual = graph.vertex_count
    left_hops, right_hops = half_hops(k)

    left_graph = add_edges(graph, [(u, virtual) for u in middles], virtual + 1)
    left = HalfInstance(
        left_graph,
        Query(s, virtual, left_hops),
        barrier_to_target(left_graph, virtual, left_hops, radius=left_hops),
    )
    right_graph = add_edges(graph, [(virtual, u) for u in middles], virtual + 1)
    right = HalfInstance(
        right_graph,
        Query(virtual, t, right_hops),
        barrier_to_target(right_graph, t, right_hops, radius=right_hops),
    )
    logging.debug(f"JOIN {query}: {len(middles)} candidate middle vertices")
    return JoinPlan(query, sd_s, sd_t, middles, left, right)


def join_halves(
    left_paths: ResultSet,
    right_paths: ResultSet,
    k: int,
    guard: SearchGuard,
) -> ResultSet:
    """Join s..u..t' halves with s'..u..t halves on their shared vertex u.

    Raises
    ------
    ResultOverflowError: If the joined result exceeds the guard's limit.
    """
    # keyed by middle vertex, then by half length in vertices
    rights: dict[int, dict[int, list[Path]]] = defaultdict(lambda: defaultdict(list))
    for path in right_paths:
        half = path[1:]
        rights[half[0]][len(half)].append(half)
    results = ResultSet()
    for path in sorted(left_paths):
        half = path[:-1]
        middle = half[-1]
        by_length = rights.get(middle)
        if not by_length:
            continue
        left_len = len(half)
        # the middle sits at position ceil(n/2) iff the right half has
        # left_len or left_len + 1 vertices
        for right_len in (left_len, left_len + 1):
            if left_len + right_len - 2 > k:
                continue
            for right in by_length.get(right_len, ()):
                guard.tick()
                joined = half + right[1:]
                if len(set(joined)) == len(joined):
                    guard.emit(results, joined)
    return results


def join_enumerate(
    graph: Graph,
    query: Query,
    plan: JoinPlan | None = None,
    guard: SearchGuard | None = None,
) -> ResultSet:
    """Enumerate every s-t k-path with the middle-vertex join.

    Raises
    ------
    ResultOverflowError: If either half or the joined output exceeds the limit.
    """
    if plan is None:
        plan = join_preprocess(graph, query)
    if guard is None:
        guard = SearchGuard(query=query)
    left_paths = bcdfs_enumerate(
        plan.left.graph,
        plan.left.query,
        plan.left.barrier,
        SearchGuard(guard.max_results, guard.deadline, query),
    )
    right_paths = bcdfs_enumerate(
        plan.right.graph,
        plan.right.query,
        plan.right.barrier,
        SearchGuard(guard.max_results, guard.deadline, query),
    )
    logging.debug(
        f"JOIN {query}: {len(left_paths)} left halves, {len(right_paths)} right halves",
    )
    return join_halves(left_paths, right_paths, query.k, guard)


class JoinEnumerator(Enumerator):
    """The middle-vertex join baseline."""

    name = "join"

    def prepare(self, graph: Graph, query: Query) -> JoinPlan:
        """Run JOIN's preprocessing."""
        return join_preprocess(graph, query)

    def search(
        self,
        graph: Graph,
        query: Query,
        prepared: JoinPlan,
        guard: SearchGuard,
    ) -> ResultSet:
        """Enumerate and join both halves."""
        return join_enumerate(graph, query, prepared, guard)
