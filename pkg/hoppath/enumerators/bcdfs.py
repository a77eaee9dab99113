"""BC-DFS: depth-first enumeration that learns barriers from fruitless subtrees.

When the whole subtree below a vertex v at depth d yields no result, v is a
trap for every later visit at depth >= d, so its barrier is raised to
k + 1 - d and later visits are cut by the ordinary barrier check
len(S) + 1 + bar[v] > k.

A failure is only learned when no visited-check prune inside the subtree hit
a vertex lying below v on the stack. Such failures depend on the current
stack, and learning them would prune valid paths once the stack changes.
With that condition every raise keeps bar[v] a lower bound on sd(v, t), so
barriers only ever grow.
"""
import logging
from dataclasses import dataclass

from hoppath.enumerators.base import Enumerator, ResultSet, SearchGuard
from hoppath.graph.csr import Graph
from hoppath.preprocess.pre_bfs import BarrierMap, Query, barrier_to_target

_NO_BLOCK = 1 << 30


@dataclass
class BcdfsStats:
    """Counters of one BC-DFS run."""

    calls: int = 0
    barrier_prunes: int = 0
    visited_prunes: int = 0
    raises: int = 0


@dataclass(slots=True)
class _Frame:
    """A vertex on the search stack.

    `blocker` is the shallowest stack depth hit by a visited-check prune
    anywhere below this vertex.
    """

    vertex: int
    depth: int
    cursor: int = 0
    found: bool = False
    blocker: int = _NO_BLOCK


class DynamicBarrier:
    """Barrier values that start from a BarrierMap and only ever grow."""

    def __init__(self, initial: BarrierMap) -> None:
        """Copy the initial barrier."""
        self.bar = list(initial.bar)
        self.k = initial.k

    def __getitem__(self, vertex: int) -> int:
        """Current barrier of `vertex`."""
        return self.bar[vertex]

    def raise_to(self, vertex: int, value: int) -> bool:
        """Raise the barrier of `vertex` to `value` if that is higher."""
        if value > self.bar[vertex]:
            self.bar[vertex] = value
            return True
        return False


class BarrierDfs:
    """One BC-DFS run over a graph; keeps its barrier and counters for inspection."""

    def __init__(
        self,
        graph: Graph,
        query: Query,
        initial: BarrierMap,
        guard: SearchGuard | None = None,
    ) -> None:
        """Initialize the run.

        Raises
        ------
        QueryError: If the query does not fit the graph.
        ValueError: If the barrier does not cover the graph.
        """
        query.check(graph.vertex_count)
        if len(initial) != graph.vertex_count:
            msg = f"barrier covers {len(initial)} of {graph.vertex_count} vertices"
            raise ValueError(msg)
        self.graph = graph
        self.query = query
        self.barrier = DynamicBarrier(initial)
        self.guard = guard if guard is not None else SearchGuard(query=query)
        self.stats = BcdfsStats()
        self.results = ResultSet()

    def run(self) -> ResultSet:
        """Enumerate every s-t k-path."""
        query = self.query
        adjacency = self.graph.adjacency
        bar = self.barrier.bar
        path = [query.s]
        depth_of = [-1] * self.graph.vertex_count
        depth_of[query.s] = 0
        self._enter()
        frames = [_Frame(query.s, 0)]
        while frames:
            frame = frames[-1]
            successors = adjacency[frame.vertex]
            if frame.depth < query.k and frame.cursor < len(successors):
                successor = successors[frame.cursor]
                frame.cursor += 1
                if frame.depth + 1 + bar[successor] > query.k:
                    self.stats.barrier_prunes += 1
                    continue
                if depth_of[successor] >= 0:
                    self.stats.visited_prunes += 1
                    frame.blocker = min(frame.blocker, depth_of[successor])
                    continue
                self._enter()
                if successor == query.t:
                    self.guard.emit(self.results, (*path, successor))
                    frame.found = True
                    continue
                depth_of[successor] = frame.depth + 1
                path.append(successor)
                frames.append(_Frame(successor, frame.depth + 1))
                continue
            frames.pop()
            self._learn(frame)
            if frames:
                path.pop()
                depth_of[frame.vertex] = -1
                parent = frames[-1]
                parent.found = parent.found or frame.found
                parent.blocker = min(parent.blocker, frame.blocker)
        logging.debug(
            f"BC-DFS {query}: {len(self.results)} paths, "
            f"{self.stats.barrier_prunes} barrier prunes, {self.stats.raises} raises",
        )
        return self.results

    def _enter(self) -> None:
        self.guard.tick()
        self.stats.calls += 1

    def _learn(self, frame: "_Frame") -> None:
        """Raise the barrier of a finished vertex whose subtree found nothing."""
        if (
            not frame.found
            and frame.blocker >= frame.depth
            and self.barrier.raise_to(frame.vertex, self.query.k + 1 - frame.depth)
        ):
            self.stats.raises += 1


def bcdfs_enumerate(
    graph: Graph,
    query: Query,
    bar0: BarrierMap,
    guard: SearchGuard | None = None,
) -> ResultSet:
    """Enumerate every s-t k-path with barrier learning, starting from `bar0`.

    Raises
    ------
    ResultOverflowError: If the guard's result limit is exceeded.
    """
    return BarrierDfs(graph, query, bar0, guard).run()


class BcdfsEnumerator(Enumerator):
    """BC-DFS over the whole graph with a k-hop reverse-BFS barrier."""

    name = "bcdfs"

    def __init__(self, *args: int, **kwargs: int) -> None:
        """Initialize the enumerator."""
        super().__init__(*args, **kwargs)
        self._stats = BcdfsStats()

    def prepare(self, graph: Graph, query: Query) -> BarrierMap:
        """Compute the barrier from a k-hop BFS on the reverse graph."""
        query.check(graph.vertex_count)
        return barrier_to_target(graph, query.t, query.k, radius=query.k)

    def search(
        self,
        graph: Graph,
        query: Query,
        prepared: BarrierMap,
        guard: SearchGuard,
    ) -> ResultSet:
        """Run BC-DFS."""
        run = BarrierDfs(graph, query, prepared, guard)
        results = run.run()
        self._stats = run.stats
        return results

    def stats(self) -> dict[str, int]:
        """Prune and raise counters of the last search."""
        return {
            "barrier_prunes": self._stats.barrier_prunes,
            "visited_prunes": self._stats.visited_prunes,
            "raises": self._stats.raises,
        }
