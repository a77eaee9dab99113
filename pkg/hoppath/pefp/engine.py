"""PEFP: batched expansion and verification over the tier model.

The engine seeds the buffer with {s} and repeatedly asks the tiers for a
batch. Every windowed successor of every batch record is verified; target
hits become results and valid extensions are pushed back on the buffer. The
run ends when both the buffer and the external store are empty.
"""
import logging
from collections.abc import Callable, Iterable
from dataclasses import dataclass, replace
from typing import ClassVar

from hoppath.enumerators.base import (
    DEFAULT_MAX_RESULTS,
    Enumerator,
    ResultSet,
    SearchGuard,
)
from hoppath.graph.csr import Graph
from hoppath.pefp.tiers import (
    BatchOrder,
    PathRecord,
    TierConfig,
    TierInvariantError,
    TierState,
    TierStats,
    next_batch,
    push,
)
from hoppath.pefp.verify import Outcome, VerifyInput, verify_staged
from hoppath.preprocess.pre_bfs import (
    PreprocessResult,
    Query,
    identity_preprocess,
    pre_bfs,
)

WindowHook = Callable[[PathRecord, int, int], None]


def _check_stored(record: PathRecord, target: int, k: int) -> None:
    """Raise unless the record may be stored: short enough, simple, not at t."""
    if record.length > k - 1 or record.last == target:
        msg = f"stored path {record.vertices} violates len <= {k - 1} / last != {target}"
        raise TierInvariantError(msg)
    if len(set(record.vertices)) != len(record.vertices):
        msg = f"stored path {record.vertices} is not simple"
        raise TierInvariantError(msg)


def pefp_enumerate(
    pre: PreprocessResult,
    query: Query,
    cfg: TierConfig | None = None,
    guard: SearchGuard | None = None,
    on_window: WindowHook | None = None,
) -> tuple[ResultSet, TierStats]:
    """Enumerate every s-t k-path of the preprocessed graph.

    Paths are returned in original vertex ids. `on_window`, when given, is
    called with (record, start, end) for every successor window handed out.

    Raises
    ------
    ResultOverflowError: If the guard's result limit is exceeded.
    QueryTimeoutError: If the guard's deadline passes.
    TierInvariantError: If `cfg.check_invariants` is set and an invariant breaks.
    """
    cfg = cfg or TierConfig()
    guard = guard or SearchGuard(query=query)
    graph = pre.subgraph
    adjacency = graph.adjacency
    bar = pre.barrier.bar
    target, k = pre.t_new, query.k

    state = TierState()
    stats = state.stats
    found = ResultSet()
    push(state, PathRecord.seed(pre.s_new, len(adjacency[pre.s_new])), cfg)

    batch = next_batch(state, cfg)
    while batch:
        for entry in batch:
            record = entry.record
            if on_window is not None:
                on_window(record, entry.start, entry.end)
            path = record.vertices
            path_len = record.length
            for successor in adjacency[record.last][entry.start : entry.end]:
                guard.tick()
                stats.expansions += 1
                outcome = verify_staged(
                    VerifyInput(path, successor, bar[successor], path_len, target, k),
                )
                match outcome.kind:
                    case Outcome.EMIT:
                        stats.emitted += 1
                        guard.emit(found, outcome.result)
                    case Outcome.INVALID_BARRIER:
                        stats.barrier_prunes += 1
                    case Outcome.INVALID_VISITED:
                        stats.visited_prunes += 1
                    case Outcome.VALID:
                        extended = PathRecord(
                            (*path, successor),
                            len(adjacency[successor]),
                        )
                        if cfg.check_invariants:
                            _check_stored(extended, target, k)
                        stats.generated_by_length[path_len] += 1
                        push(state, extended, cfg)
        batch = next_batch(state, cfg)

    logging.debug(
        f"PEFP {query} ({cfg.batching}): {stats.emitted} paths in {stats.batches} "
        f"batches, {stats.external_writes} external writes",
    )
    return found.mapped(pre.mapping), stats


def pefp_enumerate_fifo(
    pre: PreprocessResult,
    query: Query,
    cfg: TierConfig | None = None,
    guard: SearchGuard | None = None,
) -> tuple[ResultSet, TierStats]:
    """`pefp_enumerate` with oldest-first batching instead of Batch-DFS."""
    return pefp_enumerate(
        pre,
        query,
        replace(cfg or TierConfig(), batching=BatchOrder.FIFO),
        guard,
    )


class PefpEnumerator(Enumerator):
    """PEFP with Pre-BFS preprocessing and the configured batching order."""

    name = "pefp"
    batching: ClassVar[BatchOrder | None] = None

    def __init__(
        self,
        max_results: int = DEFAULT_MAX_RESULTS,
        config: TierConfig | None = None,
    ) -> None:
        """Initialize the enumerator with a tier configuration."""
        super().__init__(max_results)
        config = config or TierConfig()
        if self.batching is not None:
            config = replace(config, batching=self.batching)
        self.config = config
        self.last_stats = TierStats()

    def prepare(self, graph: Graph, query: Query) -> PreprocessResult:
        """Run Pre-BFS."""
        return pre_bfs(graph, query)

    def search(
        self,
        graph: Graph,  # noqa: ARG002
        query: Query,
        prepared: PreprocessResult,
        guard: SearchGuard,
    ) -> ResultSet:
        """Run the batched engine."""
        results, self.last_stats = pefp_enumerate(prepared, query, self.config, guard)
        return results

    def stats(self) -> dict[str, int]:
        """Tier counters of the last search."""
        return self.last_stats.as_dict()


class PefpFifoEnumerator(PefpEnumerator):
    """PEFP with oldest-first batching."""

    name = "pefp-fifo"
    batching = BatchOrder.FIFO


class PefpNoPreEnumerator(PefpEnumerator):
    """PEFP on the whole graph, with only a k-hop barrier."""

    name = "pefp-nopre"

    def prepare(self, graph: Graph, query: Query) -> PreprocessResult:
        """Skip the subgraph reduction."""
        return identity_preprocess(graph, query)


@dataclass(frozen=True)
class SurveyRow:
    """External writes of both batching orders on one instance."""

    query: Query
    dfs_writes: int
    fifo_writes: int


@dataclass(frozen=True)
class FlushSurvey:
    """Batch-DFS against FIFO external writes over a set of instances."""

    rows: list[SurveyRow]

    @property
    def ratio(self) -> float | None:
        """Total FIFO writes over total Batch-DFS writes; None when undefined."""
        dfs = sum(row.dfs_writes for row in self.rows)
        fifo = sum(row.fifo_writes for row in self.rows)
        if dfs == 0:
            return None if fifo == 0 else float("inf")
        return fifo / dfs


def flush_ratio_survey(
    instances: Iterable[tuple[Graph, Query]],
    cfg: TierConfig | None = None,
) -> FlushSurvey:
    """Run both batching orders on every instance and collect external writes."""
    cfg = cfg or TierConfig()
    rows = []
    for graph, query in instances:
        pre = pre_bfs(graph, query)
        _, dfs_stats = pefp_enumerate(pre, query, replace(cfg, batching=BatchOrder.DFS))
        _, fifo_stats = pefp_enumerate_fifo(pre, query, cfg)
        rows.append(SurveyRow(query, dfs_stats.external_writes, fifo_stats.external_writes))
    survey = FlushSurvey(rows)
    logging.info(f"Flush survey over {len(rows)} instances: FIFO/DFS ratio {survey.ratio}")
    return survey
