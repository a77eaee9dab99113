"""End-to-end properties over seeded random suites and constructed stress graphs."""
import logging

import pytest

from hoppath.bench.queries import gen_queries
from hoppath.bench.report import emit_jsonl
from hoppath.bench.suite import SuiteOptions, run_suite
from hoppath.enumerators.bcdfs import bcdfs_enumerate
from hoppath.enumerators.join import join_enumerate
from hoppath.enumerators.oracle import oracle_enumerate
from hoppath.graph.generators import layered_dag, random_graph, super_node_graph
from hoppath.pefp.engine import (
    flush_ratio_survey,
    pefp_enumerate,
    pefp_enumerate_fifo,
)
from hoppath.pefp.tiers import TierConfig
from hoppath.pefp.verify import Outcome, VerifyInput, verify, verify_staged
from hoppath.preprocess.pre_bfs import (
    Query,
    barrier_to_target,
    pre_bfs,
    validate_theorem1,
)
from tests.support import random_instances

pytest_plugins = ("pytest_asyncio",)

SUITE_SIZE = 200
SUITE_SEED = 2024


@pytest.fixture(scope="module")
def suite_instances():  # noqa: ANN201
    """The seeded random suite: n <= 64, average out-degree <= 4, k in 2..6."""
    return random_instances(SUITE_SIZE, seed=SUITE_SEED)


class TestRandomSuite:
    """Every algorithm against the oracle on the random suite."""

    def test_all_algorithms_match_oracle(self, suite_instances) -> None:  # noqa: ANN001
        """Test zero mismatches for BC-DFS, JOIN and both PEFP orders."""
        for graph, query in suite_instances:
            expected = oracle_enumerate(graph, query)
            barrier = barrier_to_target(graph, query.t, query.k, radius=query.k)
            assert bcdfs_enumerate(graph, query, barrier) == expected, query
            assert join_enumerate(graph, query) == expected, query
            pre = pre_bfs(graph, query)
            assert pefp_enumerate(pre, query)[0] == expected, query
            assert pefp_enumerate_fifo(pre, query)[0] == expected, query

    def test_reduced_graph_equivalent(self, suite_instances) -> None:  # noqa: ANN001
        """Test that the reduced graph keeps exactly the original path set."""
        for graph, query in suite_instances:
            assert validate_theorem1(graph, query), query

    def test_short_radius_sufficient(self, suite_instances) -> None:  # noqa: ANN001
        """Test that k - 1 hop searches keep every vertex of every result path."""
        for graph, query in suite_instances:
            kept = set(pre_bfs(graph, query).mapping.new_to_old.tolist())
            for path in oracle_enumerate(graph, query):
                assert set(path) <= kept, (query, path)

    def test_flush_ratio_reported(self, suite_instances) -> None:  # noqa: ANN001
        """Test that the FIFO to Batch-DFS write ratio is computed over the suite."""
        survey = flush_ratio_survey(
            suite_instances,
            TierConfig(buffer_capacity=4, processing_capacity=4),
        )
        assert len(survey.rows) == SUITE_SIZE
        logging.info(f"FIFO/DFS external write ratio on the random suite: {survey.ratio}")


class TestVerificationArithmetic:
    """The worked barrier checks."""

    @pytest.mark.parametrize(
        ("path_len", "barrier", "k", "keep"),
        [(2, 6, 7, False), (4, 2, 6, False), (3, 2, 6, True)],
    )
    def test_checks(self, path_len: int, barrier: int, k: int, keep: bool) -> None:
        """Test len + 1 + bar against k."""
        item = VerifyInput(tuple(range(path_len + 1)), 50, barrier, path_len, 60, k)
        assert (verify(item).kind is Outcome.VALID) is keep


class TestCapacityStress:
    """Capacity invariants around a super node."""

    @pytest.mark.parametrize("buffer_capacity", [1, 2, 16])
    @pytest.mark.parametrize("theta2", [1, 4, 64])
    def test_super_node(self, buffer_capacity: int, theta2: int) -> None:
        """Test termination, results, occupancy, batch width and exact coverage."""
        graph, s, t = super_node_graph(100 * theta2)
        query = Query(s, t, 4)
        pre = pre_bfs(graph, query)
        hub = pre.mapping.to_new(1)
        hub_windows: list[tuple[int, int]] = []

        def record_window(record, start: int, end: int) -> None:  # noqa: ANN001
            assert end - start <= theta2
            if record.last == hub:
                hub_windows.append((start, end))

        config = TierConfig(
            buffer_capacity=buffer_capacity,
            processing_capacity=theta2,
            check_invariants=True,
        )
        results, stats = pefp_enumerate(pre, query, config, on_window=record_window)
        assert results == oracle_enumerate(graph, query)
        assert stats.peak_buffer <= buffer_capacity
        assert stats.peak_batch_slots <= theta2
        covered = [index for start, end in hub_windows for index in range(start, end)]
        assert covered == list(range(pre.subgraph.out_degree(hub)))


class TestBatchDfsBenefit:
    """Batch-DFS against FIFO on a layered DAG that overflows the buffer."""

    def test_fewer_writes(self) -> None:
        """Test strictly fewer external writes with Batch-DFS."""
        graph, s, t = layered_dag(8, 5)
        query = Query(s, t, 6)
        pre = pre_bfs(graph, query)
        config = TierConfig(buffer_capacity=64, processing_capacity=32)
        dfs_results, dfs = pefp_enumerate(pre, query, config)
        fifo_results, fifo = pefp_enumerate_fifo(pre, query, config)
        assert dfs_results == fifo_results
        assert len(dfs_results) == 8**5
        assert fifo.external_writes > 0
        assert dfs.external_writes < fifo.external_writes

    def test_narrow_batches_never_spill(self) -> None:
        """Test that depth-first batches of 8 slots fit a 64-record buffer."""
        graph, s, t = layered_dag(8, 5)
        query = Query(s, t, 6)
        config = TierConfig(buffer_capacity=64, processing_capacity=8)
        _, stats = pefp_enumerate(pre_bfs(graph, query), query, config)
        assert stats.external_writes == 0


class TestStagedVerification:
    """Staged verification against the reference on live engine inputs."""

    LIVE_INPUTS = 1_000_000

    def test_live_inputs(self) -> None:
        """Test agreement on successors drawn from real engine windows."""
        graph = random_graph(200, 8, 31)
        checked = [0]
        seed = 0
        while checked[0] < self.LIVE_INPUTS:
            for query in gen_queries(graph, 5, 20, seed).queries:
                pre = pre_bfs(graph, query)
                pefp_enumerate(pre, query, on_window=_comparing_hook(pre, checked))
            seed += 1


def _comparing_hook(pre, checked: list[int]):  # noqa: ANN001, ANN202
    """A window hook that runs both verifiers on every successor it sees."""
    adjacency, bar = pre.subgraph.adjacency, pre.barrier.bar
    target, k = pre.t_new, pre.query.k

    def compare(record, start: int, end: int) -> None:  # noqa: ANN001
        for successor in adjacency[record.last][start:end]:
            item = VerifyInput(
                record.vertices,
                successor,
                bar[successor],
                record.length,
                target,
                k,
            )
            assert verify_staged(item) == verify(item)
            checked[0] += 1

    return compare


class TestGrowth:
    """Result counts as k grows."""

    def test_counts_grow(self) -> None:
        """Test non-decreasing counts with at least one doubling for k = 2..6."""
        graph = random_graph(200, 8, 5)
        query = gen_queries(graph, 2, 1, 9).queries[0]
        counts = []
        for k in range(2, 7):
            hop_query = Query(query.s, query.t, k)
            counts.append(len(pefp_enumerate(pre_bfs(graph, hop_query), hop_query)[0]))
        assert counts == sorted(counts)
        assert any(
            later >= 2 * earlier > 0
            for earlier, later in zip(counts, counts[1:], strict=False)
        )


class TestDeterminism:
    """Structured reports with timing zeroed."""

    async def test_identical_reports(self) -> None:
        """Test byte-identical reports from two identically seeded suites."""
        graph = random_graph(64, 4, 8)
        options = SuiteOptions(
            algorithms=("oracle", "bcdfs", "join", "pefp", "pefp-fifo", "pefp-nopre"),
            repetitions=1,
            jobs=4,
            timing=False,
        )
        first = emit_jsonl(await run_suite(graph, gen_queries(graph, 4, 10, 1), options))
        second = emit_jsonl(await run_suite(graph, gen_queries(graph, 4, 10, 1), options))
        assert first == second
