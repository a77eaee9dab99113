"""Benchmark suites: run algorithms over a query set and cross-check them."""
import asyncio
import logging
from dataclasses import dataclass, field
from enum import StrEnum

from hoppath.bench.queries import QuerySet
from hoppath.enumerators.base import (
    DEFAULT_MAX_RESULTS,
    Enumerator,
    Path,
    QueryTimeoutError,
    ResultOverflowError,
    ResultSet,
    SearchGuard,
)
from hoppath.enumerators.bcdfs import BcdfsEnumerator
from hoppath.enumerators.join import JoinEnumerator
from hoppath.enumerators.oracle import OracleEnumerator
from hoppath.graph.csr import Graph
from hoppath.helpers.helpers import Stopwatch, deadline_after
from hoppath.pefp.engine import PefpEnumerator, PefpFifoEnumerator, PefpNoPreEnumerator
from hoppath.pefp.tiers import TierConfig
from hoppath.preprocess.pre_bfs import Query

ALGORITHMS: dict[str, type[Enumerator]] = {
    enumerator.name: enumerator
    for enumerator in (
        OracleEnumerator,
        BcdfsEnumerator,
        JoinEnumerator,
        PefpEnumerator,
        PefpFifoEnumerator,
        PefpNoPreEnumerator,
    )
}


class QueryStatus(StrEnum):
    """How one (algorithm, query) run ended."""

    OK = "ok"
    TIMEOUT = "timeout"
    OVERFLOW = "overflow"


@dataclass(frozen=True)
class SuiteOptions:
    """Knobs of one suite run.

    Attributes
    ----------
    algorithms (tuple[str, ...]): Names from ALGORITHMS, in report order.
    tier_config (TierConfig): Passed to the PEFP variants.
    repetitions (int): Runs per (algorithm, query); times are averaged.
    jobs (int): Queries processed concurrently.
    timeout_s (float | None): Per-run deadline.
    max_results (int): Overflow limit per run.
    timing (bool): Record times; False zeroes every time field.
    keep_paths (bool): Keep result paths on each QueryRun.
    """

    algorithms: tuple[str, ...] = ("pefp",)
    tier_config: TierConfig = field(default_factory=TierConfig)
    repetitions: int = 3
    jobs: int = 1
    timeout_s: float | None = None
    max_results: int = DEFAULT_MAX_RESULTS
    timing: bool = True
    keep_paths: bool = False

    def __post_init__(self) -> None:
        """Validate the options.

        Raises
        ------
        ValueError: On an unknown algorithm or a non-positive count.
        """
        unknown = [name for name in self.algorithms if name not in ALGORITHMS]
        if unknown or not self.algorithms:
            msg = f"unknown algorithms {unknown}; choose from {sorted(ALGORITHMS)}"
            raise ValueError(msg)
        if self.repetitions < 1 or self.jobs < 1:
            msg = f"repetitions ({self.repetitions}) and jobs ({self.jobs}) must be >= 1"
            raise ValueError(msg)


@dataclass
class QueryRun:
    """Outcome of one algorithm on one query."""

    algorithm: str
    query: Query
    count: int = 0
    t1_ns: int = 0
    t2_ns: int = 0
    status: QueryStatus = QueryStatus.OK
    stats: dict[str, int] = field(default_factory=dict)
    paths: ResultSet | None = None

    @property
    def total_ns(self) -> int:
        """Preprocessing plus query processing time."""
        return self.t1_ns + self.t2_ns

    def record(self) -> dict[str, int | str]:
        """The fixed-key structured record of this run."""
        return {
            "algorithm": self.algorithm,
            "s": self.query.s,
            "t": self.query.t,
            "k": self.query.k,
            "count": self.count,
            "t1_ns": self.t1_ns,
            "t2_ns": self.t2_ns,
            "total_ns": self.total_ns,
            "external_reads": self.stats.get("external_reads", 0),
            "external_writes": self.stats.get("external_writes", 0),
            "batches": self.stats.get("batches", 0),
            "status": str(self.status),
        }


@dataclass(frozen=True)
class Mismatch:
    """Two algorithms disagreeing on one query, with the smallest witness."""

    query: Query
    reference: str
    other: str
    missing: Path | None
    extra: Path | None

    def __str__(self) -> str:
        """Render as a counterexample line."""
        return (
            f"{self.other} disagrees with {self.reference} on {self.query}: "
            f"missing {self.missing}, extra {self.extra}"
        )


@dataclass
class RunReport:
    """Every QueryRun of a suite, in query order then algorithm order."""

    runs: list[QueryRun] = field(default_factory=list)
    mismatches: list[Mismatch] = field(default_factory=list)

    def averages(self) -> dict[str, dict[str, float]]:
        """Mean times and counts per algorithm over runs that completed."""
        grouped: dict[str, list[QueryRun]] = {}
        for run in self.runs:
            if run.status is QueryStatus.OK:
                grouped.setdefault(run.algorithm, []).append(run)
        return {
            algorithm: {
                "count": sum(run.count for run in runs) / len(runs),
                "t1_ns": sum(run.t1_ns for run in runs) / len(runs),
                "t2_ns": sum(run.t2_ns for run in runs) / len(runs),
                "total_ns": sum(run.total_ns for run in runs) / len(runs),
            }
            for algorithm, runs in grouped.items()
        }


class EqualityGateError(Exception):
    """Two algorithms returned different path sets for the same query."""

    def __init__(self, mismatches: list[Mismatch], report: RunReport) -> None:
        """Initialize the error with the first counterexample in the message."""
        super().__init__(
            f"{len(mismatches)} result mismatches; first: {mismatches[0]}",
        )
        self.mismatches = mismatches
        self.report = report


def make_enumerator(name: str, options: SuiteOptions) -> Enumerator:
    """Instantiate the named algorithm with the suite's limits."""
    enumerator = ALGORITHMS[name]
    if issubclass(enumerator, PefpEnumerator):
        return enumerator(options.max_results, options.tier_config)
    return enumerator(options.max_results)


def run_query(graph: Graph, query: Query, name: str, options: SuiteOptions) -> QueryRun:
    """Time one algorithm on one query over the configured repetitions."""
    enumerator = make_enumerator(name, options)
    preprocessing, processing = Stopwatch(), Stopwatch()
    results = ResultSet()
    try:
        for _ in range(options.repetitions):
            deadline = deadline_after(options.timeout_s)
            with preprocessing.section():
                prepared = enumerator.prepare(graph, query)
            guard = SearchGuard(options.max_results, deadline, query)
            with processing.section():
                results = enumerator.search(graph, query, prepared, guard)
    except QueryTimeoutError:
        logging.warning(f"{name} timed out on {query}")
        return QueryRun(name, query, status=QueryStatus.TIMEOUT)
    except ResultOverflowError as ex:
        logging.warning(f"{name} overflowed on {query}: {ex}")
        return QueryRun(name, query, status=QueryStatus.OVERFLOW)
    return QueryRun(
        name,
        query,
        count=len(results),
        t1_ns=preprocessing.mean_ns if options.timing else 0,
        t2_ns=processing.mean_ns if options.timing else 0,
        stats=enumerator.stats(),
        paths=results,
    )


def compare_runs(runs: list[QueryRun]) -> list[Mismatch]:
    """Compare every completed run against the first completed one."""
    completed = [run for run in runs if run.status is QueryStatus.OK]
    if len(completed) < 2:  # noqa: PLR2004
        return []
    reference = completed[0]
    mismatches = []
    for run in completed[1:]:
        if run.paths == reference.paths:
            continue
        expected, actual = set(reference.paths), set(run.paths)
        missing = expected - actual
        extra = actual - expected
        mismatches.append(
            Mismatch(
                run.query,
                reference.algorithm,
                run.algorithm,
                min(missing, key=lambda path: (len(path), path)) if missing else None,
                min(extra, key=lambda path: (len(path), path)) if extra else None,
            ),
        )
    return mismatches


def _run_algorithms(
    graph: Graph,
    query: Query,
    options: SuiteOptions,
) -> tuple[list[QueryRun], list[Mismatch]]:
    runs = [run_query(graph, query, name, options) for name in options.algorithms]
    mismatches = compare_runs(runs)
    if not options.keep_paths:
        for run in runs:
            run.paths = None
    return runs, mismatches


async def run_suite(
    graph: Graph,
    query_set: QuerySet,
    options: SuiteOptions | None = None,
) -> RunReport:
    """Run every selected algorithm on every query.

    Up to `options.jobs` queries run at once in worker threads; the report
    keeps query order regardless.

    Raises
    ------
    EqualityGateError: If two algorithms disagree on any query. Raised after
        the whole suite finished; the error carries the full report.
    """
    options = options or SuiteOptions()
    logging.info(
        f"Running {', '.join(options.algorithms)} on {len(query_set)} queries "
        f"({options.repetitions} repetitions, {options.jobs} jobs)",
    )
    semaphore = asyncio.Semaphore(options.jobs)

    async def run_one(query: Query) -> tuple[list[QueryRun], list[Mismatch]]:
        async with semaphore:
            return await asyncio.to_thread(_run_algorithms, graph, query, options)

    tasks = [asyncio.ensure_future(run_one(query)) for query in query_set.queries]
    report = RunReport()
    for runs, mismatches in await asyncio.gather(*tasks):
        report.runs.extend(runs)
        report.mismatches.extend(mismatches)
    logging.info(f"Suite finished: {len(report.runs)} runs")
    if report.mismatches:
        for mismatch in report.mismatches:
            logging.error(str(mismatch))
        raise EqualityGateError(report.mismatches, report)
    return report
