"""Argument handling shared by the subcommands."""
import logging
import sys
from argparse import Namespace
from pathlib import Path

from hoppath.bench.queries import QuerySet, gen_queries
from hoppath.bench.suite import SuiteOptions
from hoppath.graph.csr import Graph
from hoppath.helpers.cache_manager import GraphCacheManager, load_graph
from hoppath.pefp.tiers import TierConfig


def graph_from_arguments(arguments: Namespace) -> Graph:
    """Load the graph named by --graph with the ingest flags applied."""
    cache = GraphCacheManager(arguments.state_dir) if arguments.cache_graphs else None
    return load_graph(
        arguments.graph,
        keep_self_loops=arguments.keep_self_loops,
        deduplicate=not arguments.keep_duplicates,
        vertex_count=arguments.vertex_count,
        cache=cache,
    )


def queries_from_arguments(arguments: Namespace, graph: Graph) -> QuerySet:
    """Read --queries, or generate --count queries when no file is given."""
    if arguments.queries:
        query_set = QuerySet.from_file(arguments.queries)
        for query in query_set.queries:
            query.check(graph.vertex_count)
        logging.info(f"Read {len(query_set)} queries from {arguments.queries}")
        return query_set
    return gen_queries(graph, arguments.k, arguments.count, arguments.seed)


def tier_config_from_arguments(arguments: Namespace) -> TierConfig:
    """Build the PEFP tier configuration from the engine flags."""
    return TierConfig(
        buffer_capacity=arguments.buffer_cap,
        processing_capacity=arguments.theta2,
        external_batch=arguments.theta1,
        flush=arguments.flush,
        batching=arguments.batching,
        check_invariants=arguments.check_invariants,
    )


def suite_options_from_arguments(
    arguments: Namespace,
    *,
    keep_paths: bool = False,
) -> SuiteOptions:
    """Build the suite options from the suite and engine flags."""
    algorithms = arguments.algorithms
    if isinstance(algorithms, str):
        algorithms = [name.strip() for name in algorithms.split(",") if name.strip()]
    return SuiteOptions(
        algorithms=tuple(algorithms),
        tier_config=tier_config_from_arguments(arguments),
        repetitions=arguments.repetitions,
        jobs=arguments.jobs,
        timeout_s=arguments.timeout_ms / 1000 if arguments.timeout_ms else None,
        max_results=arguments.max_results,
        timing=not arguments.no_timing,
        keep_paths=keep_paths,
    )


def write_output(text: str, output: str | None) -> None:
    """Write `text` to the --output file, or to stdout."""
    if output is None:
        sys.stdout.write(text)
        return
    Path(output).write_text(text, encoding="utf-8")
    logging.info(f"Wrote {output}")
