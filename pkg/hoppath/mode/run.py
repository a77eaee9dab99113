"""Run and time a benchmark suite."""
import logging
from argparse import Namespace
from pathlib import Path

from hoppath.bench.report import emit_report
from hoppath.bench.suite import EqualityGateError, RunReport, run_suite
from hoppath.mode.common import (
    graph_from_arguments,
    queries_from_arguments,
    suite_options_from_arguments,
    write_output,
)
from hoppath.mode.pre import render_preprocessing
from hoppath.pefp.tiers import format_kv


def render_paths(report: RunReport) -> str:
    """Every kept result path, grouped by run."""
    blocks = []
    for run in report.runs:
        if run.paths is None:
            continue
        blocks.append(f"# {run.algorithm} {run.query} count={run.count}\n")
        blocks.append(run.paths.to_lines())
    return "".join(blocks)


def render_stats(report: RunReport) -> str:
    """A `key=value` block per run that kept counters, under a header line."""
    return "".join(
        f"# {run.algorithm} {run.query} status={run.status}\n" + format_kv(run.stats)
        for run in report.runs
        if run.stats
    )


def _write_report(report: RunReport, arguments: Namespace) -> None:
    write_output(emit_report(report, arguments.format), arguments.output)
    if arguments.stats:
        Path(arguments.stats).write_text(render_stats(report), encoding="utf-8")
        logging.info(f"Wrote run counters to {arguments.stats}")
    if arguments.emit_paths:
        Path(arguments.emit_paths).write_text(render_paths(report), encoding="utf-8")
        logging.info(f"Wrote result paths to {arguments.emit_paths}")


async def run(arguments: Namespace) -> RunReport:
    """Run the selected algorithms over the query set and write the report.

    The report is written even when the equality gate fails.
    """
    graph = graph_from_arguments(arguments)
    query_set = queries_from_arguments(arguments, graph)
    if arguments.dump_pre:
        Path(arguments.dump_pre).write_text(
            render_preprocessing(graph, query_set),
            encoding="utf-8",
        )
        logging.info(f"Wrote preprocessing diagnostics to {arguments.dump_pre}")
    options = suite_options_from_arguments(
        arguments,
        keep_paths=bool(arguments.emit_paths),
    )
    try:
        report = await run_suite(graph, query_set, options)
    except EqualityGateError as ex:
        _write_report(ex.report, arguments)
        raise
    _write_report(report, arguments)
    return report
