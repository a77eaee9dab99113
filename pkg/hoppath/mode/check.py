"""Cross-check algorithms without timing them."""
import logging
from argparse import Namespace

from hoppath.bench.suite import EqualityGateError, RunReport, run_suite
from hoppath.mode.common import (
    graph_from_arguments,
    queries_from_arguments,
    suite_options_from_arguments,
    write_output,
)


def render_check(report: RunReport) -> str:
    """One line per run plus every mismatch."""
    lines = [
        f"{run.query} {run.algorithm} count={run.count} status={run.status}"
        for run in report.runs
    ]
    lines.extend(f"MISMATCH {mismatch}" for mismatch in report.mismatches)
    return "\n".join(lines) + "\n"


async def check(arguments: Namespace) -> RunReport:
    """Run every selected algorithm once per query and compare the path sets.

    Raises
    ------
    EqualityGateError: If any two algorithms disagree; the summary is written
        first.
    """
    graph = graph_from_arguments(arguments)
    query_set = queries_from_arguments(arguments, graph)
    options = suite_options_from_arguments(arguments)
    try:
        report = await run_suite(graph, query_set, options)
    except EqualityGateError as ex:
        write_output(render_check(ex.report), arguments.output)
        raise
    write_output(render_check(report), arguments.output)
    logging.info(
        f"{len(options.algorithms)} algorithms agree on {len(query_set)} queries",
    )
    return report
