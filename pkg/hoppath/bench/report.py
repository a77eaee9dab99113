"""Render a RunReport as a text table or as JSON lines."""
import json
from enum import StrEnum

from hoppath.bench.suite import RunReport

COLUMNS = (
    ("algorithm", 10),
    ("s", 8),
    ("t", 8),
    ("k", 3),
    ("count", 10),
    ("t1_ns", 12),
    ("t2_ns", 12),
    ("total_ns", 12),
    ("external_reads", 14),
    ("external_writes", 15),
    ("batches", 8),
    ("status", 8),
)


class ReportFormat(StrEnum):
    """Supported report encodings."""

    TEXT = "text"
    JSONL = "jsonl"


def _row(values: list[str]) -> str:
    return " ".join(
        value.ljust(width) if index == 0 else value.rjust(width)
        for index, (value, (_, width)) in enumerate(zip(values, COLUMNS, strict=True))
    ).rstrip()


def emit_text(report: RunReport) -> str:
    """Human-readable table; an empty report renders the header alone."""
    lines = [_row([name for name, _ in COLUMNS])]
    lines.extend(
        _row([str(value) for value in run.record().values()]) for run in report.runs
    )
    averages = report.averages()
    if averages:
        lines.append("")
        lines.append("# averages over completed runs")
        lines.extend(
            f"{algorithm}: count={mean['count']:.1f} t1_ns={mean['t1_ns']:.0f} "
            f"t2_ns={mean['t2_ns']:.0f} total_ns={mean['total_ns']:.0f}"
            for algorithm, mean in averages.items()
        )
    return "\n".join(lines) + "\n"


def emit_jsonl(report: RunReport) -> str:
    """One JSON object per run, keys in fixed order."""
    return "".join(json.dumps(run.record()) + "\n" for run in report.runs)


def emit_report(report: RunReport, fmt: ReportFormat | str = ReportFormat.TEXT) -> str:
    """Render `report` in the requested format.

    Raises
    ------
    ValueError: On an unknown format.
    """
    if ReportFormat(fmt) is ReportFormat.JSONL:
        return emit_jsonl(report)
    return emit_text(report)
