"""Benchmark suites."""

from . import queries, report, suite

__all__ = ["queries", "report", "suite"]
