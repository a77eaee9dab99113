"""Helper functions for hoppath."""
import logging
import sys
import time
from collections.abc import Iterator
from contextlib import contextmanager

import colorlog


def setup_logging(log_level: int | str) -> None:
    """Set logging."""
    logger = logging.getLogger()
    stdout = colorlog.StreamHandler(stream=sys.stdout)
    fmt = colorlog.ColoredFormatter(
        "%(white)s%(asctime)s%(reset)s | %(log_color)s%(levelname)s%(reset)s | "
        "%(threadName)s:%(name)s | %(blue)s%(filename)s:%(lineno)s%(reset)s | "
        "%(funcName)s >>> %(log_color)s%(message)s%(reset)s",
    )
    stdout.setFormatter(fmt)
    logger.handlers = [
        handler
        for handler in logger.handlers
        if not isinstance(handler.formatter, colorlog.ColoredFormatter)
    ]
    logger.addHandler(stdout)
    logger.setLevel(log_level)


class Stopwatch:
    """Accumulates elapsed nanoseconds over one or more timed sections.

    Attributes
    ----------
    elapsed_ns (int): Total nanoseconds spent inside `section()` blocks.
    laps (int): Number of completed sections.
    """

    def __init__(self) -> None:
        """Initialize an empty stopwatch."""
        self.elapsed_ns = 0
        self.laps = 0

    @contextmanager
    def section(self) -> Iterator[None]:
        """Time the enclosed block and add it to the total."""
        start = time.perf_counter_ns()
        try:
            yield
        finally:
            self.elapsed_ns += time.perf_counter_ns() - start
            self.laps += 1

    @property
    def mean_ns(self) -> int:
        """Mean nanoseconds per completed section, 0 before the first lap."""
        if self.laps == 0:
            return 0
        return self.elapsed_ns // self.laps


def deadline_after(timeout_s: float | None) -> float | None:
    """Turn a relative timeout into an absolute `time.monotonic()` deadline."""
    if timeout_s is None:
        return None
    return time.monotonic() + timeout_s
