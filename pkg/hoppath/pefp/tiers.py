"""Three-tier memory model for batched path expansion.

Intermediate paths live in a bounded buffer (a stack), spill to an unbounded
external stack when the buffer fills, and are handed to the processing area
in batches whose total successor window never exceeds the processing
capacity. A path record carries a cursor into its last vertex's successor
list, so a vertex of any degree is expanded across as many batches as needed.
"""
import logging
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import StrEnum

from hoppath.enumerators.base import Path

DEFAULT_BUFFER_CAPACITY = 4096
DEFAULT_PROCESSING_CAPACITY = 1024


class TierInvariantError(AssertionError):
    """A capacity or stored-path invariant was violated."""


class BatchOrder(StrEnum):
    """Which end of the buffer batches are taken from."""

    DFS = "dfs"
    FIFO = "fifo"


class FlushPolicy(StrEnum):
    """How much of a full buffer is moved to the external store."""

    SEGMENT = "segment"
    ALL = "all"


@dataclass(slots=True)
class PathRecord:
    """An intermediate path and the window of successors already handed out.

    Attributes
    ----------
    vertices (Path): The path, source first.
    degree (int): Out-degree of the last vertex.
    nbr_start (int): Start of the most recent window.
    nbr_end (int): End of the most recent window; later windows start here.
    """

    vertices: Path
    degree: int
    nbr_start: int = 0
    nbr_end: int = 0

    @classmethod
    def seed(cls, source: int, degree: int) -> "PathRecord":
        """The single-vertex path {source}."""
        return cls((source,), degree)

    @property
    def last(self) -> int:
        """Last vertex of the path."""
        return self.vertices[-1]

    @property
    def length(self) -> int:
        """Hop count of the path."""
        return len(self.vertices) - 1

    @property
    def exhausted(self) -> bool:
        """Whether every successor has been handed out."""
        return self.nbr_end >= self.degree


@dataclass(frozen=True, slots=True)
class BatchEntry:
    """A record together with the successor window [start, end) it got."""

    record: PathRecord
    start: int
    end: int

    @property
    def width(self) -> int:
        """Number of successor slots claimed."""
        return self.end - self.start


@dataclass(frozen=True)
class TierConfig:
    """Capacities and policies of the tier model.

    Attributes
    ----------
    buffer_capacity (int): Most records the buffer holds.
    processing_capacity (int): Most successor slots per batch.
    external_batch (int | None): Records moved per refill and per segment
        flush; defaults to half the buffer capacity.
    flush (FlushPolicy): Segment (oldest records) or whole-buffer flush.
    batching (BatchOrder): Take batches from the buffer top or bottom.
    check_invariants (bool): Raise TierInvariantError on any violation.
    """

    buffer_capacity: int = DEFAULT_BUFFER_CAPACITY
    processing_capacity: int = DEFAULT_PROCESSING_CAPACITY
    external_batch: int | None = None
    flush: FlushPolicy = FlushPolicy.SEGMENT
    batching: BatchOrder = BatchOrder.DFS
    check_invariants: bool = False

    def __post_init__(self) -> None:
        """Validate the capacities and fill in the external batch size.

        Raises
        ------
        ValueError: If a capacity is below 1 or the external batch does not
            fit in the buffer.
        """
        if self.buffer_capacity < 1 or self.processing_capacity < 1:
            msg = (
                f"capacities must be at least 1, got buffer={self.buffer_capacity} "
                f"processing={self.processing_capacity}"
            )
            raise ValueError(msg)
        if self.external_batch is None:
            object.__setattr__(self, "external_batch", max(1, self.buffer_capacity // 2))
        if not 1 <= self.external_batch <= self.buffer_capacity:
            msg = (
                f"external batch {self.external_batch} must lie in "
                f"[1, {self.buffer_capacity}]"
            )
            raise ValueError(msg)
        object.__setattr__(self, "flush", FlushPolicy(self.flush))
        object.__setattr__(self, "batching", BatchOrder(self.batching))


@dataclass
class TierStats:
    """Traffic and work counters of one engine run."""

    external_writes: int = 0
    external_reads: int = 0
    batches: int = 0
    expansions: int = 0
    emitted: int = 0
    peak_buffer: int = 0
    peak_external: int = 0
    peak_batch_slots: int = 0
    flushes: int = 0
    refills: int = 0
    barrier_prunes: int = 0
    visited_prunes: int = 0
    generated_by_length: Counter[int] = field(default_factory=Counter)

    def as_dict(self) -> dict[str, int]:
        """Flat counters: scalars in declaration order, then the length histogram."""
        flat = {
            name: value
            for name, value in vars(self).items()
            if name != "generated_by_length"
        }
        for length, count in sorted(self.generated_by_length.items()):
            flat[f"generated_by_length.{length}"] = count
        return flat

    def to_kv(self) -> str:
        """Render as one `key=value` line per counter."""
        return format_kv(self.as_dict())


def format_kv(counters: Mapping[str, int]) -> str:
    """One `key=value` line per entry, in mapping order."""
    return "".join(f"{name}={value}\n" for name, value in counters.items())


@dataclass
class TierState:
    """Buffer and external stacks plus the counters that track them."""

    buffer: list[PathRecord] = field(default_factory=list)
    external: list[PathRecord] = field(default_factory=list)
    stats: TierStats = field(default_factory=TierStats)

    def check_capacity(self, cfg: TierConfig) -> None:
        """Raise if the buffer holds more than its capacity."""
        if len(self.buffer) > cfg.buffer_capacity:
            msg = f"buffer holds {len(self.buffer)} > {cfg.buffer_capacity} records"
            raise TierInvariantError(msg)


def batch_dfs(buffer: list[PathRecord], theta: int) -> list[BatchEntry]:
    """Fill a batch of at most `theta` successor slots from the buffer top.

    Fully consumed records leave the buffer; a record whose window was cut
    short stays on top with its cursor advanced.
    """
    batch: list[BatchEntry] = []
    claimed = 0
    while buffer and claimed < theta:
        record = buffer[-1]
        start = record.nbr_end
        end = min(start + theta - claimed, record.degree)
        record.nbr_start, record.nbr_end = start, end
        if end > start:
            batch.append(BatchEntry(record, start, end))
            claimed += end - start
        if not record.exhausted:
            break
        buffer.pop()
    return batch


def batch_fifo(buffer: list[PathRecord], theta: int) -> list[BatchEntry]:
    """Like `batch_dfs`, but oldest (shortest) records first."""
    batch: list[BatchEntry] = []
    claimed = 0
    while buffer and claimed < theta:
        record = buffer[0]
        start = record.nbr_end
        end = min(start + theta - claimed, record.degree)
        record.nbr_start, record.nbr_end = start, end
        if end > start:
            batch.append(BatchEntry(record, start, end))
            claimed += end - start
        if not record.exhausted:
            break
        buffer.pop(0)
    return batch


def refill(state: TierState, cfg: TierConfig) -> int:
    """Move up to `external_batch` records from the external tail to the buffer.

    The moved records keep their relative order, so the most recently
    spilled one ends up on the buffer top.
    """
    count = min(cfg.external_batch, len(state.external))
    if count == 0:
        return 0
    state.buffer.extend(state.external[-count:])
    del state.external[-count:]
    state.stats.external_reads += count
    state.stats.refills += 1
    state.stats.peak_buffer = max(state.stats.peak_buffer, len(state.buffer))
    return count


def flush(state: TierState, cfg: TierConfig) -> int:
    """Spill the oldest segment (or the whole buffer) to the external store."""
    if cfg.flush is FlushPolicy.ALL:
        count = len(state.buffer)
    else:
        count = min(cfg.external_batch, len(state.buffer))
    state.external.extend(state.buffer[:count])
    del state.buffer[:count]
    state.stats.external_writes += count
    state.stats.flushes += 1
    state.stats.peak_external = max(state.stats.peak_external, len(state.external))
    logging.debug(f"Flushed {count} records, {len(state.external)} now external")
    return count


def push(state: TierState, record: PathRecord, cfg: TierConfig) -> None:
    """Push a record on the buffer top; a full buffer is flushed first."""
    if len(state.buffer) >= cfg.buffer_capacity:
        flush(state, cfg)
    state.buffer.append(record)
    state.stats.peak_buffer = max(state.stats.peak_buffer, len(state.buffer))
    if cfg.check_invariants:
        state.check_capacity(cfg)


def next_batch(state: TierState, cfg: TierConfig) -> list[BatchEntry]:
    """Build the next batch; an empty batch means the search is finished.

    The buffer is always drained first. Only an empty buffer is refilled
    from the external store.
    """
    take = batch_dfs if cfg.batching is BatchOrder.DFS else batch_fifo
    while True:
        if not state.buffer:
            refill(state, cfg)
        if not state.buffer:
            return []
        batch = take(state.buffer, cfg.processing_capacity)
        if batch:
            slots = sum(entry.width for entry in batch)
            if cfg.check_invariants and slots > cfg.processing_capacity:
                msg = f"batch claims {slots} > {cfg.processing_capacity} slots"
                raise TierInvariantError(msg)
            state.stats.batches += 1
            state.stats.peak_batch_slots = max(state.stats.peak_batch_slots, slots)
            return batch
