"""Successor verification: target, barrier and visited checks.

`verify` runs the checks in sequence. `verify_staged` evaluates each stage on
its own slice of the input and merges the three verdicts, which is the form a
pipelined or concurrent verifier takes. Both return the same outcome for every
input produced by the engine.
"""
from dataclasses import dataclass
from enum import Enum

from hoppath.enumerators.base import Path


class Outcome(Enum):
    """Verdict on one (path, successor) pair."""

    EMIT = "emit"
    VALID = "valid"
    INVALID_BARRIER = "invalid_barrier"
    INVALID_VISITED = "invalid_visited"


@dataclass(frozen=True, slots=True)
class VerifyInput:
    """One candidate extension of an intermediate path."""

    path: Path
    successor: int
    barrier_u: int
    path_len: int
    target: int
    k: int

    @classmethod
    def of(cls, path: Path, successor: int, barrier_u: int, target: int, k: int) -> "VerifyInput":
        """Build an input whose `path_len` is derived from `path`."""
        return cls(path, successor, barrier_u, len(path) - 1, target, k)


@dataclass(frozen=True, slots=True)
class VerifyOutcome:
    """Verdict plus the result path for EMIT."""

    kind: Outcome
    result: Path | None = None


_VALID = VerifyOutcome(Outcome.VALID)
_INVALID_BARRIER = VerifyOutcome(Outcome.INVALID_BARRIER)
_INVALID_VISITED = VerifyOutcome(Outcome.INVALID_VISITED)


def target_stage(successor: int, target: int) -> bool:
    """Whether the successor is the target."""
    return successor == target


def barrier_stage(path_len: int, barrier_u: int, k: int) -> bool:
    """Whether the successor can still reach the target within k hops."""
    return path_len + 1 + barrier_u <= k


def visited_stage(path: Path, successor: int) -> bool:
    """Whether the successor keeps the path simple."""
    return successor not in path


def verify(verify_input: VerifyInput) -> VerifyOutcome:
    """Check one extension: target first, then barrier, then visited."""
    if target_stage(verify_input.successor, verify_input.target):
        return VerifyOutcome(Outcome.EMIT, (*verify_input.path, verify_input.successor))
    if not barrier_stage(verify_input.path_len, verify_input.barrier_u, verify_input.k):
        return _INVALID_BARRIER
    if not visited_stage(verify_input.path, verify_input.successor):
        return _INVALID_VISITED
    return _VALID


def verify_staged(verify_input: VerifyInput) -> VerifyOutcome:
    """Evaluate all three stages independently, then merge their verdicts.

    A target hit dominates; otherwise a barrier failure wins over a visited
    failure.
    """
    hit = target_stage(verify_input.successor, verify_input.target)
    within = barrier_stage(verify_input.path_len, verify_input.barrier_u, verify_input.k)
    simple = visited_stage(verify_input.path, verify_input.successor)
    if hit:
        return VerifyOutcome(Outcome.EMIT, (*verify_input.path, verify_input.successor))
    if not within:
        return _INVALID_BARRIER
    if not simple:
        return _INVALID_VISITED
    return _VALID
