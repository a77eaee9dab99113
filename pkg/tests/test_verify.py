"""Test successor verification."""
import random

from hoppath.pefp.verify import (
    Outcome,
    VerifyInput,
    barrier_stage,
    verify,
    verify_staged,
)


def _input(path_len: int, barrier_u: int, k: int) -> VerifyInput:
    """A non-target, unvisited successor after a path of `path_len` hops."""
    path = tuple(range(path_len + 1))
    return VerifyInput(path, 100, barrier_u, path_len, 200, k)


class TestVerify:
    """Test verify."""

    def test_trap_arithmetic(self) -> None:
        """Test 2 + 1 + 6 = 9 > 7."""
        assert verify(_input(2, 6, 7)).kind is Outcome.INVALID_BARRIER

    def test_barrier_prune(self) -> None:
        """Test 4 + 1 + 2 = 7 > 6."""
        assert verify(_input(4, 2, 6)).kind is Outcome.INVALID_BARRIER

    def test_barrier_keep(self) -> None:
        """Test 3 + 1 + 2 = 6 <= 6."""
        assert verify(_input(3, 2, 6)).kind is Outcome.VALID

    def test_emit(self) -> None:
        """Test that reaching t emits the extended path."""
        outcome = verify(VerifyInput.of((0,), 5, 0, 5, 1))
        assert outcome.kind is Outcome.EMIT
        assert outcome.result == (0, 5)

    def test_visited(self) -> None:
        """Test a successor already on the path."""
        outcome = verify(VerifyInput.of((0, 1, 2), 1, 1, 9, 6))
        assert outcome.kind is Outcome.INVALID_VISITED

    def test_barrier_before_visited(self) -> None:
        """Test that a barrier failure is reported ahead of a visited failure."""
        outcome = verify(VerifyInput.of((0, 1, 2), 1, 9, 9, 4))
        assert outcome.kind is Outcome.INVALID_BARRIER

    def test_barrier_monotone_in_length(self) -> None:
        """Test that a longer path never passes where a shorter one fails."""
        for k in range(1, 8):
            for barrier in range(k + 2):
                for length in range(k):
                    if not barrier_stage(length, barrier, k):
                        assert not barrier_stage(length + 1, barrier, k)


class TestVerifyStaged:
    """Test verify_staged."""

    def test_emit_with_zero_barrier(self) -> None:
        """Test the target hit with every stage run."""
        outcome = verify_staged(VerifyInput.of((0, 1), 3, 0, 3, 2))
        assert outcome.kind is Outcome.EMIT
        assert outcome.result == (0, 1, 3)

    def test_random_inputs(self) -> None:
        """Test agreement with verify on random inputs, dead ones included."""
        rng = random.Random(7)
        for _ in range(20_000):
            k = rng.randint(1, 8)
            path = tuple(rng.sample(range(12), rng.randint(1, k)))
            successor = rng.randrange(12)
            target = rng.randrange(12)
            item = VerifyInput.of(path, successor, rng.randint(0, k + 1), target, k)
            assert verify_staged(item) == verify(item)
