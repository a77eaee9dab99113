"""Interface shared by every s-t k-path enumerator."""
import time
from abc import ABCMeta, abstractmethod
from typing import Any, ClassVar

from hoppath.graph.csr import Graph, VertexMapping
from hoppath.helpers.ordered_set import OrderedSet
from hoppath.preprocess.pre_bfs import Query

Path = tuple[int, ...]

DEFAULT_MAX_RESULTS = 10_000_000


class EnumerationError(Exception):
    """Error raised when an enumeration cannot complete."""

    def __init__(self, message: str, query: Query | None = None) -> None:
        """Initialize the error."""
        super().__init__(message)
        self.query = query


class ResultOverflowError(EnumerationError):
    """The result count exceeded the configured limit."""

    def __init__(self, limit: int, query: Query | None = None) -> None:
        """Initialize the error."""
        super().__init__(f"more than {limit} result paths for {query}", query)
        self.limit = limit


class QueryTimeoutError(EnumerationError):
    """The enumeration ran past its deadline."""

    def __init__(
        self,
        query: Query | None = None,
        deadline: float | None = None,
    ) -> None:
        """Initialize the error with the missed `time.monotonic()` deadline."""
        super().__init__(f"timed out enumerating {query}", query)
        self.deadline = deadline


class ResultSet(OrderedSet[Path]):
    """Result paths in discovery order, compared as a set."""

    def sorted(self) -> list[Path]:
        """Paths in lexicographic vertex order."""
        return sorted(self)

    def mapped(self, mapping: VertexMapping) -> "ResultSet":
        """Translate every path through `mapping` back to original ids."""
        return ResultSet(mapping.path_to_old(path) for path in self)

    def to_lines(self) -> str:
        """One path per line, space-separated ids, lexicographically sorted."""
        return "".join(" ".join(map(str, path)) + "\n" for path in self.sorted())


class SearchGuard:
    """Result-count limit and wall-clock deadline shared by one search.

    Attributes
    ----------
    max_results (int): Overflow threshold.
    deadline (float | None): `time.monotonic()` value after which to stop.
    query (Query | None): Query named in raised errors.
    emitted (int): Paths handed to `emit`, repeats included.
    """

    TICK_INTERVAL = 256

    def __init__(
        self,
        max_results: int = DEFAULT_MAX_RESULTS,
        deadline: float | None = None,
        query: Query | None = None,
    ) -> None:
        """Initialize the guard."""
        self.max_results = max_results
        self.deadline = deadline
        self.query = query
        self.emitted = 0
        self._ticks = 0

    def emit(self, results: ResultSet, path: Path) -> None:
        """Record a result path.

        Raises
        ------
        ResultOverflowError: If the result set grows past `max_results`.
        """
        self.emitted += 1
        results.add(path)
        if len(results) > self.max_results:
            raise ResultOverflowError(self.max_results, self.query)

    def tick(self) -> None:
        """Count one search step and check the deadline every few hundred steps.

        Raises
        ------
        QueryTimeoutError: If the deadline has passed.
        """
        self._ticks += 1
        if (
            self.deadline is not None
            and self._ticks % self.TICK_INTERVAL == 0
            and time.monotonic() > self.deadline
        ):
            raise QueryTimeoutError(self.query, self.deadline)


class Enumerator(metaclass=ABCMeta):
    """Interface for dependency injection of different enumeration algorithms.

    A run is split into `prepare` (timed as preprocessing) and `search`
    (timed as query processing). Instances hold per-run state and are not
    shared between concurrent queries.
    """

    name: ClassVar[str]

    def __init__(self, max_results: int = DEFAULT_MAX_RESULTS) -> None:
        """Initialize the enumerator."""
        self.max_results = max_results

    @abstractmethod
    def prepare(self, graph: Graph, query: Query) -> Any:  # noqa: ANN401
        """Compute whatever the search needs for `query`."""
        raise NotImplementedError

    @abstractmethod
    def search(
        self,
        graph: Graph,
        query: Query,
        prepared: Any,  # noqa: ANN401
        guard: SearchGuard,
    ) -> ResultSet:
        """Enumerate the result paths, in original vertex ids."""
        raise NotImplementedError

    def stats(self) -> dict[str, int]:
        """Counters of the last search; empty when the algorithm keeps none."""
        return {}

    def run(
        self,
        graph: Graph,
        query: Query,
        deadline: float | None = None,
    ) -> ResultSet:
        """Prepare and search in one call."""
        guard = SearchGuard(self.max_results, deadline, query)
        return self.search(graph, query, self.prepare(graph, query), guard)
