"""An ordered set implementation over a dict."""
from collections.abc import Hashable, Iterable, Iterator
from typing import Generic, TypeVar

T = TypeVar("T", bound=Hashable)


class OrderedSet(Generic[T]):
    """An ordered set implementation over a dict.

    Attributes
    ----------
    _dict (dict[T, None]): The dict whose keys, in insertion order, are the set.
    """

    def __init__(
        self: "OrderedSet[T]",
        iterable: Iterable[T] | None = None,
    ) -> None:
        """Initialize the ordered set.

        Args:
        ----
        iterable (Iterable[T] | None, optional): \
            The items to initialize the ordered set with. \
            Defaults to None.
        """
        self._dict: dict[T, None] = {}
        if iterable is not None:
            if isinstance(iterable, str | bytes):
                msg = "Invalid type for iterable. Expected a collection of items."
                raise TypeError(msg)
            self.update(iterable)

    def add(self: "OrderedSet[T]", item: T) -> bool:
        """Add the given item to the ordered set.

        Args:
        ----
        item (T): The item to add.

        Returns:
        -------
        bool: True if the item was new, False if it was already present.
        """
        if item in self._dict:
            return False
        self._dict[item] = None
        return True

    def update(self: "OrderedSet[T]", iterable: Iterable[T]) -> None:
        """Update the ordered set with the given iterable."""
        for item in iterable:
            self.add(item)

    def __contains__(self: "OrderedSet[T]", item: object) -> bool:
        """Check if the given item is in the ordered set."""
        return item in self._dict

    def __iter__(self: "OrderedSet[T]") -> Iterator[T]:
        """Iterate in insertion order."""
        return iter(self._dict)

    def __len__(self: "OrderedSet[T]") -> int:
        """Get the length of the ordered set."""
        return len(self._dict)

    def __eq__(self: "OrderedSet[T]", other: object) -> bool:
        """Compare as sets; insertion order is ignored."""
        if isinstance(other, OrderedSet):
            return self._dict.keys() == other._dict.keys()
        if isinstance(other, set | frozenset):
            return self._dict.keys() == other
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]
