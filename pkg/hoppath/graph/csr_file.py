"""Binary CSR files.

Layout: the magic bytes `KPE1`, then vertex_count and edge_count, then the
offsets array and the targets array. Every integer is an 8-byte little-endian
unsigned value.
"""
from pathlib import Path

import numpy as np

from hoppath.graph.csr import Graph, GraphError

MAGIC = b"KPE1"
_WORD = np.dtype("<u8")
_HEADER_BYTES = len(MAGIC) + 2 * _WORD.itemsize


class GraphFormatError(GraphError):
    """Error raised when a binary CSR file is malformed."""


def is_binary_csr(path: str | Path) -> bool:
    """Check whether a file starts with the binary CSR magic bytes."""
    with Path(path).open("rb") as file:
        return file.read(len(MAGIC)) == MAGIC


def encode_graph(graph: Graph) -> bytes:
    """Serialise a graph to the binary CSR layout."""
    header = np.array([graph.vertex_count, graph.edge_count], dtype=_WORD)
    return b"".join(
        [
            MAGIC,
            header.tobytes(),
            graph.offsets.astype(_WORD).tobytes(),
            graph.targets.astype(_WORD).tobytes(),
        ],
    )


def decode_graph(data: bytes) -> Graph:
    """Deserialise a graph from the binary CSR layout.

    Raises
    ------
    GraphFormatError: Wrong magic, truncated or oversized payload.
    """
    if len(data) < _HEADER_BYTES or data[: len(MAGIC)] != MAGIC:
        msg = "not a binary CSR file (bad magic or short header)"
        raise GraphFormatError(msg)
    vertex_count, edge_count = (
        int(value)
        for value in np.frombuffer(data, dtype=_WORD, count=2, offset=len(MAGIC))
    )
    expected = _HEADER_BYTES + (vertex_count + 1 + edge_count) * _WORD.itemsize
    if len(data) != expected:
        msg = f"expected {expected} bytes for {vertex_count} vertices and "
        msg += f"{edge_count} edges, got {len(data)}"
        raise GraphFormatError(msg)
    offsets = np.frombuffer(
        data,
        dtype=_WORD,
        count=vertex_count + 1,
        offset=_HEADER_BYTES,
    )
    targets = np.frombuffer(
        data,
        dtype=_WORD,
        count=edge_count,
        offset=_HEADER_BYTES + (vertex_count + 1) * _WORD.itemsize,
    )
    try:
        return Graph(vertex_count, offsets.astype(np.int64), targets.astype(np.int64))
    except GraphError as ex:
        raise GraphFormatError(f"inconsistent CSR arrays: {ex}") from ex


def write_graph(graph: Graph, path: str | Path) -> None:
    """Write a graph to a binary CSR file."""
    Path(path).write_bytes(encode_graph(graph))


def read_graph(path: str | Path) -> Graph:
    """Read a graph from a binary CSR file."""
    return decode_graph(Path(path).read_bytes())
