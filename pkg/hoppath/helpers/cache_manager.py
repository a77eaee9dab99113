"""Manage the binary graph cache.

Parsing a large edge list dominates start-up time, so parsed graphs can be kept
as binary CSR files in the state directory and reused while the source file
and the ingest options stay unchanged. The cache is managed by the
GraphCacheManager class; `load_graph` is the single entry point the
subcommands use to obtain a graph.
"""
import hashlib
import logging
from pathlib import Path

from hoppath.graph.csr import EdgeList, Graph, build_graph
from hoppath.graph.csr_file import GraphFormatError, is_binary_csr, read_graph, write_graph
from hoppath.parsers import parse_edge_list


class GraphCacheManager:
    """A class to manage cached binary graphs.

    Methods
    -------
    __init__(self, base_dir: str | Path) -> None
        Constructor to initialize GraphCacheManager.
    get(self, source: Path, options: str) -> Graph | None
        Load the cached graph for a source file, if still current.
    put(self, source: Path, options: str, graph: Graph) -> Path
        Store a graph for a source file.
    """

    def __init__(self, base_dir: str | Path) -> None:
        """Initialize the GraphCacheManager.

        Parameters
        ----------
        base_dir : str | Path
            The directory holding the cache files. Created on first write.

        """
        self.base_dir = Path(base_dir)

    def _get_file_path(self, source: Path, options: str) -> Path:
        """Get the cache file path for a source file and ingest options.

        The name embeds a digest of the resolved path, size, modification time
        and options, so a changed source never matches a stale entry.
        """
        status = source.stat()
        key = f"{source.resolve()}|{status.st_size}|{status.st_mtime_ns}|{options}"
        digest = hashlib.sha256(key.encode("utf-8")).hexdigest()[:16]
        return self.base_dir / f"{source.stem}-{digest}.csr"

    def get(self, source: Path, options: str) -> Graph | None:
        """Load the cached graph for `source`, or None on a miss."""
        file_path = self._get_file_path(source, options)
        if not file_path.exists():
            return None
        try:
            graph = read_graph(file_path)
        except GraphFormatError as ex:
            logging.warning(f"Ignoring corrupt cache file {file_path}: {ex}")
            return None
        logging.debug(f"Loaded cached graph {file_path}")
        return graph

    def put(self, source: Path, options: str, graph: Graph) -> Path:
        """Write `graph` to the cache and return the cache file path."""
        self.base_dir.mkdir(parents=True, exist_ok=True)
        file_path = self._get_file_path(source, options)
        write_graph(graph, file_path)
        logging.debug(f"Wrote cached graph {file_path}")
        return file_path


def load_graph(
    path: str | Path,
    *,
    keep_self_loops: bool = False,
    deduplicate: bool = True,
    vertex_count: int | None = None,
    cache: GraphCacheManager | None = None,
) -> Graph:
    """Load a graph from an edge list or a binary CSR file.

    Binary files are recognised by their magic bytes and read as they are;
    the ingest options only apply to edge lists.

    Raises
    ------
    FileNotFoundError: If `path` does not exist.
    ParseError: If the edge list is malformed.
    GraphError: If the edges do not form a valid graph.
    """
    path = Path(path)
    if is_binary_csr(path):
        graph = read_graph(path)
    else:
        options = f"loops={keep_self_loops} dedup={deduplicate} n={vertex_count}"
        graph = cache.get(path, options) if cache is not None else None
        if graph is None:
            with path.open(encoding="utf-8") as file:
                edges = parse_edge_list(file, vertex_count)
            graph = build_graph(
                EdgeList(
                    edges.edges,
                    edges.declared_vertex_count,
                    keep_self_loops=keep_self_loops,
                    deduplicate=deduplicate,
                ),
            )
            if cache is not None:
                cache.put(path, options, graph)
    logging.info(f"Loaded {path}: {graph.stats()}")
    return graph
