"""Test the graph cache."""
import os
from unittest.mock import patch

from hoppath.graph.csr_file import write_graph
from hoppath.graph.generators import diamond
from hoppath.helpers.cache_manager import GraphCacheManager, load_graph


class TestGraphCacheManager:
    """Test the GraphCacheManager class."""

    def test_miss_then_hit(self, tmp_path, edge_list_file) -> None:  # noqa: ANN001
        """Test that a stored graph is found again."""
        cache = GraphCacheManager(tmp_path / "state")
        assert cache.get(edge_list_file, "opts") is None
        stored = cache.put(edge_list_file, "opts", diamond())
        assert stored.exists()
        assert cache.get(edge_list_file, "opts") == diamond()

    def test_options_are_part_of_the_key(self, tmp_path, edge_list_file) -> None:  # noqa: ANN001
        """Test that other ingest options miss."""
        cache = GraphCacheManager(tmp_path)
        cache.put(edge_list_file, "a", diamond())
        assert cache.get(edge_list_file, "b") is None

    def test_changed_source_misses(self, tmp_path, edge_list_file) -> None:  # noqa: ANN001
        """Test that editing the source invalidates the entry."""
        cache = GraphCacheManager(tmp_path / "state")
        cache.put(edge_list_file, "opts", diamond())
        edge_list_file.write_text("0 1\n1 2\n0 2\n0 3\n", encoding="utf-8")
        status = edge_list_file.stat()
        os.utime(edge_list_file, ns=(status.st_atime_ns, status.st_mtime_ns + 10**9))
        assert cache.get(edge_list_file, "opts") is None

    def test_corrupt_entry(self, tmp_path, edge_list_file) -> None:  # noqa: ANN001
        """Test that a corrupt cache file is ignored."""
        cache = GraphCacheManager(tmp_path)
        stored = cache.put(edge_list_file, "opts", diamond())
        stored.write_bytes(b"KPE1 broken")
        assert cache.get(edge_list_file, "opts") is None


class TestLoadGraph:
    """Test load_graph."""

    def test_edge_list(self, edge_list_file) -> None:  # noqa: ANN001
        """Test loading a text edge list."""
        assert load_graph(edge_list_file) == diamond()

    def test_binary(self, tmp_path) -> None:  # noqa: ANN001
        """Test that binary files are recognised by their magic."""
        path = tmp_path / "diamond.bin"
        write_graph(diamond(), path)
        assert load_graph(path) == diamond()

    def test_declared_vertex_count(self, edge_list_file) -> None:  # noqa: ANN001
        """Test padding with isolated vertices."""
        assert load_graph(edge_list_file, vertex_count=6).vertex_count == 6

    def test_cache_skips_parsing(self, tmp_path, edge_list_file) -> None:  # noqa: ANN001
        """Test that the second load comes from the cache."""
        cache = GraphCacheManager(tmp_path / "state")
        first = load_graph(edge_list_file, cache=cache)
        with patch("hoppath.helpers.cache_manager.parse_edge_list") as parse:
            second = load_graph(edge_list_file, cache=cache)
        parse.assert_not_called()
        assert first == second
