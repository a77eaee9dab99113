"""Fixtures shared by the test modules."""
from pathlib import Path

import pytest

from hoppath.graph.csr import Graph
from hoppath.graph.generators import chain, diamond
from hoppath.preprocess.pre_bfs import Query
from tests.support import graph_of


@pytest.fixture
def diamond_graph() -> Graph:
    """0 -> {1, 2} -> 3."""
    return diamond()


@pytest.fixture
def diamond_query() -> Query:
    """All 0-3 paths within 2 hops."""
    return Query(0, 3, 2)


@pytest.fixture
def chain_graph() -> Graph:
    """0 -> 1 -> 2 -> 3."""
    return chain(3)


@pytest.fixture
def triangle_graph() -> Graph:
    """0 -> 1 -> 2 plus the shortcut 0 -> 2."""
    return graph_of([(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def trap_graph() -> Graph:
    """A dead-end subtree below vertex 2 that is entered twice.

    s=0, u1=1, u2=2, u3=3, t=6; 2 leads only into the dead end 4 -> 5.
    """
    return graph_of([(0, 1), (1, 2), (1, 3), (3, 2), (2, 4), (4, 5), (3, 6)])


@pytest.fixture
def ancestor_block_graph() -> Graph:
    """A subtree that fails only because it runs into an ancestor.

    s=0, w=1, x=2, v=3, t=4. Below v, the only way out is w, which is on
    the stack during the first visit of v but not the second.
    """
    return graph_of([(0, 1), (0, 2), (1, 3), (2, 3), (3, 1), (1, 4)])


@pytest.fixture
def edge_list_file(tmp_path: Path) -> Path:
    """The diamond written as an edge list file."""
    path = tmp_path / "diamond.txt"
    path.write_text("# diamond\n0 1\n0 2\n1 3\n2 3\n", encoding="utf-8")
    return path
