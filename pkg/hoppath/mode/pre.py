"""Dump Pre-BFS diagnostics."""
import logging
from argparse import Namespace

from hoppath.bench.queries import QuerySet
from hoppath.graph.csr import Graph
from hoppath.mode.common import graph_from_arguments, queries_from_arguments, write_output
from hoppath.preprocess.pre_bfs import dump_preprocess, pre_bfs


def render_preprocessing(graph: Graph, query_set: QuerySet) -> str:
    """Concatenate the Pre-BFS tables of every query."""
    return "".join(dump_preprocess(pre_bfs(graph, query)) for query in query_set.queries)


async def pre(arguments: Namespace) -> None:
    """Write the vertex mapping and barrier table of every query."""
    graph = graph_from_arguments(arguments)
    query_set = queries_from_arguments(arguments, graph)
    logging.info(f"Preprocessing {len(query_set)} queries")
    write_output(render_preprocessing(graph, query_set), arguments.output)
