"""Generate a query file for a graph."""
import logging
from argparse import Namespace

from hoppath.bench.queries import gen_queries
from hoppath.mode.common import graph_from_arguments, write_output


async def gen(arguments: Namespace) -> None:
    """Draw --count reachable (s, t) pairs and write them as a query file."""
    graph = graph_from_arguments(arguments)
    query_set = gen_queries(graph, arguments.k, arguments.count, arguments.seed)
    logging.info(f"Writing {len(query_set)} queries")
    write_output(query_set.to_text(), arguments.output)
