"""Convert between edge lists and binary CSR files."""
import logging
from argparse import Namespace
from pathlib import Path

from hoppath.graph.csr_file import is_binary_csr, write_graph
from hoppath.mode.common import graph_from_arguments, write_output
from hoppath.parsers import format_edge_list


async def convert(arguments: Namespace) -> None:
    """Read --graph and write it to --output in the other format.

    Raises
    ------
    ValueError: If binary output has no --output file.
    """
    target = arguments.to
    if target is None:
        target = "edges" if is_binary_csr(arguments.graph) else "csr"
    graph = graph_from_arguments(arguments)
    if target == "csr":
        if arguments.output is None:
            msg = "binary output needs --output"
            raise ValueError(msg)
        write_graph(graph, arguments.output)
        logging.info(
            f"Wrote {arguments.output} ({Path(arguments.output).stat().st_size} bytes)",
        )
    else:
        write_output(format_edge_list(graph), arguments.output)
    logging.info(f"Converted graph: {graph.stats()}")
