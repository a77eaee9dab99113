"""argparser.py - Parses command line arguments."""
import argparse


def _common_arguments() -> argparse.ArgumentParser:
    """Flags every subcommand accepts."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        "-c",
        "--config",
        required=False,
        type=str,
        help="Optionally provide a path to a JSON file containing configuration "
        "options. Keys are flag names without the leading dashes and override "
        "values given on the command line.",
    )
    parser.add_argument(
        "--log-level",
        required=False,
        type=int,
        default=20,
        help="Numeric logging level: 10 debug, 20 info, 30 warning, 40 error, "
        "50 critical",
    )
    parser.add_argument(
        "--state-dir",
        required=False,
        default="artifacts",
        help="Directory to store persistent files such as the graph cache",
    )
    parser.add_argument(
        "--cache-graphs",
        required=False,
        action="store_true",
        help="Keep parsed edge lists as binary CSR files in --state-dir and reuse "
        "them while the source file is unchanged",
    )
    return parser


def _graph_arguments() -> argparse.ArgumentParser:
    """Flags selecting and ingesting the input graph."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        "--graph",
        required=False,
        help="Required: An edge list (`from to` per line, `#`/`%` comments) or "
        "a binary CSR file",
    )
    parser.add_argument(
        "--vertex-count",
        required=False,
        type=int,
        default=None,
        help="Declare the vertex count of an edge list when isolated vertices "
        "lie above the largest id",
    )
    parser.add_argument(
        "--keep-self-loops",
        required=False,
        action="store_true",
        help="Keep (v, v) edges instead of dropping them",
    )
    parser.add_argument(
        "--keep-duplicates",
        required=False,
        action="store_true",
        help="Keep parallel edges instead of collapsing them",
    )
    return parser


def _query_arguments() -> argparse.ArgumentParser:
    """Flags selecting or generating the queries."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        "--queries",
        required=False,
        default=None,
        help="A query file (`s t k` per line). If omitted, --count queries are "
        "generated with --k and --seed",
    )
    parser.add_argument(
        "--k",
        required=False,
        type=int,
        default=4,
        help="Hop constraint of generated queries",
    )
    parser.add_argument(
        "--count",
        required=False,
        type=int,
        default=10,
        help="Number of queries to generate",
    )
    parser.add_argument(
        "--seed",
        required=False,
        type=int,
        default=0,
        help="Random seed for query generation",
    )
    return parser


def _engine_arguments() -> argparse.ArgumentParser:
    """Flags configuring the PEFP tier model."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        "--batching",
        required=False,
        choices=["dfs", "fifo"],
        default="dfs",
        help="Take PEFP batches from the buffer top (dfs) or bottom (fifo). "
        "Applies to the `pefp` algorithm; `pefp-fifo` always uses fifo",
    )
    parser.add_argument(
        "--buffer-cap",
        required=False,
        type=int,
        default=4096,
        help="Most intermediate paths the buffer holds before spilling",
    )
    parser.add_argument(
        "--theta1",
        required=False,
        type=int,
        default=None,
        help="Paths moved per spill segment and per refill. Defaults to half of "
        "--buffer-cap",
    )
    parser.add_argument(
        "--theta2",
        required=False,
        type=int,
        default=1024,
        help="Most successor slots expanded per batch",
    )
    parser.add_argument(
        "--flush",
        required=False,
        choices=["segment", "all"],
        default="segment",
        help="Spill the oldest --theta1 paths (segment) or the whole buffer (all)",
    )
    parser.add_argument(
        "--check-invariants",
        required=False,
        action="store_true",
        help="Check capacity and stored-path invariants while enumerating",
    )
    return parser


def _suite_arguments(algorithms: str, repetitions: int) -> argparse.ArgumentParser:
    """Flags configuring a benchmark suite."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        "--algorithms",
        required=False,
        default=algorithms,
        help="Comma-separated list of oracle, bcdfs, join, pefp, pefp-fifo, "
        "pefp-nopre",
    )
    parser.add_argument(
        "--repetitions",
        required=False,
        type=int,
        default=repetitions,
        help="Runs per algorithm and query; reported times are averages",
    )
    parser.add_argument(
        "--jobs",
        required=False,
        type=int,
        default=1,
        help="Queries processed concurrently",
    )
    parser.add_argument(
        "--timeout-ms",
        required=False,
        type=int,
        default=None,
        help="Per-run time limit; a run past it is reported with status timeout",
    )
    parser.add_argument(
        "--max-results",
        required=False,
        type=int,
        default=10_000_000,
        help="Per-run result limit; a run past it is reported with status overflow",
    )
    parser.add_argument(
        "--format",
        required=False,
        choices=["text", "jsonl"],
        default="text",
        help="Report format",
    )
    parser.add_argument(
        "--emit-paths",
        required=False,
        default=None,
        help="Write every result path to this file",
    )
    parser.add_argument(
        "--dump-pre",
        required=False,
        default=None,
        help="Write the Pre-BFS diagnostics of every query to this file",
    )
    parser.add_argument(
        "--no-timing",
        required=False,
        action="store_true",
        help="Zero every time field, for reproducible reports",
    )
    return parser


def _output_arguments() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        "--output",
        required=False,
        default=None,
        help="Write the result here instead of stdout",
    )
    return parser


def build_parser() -> argparse.ArgumentParser:
    """Build the parser with one subcommand per mode."""
    argparser = argparse.ArgumentParser(
        description="Enumerate hop-constrained s-t simple paths",
    )
    subparsers = argparser.add_subparsers(dest="mode", required=True)
    common, graph, queries = _common_arguments(), _graph_arguments(), _query_arguments()
    engine, output = _engine_arguments(), _output_arguments()

    subparsers.add_parser(
        "gen",
        parents=[common, graph, queries, output],
        help="Generate a query file",
    )
    run = subparsers.add_parser(
        "run",
        parents=[common, graph, queries, engine, _suite_arguments("pefp", 3), output],
        help="Run and time algorithms over a query set",
    )
    run.add_argument(
        "--stats",
        required=False,
        default=None,
        help="Write the counters of every run as key=value blocks to this file",
    )
    subparsers.add_parser(
        "check",
        parents=[
            common,
            graph,
            queries,
            engine,
            _suite_arguments("oracle,bcdfs,join,pefp,pefp-fifo", 1),
            output,
        ],
        help="Check that algorithms agree on every query",
    )
    subparsers.add_parser(
        "pre",
        parents=[common, graph, queries, output],
        help="Dump Pre-BFS diagnostics for every query",
    )
    convert = subparsers.add_parser(
        "convert",
        parents=[common, graph, output],
        help="Convert between edge lists and binary CSR files",
    )
    convert.add_argument(
        "--to",
        required=False,
        choices=["csr", "edges"],
        default=None,
        help="Output format. Defaults to the opposite of the input format",
    )
    return argparser


def parse_arguments(argv: list[str] | None = None) -> argparse.Namespace:
    """Parse command line arguments."""
    return build_parser().parse_args(argv)
