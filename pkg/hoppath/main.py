"""hoppath - enumerate hop-constrained s-t simple paths."""

import json
import logging
import sys
from argparse import Namespace
from collections.abc import Awaitable, Callable
from datetime import UTC, datetime
from pathlib import Path
from typing import Any

from hoppath.bench.queries import QueryGenerationError
from hoppath.bench.suite import EqualityGateError
from hoppath.helpers import helpers
from hoppath.mode import check, convert, gen, pre, run
from hoppath.parsers import ParseError
from hoppath.pefp.tiers import TierInvariantError

MODES: dict[str, Callable[[Namespace], Awaitable[Any]]] = {
    "gen": gen,
    "run": run,
    "check": check,
    "pre": pre,
    "convert": convert,
}


async def main(arguments: Namespace) -> None:
    """Run hoppath."""
    start = datetime.now(UTC)

    if arguments.config:
        if Path(arguments.config).exists():
            with Path(arguments.config).open(encoding="utf-8") as file:
                config = json.load(file)

            for key in config:
                setattr(arguments, key.lower().replace("-", "_"), config[key])

        else:
            logging.critical(f"Config file {arguments.config} doesn't exist")
            sys.exit(1)

    helpers.setup_logging(arguments.log_level)

    if arguments.graph is None:
        logging.critical("You must supply a graph with --graph")
        sys.exit(1)

    logging.info(f"Starting hoppath {arguments.mode}")

    try:
        await MODES[arguments.mode](arguments)
    except EqualityGateError as ex:
        logging.critical(f"Equality gate failed: {ex}")
        sys.exit(1)
    except (
        ParseError,
        QueryGenerationError,
        TierInvariantError,
        OSError,
        ValueError,
    ) as ex:
        logging.critical(f"{type(ex).__name__}: {ex}")
        sys.exit(1)

    logging.info(f"Processing finished in {datetime.now(UTC) - start}.")
