#!/usr/bin/env python3
"""hoppath - enumerate hop-constrained s-t simple paths."""

import asyncio

from argparser import parse_arguments
from hoppath import main

if __name__ == "__main__":
    asyncio.run(main(parse_arguments()))
