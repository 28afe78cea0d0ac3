# Copyright 2024 The rs-reencoding Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License"). You
# may not use this file except in compliance with the License. A copy of
# the License is located at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# or in the "license" file accompanying this file. This file is
# distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF
# ANY KIND, either express or implied. See the License for the specific
# language governing permissions and limitations under the License.
"""The ``rsbench`` command line."""
import argparse
import asyncio
import logging
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from rs_reencoding import __version__
from rs_reencoding.bench import (
    BenchConfig,
    DEFAULT_ITERATIONS,
    run,
    run_async,
    verify_exhaustive,
    write_csv,
)
from rs_reencoding.example import print_example
from rs_reencoding.exceptions import ReedSolomonError

logger = logging.getLogger(__name__)

_LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def parse_int_list(text: str) -> List[int]:
    """Parse ``4..8`` (inclusive) or ``4,5,6``."""
    text = text.strip()
    if ".." in text:
        low, high = text.split("..", 1)
        return list(range(int(low), int(high) + 1))
    return [int(part) for part in text.split(",") if part.strip()]


def parse_rates(text: str) -> List[Fraction]:
    return [Fraction(part.strip()) for part in text.split(",") if part.strip()]


def parse_names(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rsbench",
        description="Reed-Solomon re-encoding benchmarks and worked example.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Repeat for more logging (INFO, then DEBUG).",
    )
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    bench = commands.add_parser("run", help="Time Welch-Berlekamp decodes.")
    bench.add_argument("--m", type=parse_int_list, default=None, help="e.g. 4..8")
    bench.add_argument(
        "--rates", type=parse_rates, default=None, help="e.g. 1/2,5/8,3/4,7/8"
    )
    bench.add_argument(
        "--engines", type=parse_names, default=None, help="e.g. linsys,koetter"
    )
    bench.add_argument(
        "--modes", type=parse_names, default=None, help="e.g. none,original,revisited"
    )
    bench.add_argument("--iters", type=int, default=DEFAULT_ITERATIONS)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument(
        "--errors", type=int, default=None, help="Errors per trial, default t."
    )
    bench.add_argument("--jobs", type=int, default=1, help="Worker processes.")
    bench.add_argument(
        "--keep-going",
        action="store_true",
        help="Count wrong decodes instead of stopping at the first one.",
    )
    bench.add_argument("--out", default=None, help="CSV file, default stdout.")

    commands.add_parser("example", help="Print the RS[7,2] worked example.")

    verify = commands.add_parser(
        "verify", help="Decode every correctable error pattern of RS[7,2]."
    )
    verify.add_argument("--engines", type=parse_names, default=None)
    verify.add_argument("--modes", type=parse_names, default=None)
    return parser


def _run(args: argparse.Namespace) -> int:
    config = BenchConfig(
        m_values=args.m,
        rates=args.rates,
        engines=args.engines,
        modes=args.modes,
        iterations=args.iters,
        seed=args.seed,
        error_weight=args.errors,
        jobs=args.jobs,
        fail_fast=not args.keep_going,
    )
    if config.jobs > 1:
        rows = asyncio.run(run_async(config))
    else:
        rows = run(config)
    if args.out is None:
        write_csv(rows, sys.stdout)
    else:
        with open(args.out, "w", newline="", encoding="utf-8") as stream:
            write_csv(rows, stream)
    return 1 if any(row.failures for row in rows) else 0


def _verify(args: argparse.Namespace) -> int:
    counts = verify_exhaustive(engines=args.engines, modes=args.modes)
    for (engine, mode), cases in counts.items():
        print(f"{engine}/{mode}: {cases} decodes ok")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=_LOG_LEVELS[min(args.verbose, len(_LOG_LEVELS) - 1)],
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )
    try:
        if args.command == "run":
            return _run(args)
        if args.command == "example":
            print_example(sys.stdout)
            return 0
        return _verify(args)
    except ReedSolomonError as e:
        logger.error("%s", e)
        print(f"rsbench: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
