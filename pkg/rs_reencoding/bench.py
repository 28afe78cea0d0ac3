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
"""Correctness-checked Welch-Berlekamp timing benchmarks.

A cell is one (m, k, engine, mode) combination. Every trial draws a random
message, injects errors and checks the decode; a wrong decode raises
:class:`CellFailure` carrying the trial seed.
"""
import asyncio
import csv
import hashlib
import itertools
import logging
import random
import time
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from fractions import Fraction
from typing import (
    Dict,
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    TextIO,
    Tuple,
)

from rs_reencoding.decoders import MODES, RSCode, wb_decode
from rs_reencoding.exceptions import (
    BadDimension,
    BadWeight,
    CellFailure,
    InvalidConfig,
    OracleMismatch,
)
from rs_reencoding.gf2m import MAX_DEGREE, MIN_DEGREE, Field, FieldElement
from rs_reencoding.interpolation import ENGINES, get_engine
from rs_reencoding.polyring import Poly

logger = logging.getLogger(__name__)

DEFAULT_M = (4, 5, 6, 7, 8)
DEFAULT_RATES = (Fraction(1, 2), Fraction(5, 8), Fraction(3, 4), Fraction(7, 8))
DEFAULT_ENGINES = ("linsys", "koetter")
DEFAULT_ITERATIONS = 100

CSV_HEADER = (
    "m",
    "n",
    "k",
    "engine",
    "mode",
    "iters",
    "total_s",
    "mean_us",
    "failures",
    "field_ops",
)


class Cell(NamedTuple):
    m: int
    k: int
    engine: str
    mode: str


class BenchConfig:
    """Grid and trial settings of a benchmark run.

    :param m_values: Extension degrees; each gives n = 2^m - 1.
    :param rates: Code rates; k = round(rate * (n + 1)).
    :param engines: Interpolation engine names.
    :param modes: Re-encoding modes.
    :param iterations: Decodes per cell.
    :param seed: Base seed every trial seed is derived from.
    :param error_weight: Errors injected per trial. Defaults to t.
    :param jobs: Worker processes for :func:`run_async`.
    :param fail_fast: Raise on the first wrong decode instead of counting.
    """

    def __init__(
        self,
        *,
        m_values: Optional[Sequence[int]] = None,
        rates: Optional[Sequence[Fraction]] = None,
        engines: Optional[Sequence[str]] = None,
        modes: Optional[Sequence[str]] = None,
        iterations: int = DEFAULT_ITERATIONS,
        seed: int = 0,
        error_weight: Optional[int] = None,
        jobs: int = 1,
        fail_fast: bool = True,
    ):
        if m_values is None:
            m_values = DEFAULT_M
        if rates is None:
            rates = DEFAULT_RATES
        if engines is None:
            engines = DEFAULT_ENGINES
        if modes is None:
            modes = MODES
        self.m_values: Tuple[int, ...] = tuple(m_values)
        self.rates: Tuple[Fraction, ...] = tuple(Fraction(r) for r in rates)
        self.engines: Tuple[str, ...] = tuple(engines)
        self.modes: Tuple[str, ...] = tuple(modes)
        self.iterations: int = iterations
        self.seed: int = seed
        self.error_weight: Optional[int] = error_weight
        self.jobs: int = jobs
        self.fail_fast: bool = fail_fast
        self._validate()

    def _validate(self) -> None:
        if not self.m_values or not self.rates or not self.engines or not self.modes:
            raise InvalidConfig("Benchmark grid must not be empty")
        for m in self.m_values:
            if not MIN_DEGREE <= m <= MAX_DEGREE:
                raise InvalidConfig(f"m={m} is outside [{MIN_DEGREE}, {MAX_DEGREE}]")
            n = (1 << m) - 1
            for rate in self.rates:
                k = self.dimension(m, rate)
                if not 1 <= k < n:
                    raise InvalidConfig(
                        f"Rate {rate} gives k={k} for n={n}, need 1 <= k < n"
                    )
        for engine in self.engines:
            if engine not in ENGINES:
                raise InvalidConfig(f"Unknown engine {engine!r}")
        for mode in self.modes:
            if mode not in MODES:
                raise InvalidConfig(f"Unknown mode {mode!r}")
        if self.iterations < 1:
            raise InvalidConfig(f"iterations must be positive, got {self.iterations}")
        if self.error_weight is not None and self.error_weight < 0:
            raise InvalidConfig(f"Negative error weight {self.error_weight}")
        if self.jobs < 1:
            raise InvalidConfig(f"jobs must be positive, got {self.jobs}")

    @staticmethod
    def dimension(m: int, rate: Fraction) -> int:
        return round(rate * (1 << m))

    def cells(self) -> Iterator[Cell]:
        """Cells in grid order: m, then rate, then engine, then mode."""
        for m in self.m_values:
            for rate in self.rates:
                k = self.dimension(m, rate)
                for engine in self.engines:
                    for mode in self.modes:
                        yield Cell(m, k, engine, mode)


class BenchRow:
    def __init__(
        self,
        m: int,
        n: int,
        k: int,
        engine: str,
        mode: str,
        iterations: int,
        total_s: float,
        failures: int,
        field_ops: int,
    ):
        self.m = m
        self.n = n
        self.k = k
        self.engine = engine
        self.mode = mode
        self.iterations = iterations
        self.total_s = total_s
        self.failures = failures
        self.field_ops = field_ops

    @property
    def mean_us(self) -> float:
        return self.total_s / self.iterations * 1e6

    def __repr__(self):
        return (
            f"BenchRow(m={self.m}, k={self.k}, engine={self.engine!r}, "
            f"mode={self.mode!r}, mean_us={self.mean_us:.3f}, "
            f"field_ops={self.field_ops})"
        )

    def as_csv(self) -> List[str]:
        return [
            str(self.m),
            str(self.n),
            str(self.k),
            self.engine,
            self.mode,
            str(self.iterations),
            f"{self.total_s:.3f}",
            f"{self.mean_us:.3f}",
            str(self.failures),
            str(self.field_ops),
        ]


def derive_seed(
    base: int, m: int, k: int, engine: str, mode: str, trial: int
) -> int:
    """A 64-bit seed for one trial, independent of every other cell."""
    key = f"{base}:{m}:{k}:{engine}:{mode}:{trial}".encode("ascii")
    return int.from_bytes(hashlib.blake2b(key, digest_size=8).digest(), "big")


def inject_errors(
    field: Field, codeword: Sequence[FieldElement], weight: int, seed: int
) -> List[FieldElement]:
    """Replace ``weight`` distinct positions by different random symbols."""
    n = len(codeword)
    if not 0 <= weight <= n:
        raise BadWeight(weight, n)
    rng = random.Random(seed)
    word = [int(c) for c in codeword]
    for position in rng.sample(range(n), weight):
        word[position] ^= rng.randrange(1, field.size)
    return word


def apply_error_pattern(
    field: Field,
    codeword: Sequence[FieldElement],
    errors: Mapping[int, FieldElement],
) -> List[FieldElement]:
    """Add the error value ``errors[i]`` to position i of the codeword."""
    word = [int(c) for c in codeword]
    for position, value in errors.items():
        if not 0 <= position < len(word):
            raise BadDimension(f"Error position {position} outside [0, {len(word)})")
        word[position] = field.add(word[position], value)
    return word


def run_cell(config: BenchConfig, cell: Cell) -> BenchRow:
    field = Field(cell.m)
    code = RSCode.primitive(field, cell.k)
    engine = get_engine(cell.engine)
    if cell.mode != "none":
        code.plan  # built once, outside the timed decodes
    weight = code.t if config.error_weight is None else config.error_weight
    total = 0.0
    ops = 0
    failures = 0
    for trial in range(config.iterations):
        seed = derive_seed(config.seed, cell.m, cell.k, cell.engine, cell.mode, trial)
        rng = random.Random(seed)
        message = code.ring.random(rng, code.k)
        codeword = code.encode(message)
        received = inject_errors(field, codeword, weight, rng.getrandbits(64))
        start = time.perf_counter()
        outcome = wb_decode(code, received, engine, cell.mode)
        total += time.perf_counter() - start
        ops += outcome.field_ops
        if not outcome.success or outcome.message != message:
            if config.fail_fast:
                raise CellFailure(seed, cell.m, cell.k, cell.engine, cell.mode, trial)
            failures += 1
    row = BenchRow(
        cell.m,
        code.n,
        cell.k,
        cell.engine,
        cell.mode,
        config.iterations,
        total,
        failures,
        ops,
    )
    logger.info(
        "RS[%s,%s] %s/%s: %.3f us/decode, %s field ops",
        row.n,
        row.k,
        row.engine,
        row.mode,
        row.mean_us,
        row.field_ops,
    )
    return row


def run(config: BenchConfig) -> List[BenchRow]:
    return [run_cell(config, cell) for cell in config.cells()]


async def run_async(
    config: BenchConfig, executor: Optional[Executor] = None
) -> List[BenchRow]:
    """Run cells concurrently; rows come back in grid order.

    Without an explicit executor a process pool of ``config.jobs`` workers
    is used, or a single worker thread when ``jobs`` is 1.
    """
    owned = executor is None
    if executor is None:
        if config.jobs > 1:
            executor = ProcessPoolExecutor(max_workers=config.jobs)
        else:
            executor = ThreadPoolExecutor(max_workers=1)
    loop = asyncio.get_running_loop()
    try:
        futures = [
            loop.run_in_executor(executor, run_cell, config, cell)
            for cell in config.cells()
        ]
        return list(await asyncio.gather(*futures))
    finally:
        if owned:
            executor.shutdown(wait=True)


def write_csv(rows: Sequence[BenchRow], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.as_csv())


def error_patterns(
    field: Field, n: int, max_weight: int
) -> Iterator[Dict[int, FieldElement]]:
    """Every error vector of weight <= ``max_weight``, as position -> value."""
    for weight in range(max_weight + 1):
        for positions in itertools.combinations(range(n), weight):
            for values in itertools.product(field.nonzero_elements(), repeat=weight):
                yield dict(zip(positions, values))


def verify_exhaustive(
    m: int = 3,
    k: int = 2,
    engines: Optional[Sequence[str]] = None,
    modes: Optional[Sequence[str]] = None,
) -> Dict[Tuple[str, str], int]:
    """Decode every message under every correctable error pattern.

    Returns the number of decodes per (engine, mode) and raises
    :class:`OracleMismatch` on the first wrong one.
    """
    if engines is None:
        engines = DEFAULT_ENGINES
    if modes is None:
        modes = MODES
    field = Field(m)
    code = RSCode.primitive(field, k)
    messages = [
        Poly(coeffs) for coeffs in itertools.product(field.elements(), repeat=k)
    ]
    patterns = list(error_patterns(field, code.n, code.t))
    counts: Dict[Tuple[str, str], int] = {}
    for engine_name in engines:
        engine = get_engine(engine_name)
        for mode in modes:
            cases = 0
            for message in messages:
                codeword = code.encode(message)
                for pattern in patterns:
                    received = apply_error_pattern(field, codeword, pattern)
                    outcome = wb_decode(code, received, engine, mode)
                    if not outcome.success or outcome.message != message:
                        raise OracleMismatch(engine_name, mode, message, pattern)
                    cases += 1
            logger.info("%s/%s: %s decodes verified", engine_name, mode, cases)
            counts[(engine_name, mode)] = cases
    return counts
