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
"""Bivariate interpolation with multiplicities under per-column degree caps.

Two interchangeable engines solve the same :class:`InterpolationProblem`:
:class:`LinearSystemEngine` builds the full constraint matrix and takes a
kernel vector, :class:`KoetterEngine` processes one constraint at a time
over a family of candidate polynomials.
"""
import logging
import sys
from typing import Dict, Iterator, List, Optional, Sequence, TextIO, Tuple, Type

import numpy as np

from rs_reencoding.bivariate import BiPoly, BivariateRing, WDegree
from rs_reencoding.exceptions import (
    DuplicateAbscissa,
    InterpolationError,
    NoSolution,
    NotSolvable,
    VerificationMismatch,
)
from rs_reencoding.gf2m import Field
from rs_reencoding.linalg import nullspace_vector
from rs_reencoding.polyring import Point, Poly, PolyRing
from rs_reencoding.utils import env_flag

logger = logging.getLogger(__name__)

# (point index, point, a, b): Q^[a,b] must vanish at the point
Constraint = Tuple[int, Point, int, int]


class InterpolationProblem:
    """IP(points, s) with caps ``deg Q_j <= bounds[j]``.

    :param field: The field the points live in.
    :param points: Points with pairwise distinct abscissae.
    :param s: Required multiplicity at every point.
    :param bounds:
        ``bounds[j]`` is the largest allowed degree of Q_j. A negative cap
        forces Q_j = 0.
    """

    def __init__(
        self, field: Field, points: Sequence[Point], s: int, bounds: Sequence[int]
    ):
        if s < 1:
            raise ValueError(f"Multiplicity must be at least 1, got {s}")
        if not bounds:
            raise ValueError("At least one degree bound is required")
        seen = set()
        for x, _ in points:
            if x in seen:
                raise DuplicateAbscissa(x)
            seen.add(x)
        self.field: Field = field
        self.points: Tuple[Point, ...] = tuple((int(x), int(y)) for x, y in points)
        self.s: int = s
        self.bounds: Tuple[int, ...] = tuple(int(d) for d in bounds)

    def __repr__(self):
        return (
            f"InterpolationProblem(points={len(self.points)}, s={self.s}, "
            f"bounds={list(self.bounds)})"
        )

    @property
    def ell(self) -> int:
        return len(self.bounds) - 1

    @property
    def constraint_count(self) -> int:
        return len(self.points) * self.s * (self.s + 1) // 2

    @property
    def unknown_count(self) -> int:
        return sum(max(d + 1, 0) for d in self.bounds)

    @property
    def inferred_weight(self) -> int:
        if self.ell >= 1:
            return self.bounds[0] - self.bounds[1]
        return 0

    @property
    def wdegree(self) -> WDegree:
        return WDegree(self.inferred_weight)

    def constraints(self) -> Iterator[Constraint]:
        """Points in sequence order, then (a, b) lexicographically, a + b < s."""
        for index, point in enumerate(self.points):
            for a in range(self.s):
                for b in range(self.s - a):
                    yield index, point, a, b

    def is_solvable(self) -> bool:
        return self.unknown_count > self.constraint_count

    def meets_bounds(self, q: BiPoly) -> bool:
        if q.deg_y > self.ell:
            return False
        return all(col.degree <= d for col, d in zip(q.columns, self.bounds))


def is_solvable(problem: InterpolationProblem) -> bool:
    return problem.is_solvable()


class Solution:
    """A nonzero interpolation polynomial and how it was obtained."""

    def __init__(self, q: BiPoly, engine: str, constraints_processed: int):
        self.q: BiPoly = q
        self.engine: str = engine
        self.constraints_processed: int = constraints_processed

    def __repr__(self):
        return f"Solution(q={self.q!r}, engine={self.engine!r})"


class BaseInterpolationEngine:
    name = "base"

    def solve(self, problem: InterpolationProblem) -> Solution:
        if not problem.is_solvable():
            raise NotSolvable(problem.constraint_count, problem.unknown_count)
        solution = self._solve(problem)
        logger.debug(
            "%s solved %r with deg_Y=%s", self.name, problem, solution.q.deg_y
        )
        return solution

    def _solve(self, problem: InterpolationProblem) -> Solution:
        raise NotImplementedError("_solve")


class LinearSystemEngine(BaseInterpolationEngine):
    """Gaussian elimination on the constraint-by-unknown system.

    Unknown ``(i, j)`` is the coefficient of X^i Y^j, ordered by column j
    then by i. Row ``(a, b)`` at ``(x, y)`` holds C(i, a) C(j, b) x^(i-a)
    y^(j-b).
    """

    name = "linsys"

    def _solve(self, problem: InterpolationProblem) -> Solution:
        field = problem.field
        layout = [
            (i, j) for j, d in enumerate(problem.bounds) for i in range(max(d + 1, 0))
        ]
        xi = np.array([i for i, _ in layout], dtype=np.int64)
        yj = np.array([j for _, j in layout], dtype=np.int64)
        max_x = int(xi.max()) + 1
        max_y = int(yj.max()) + 1

        matrix = np.zeros((problem.constraint_count, len(layout)), dtype=np.int64)
        powers: Dict[int, Tuple[np.ndarray, np.ndarray]] = {}
        for row, (index, (x, y), a, b) in enumerate(problem.constraints()):
            if index not in powers:
                powers[index] = (field.powers(x, max_x), field.powers(y, max_y))
            xp, yp = powers[index]
            mask = ((xi & a) == a) & ((yj & b) == b)
            values = field.vmul(
                xp[np.where(mask, xi - a, 0)], yp[np.where(mask, yj - b, 0)]
            )
            matrix[row] = np.where(mask, values, 0)

        vector = nullspace_vector(field, matrix)
        if vector is None:
            raise NoSolution("Constraint matrix has a trivial kernel")
        columns: List[List[int]] = [[] for _ in problem.bounds]
        for (i, j), c in zip(layout, vector.tolist()):
            columns[j].append(c)
        q = BiPoly(Poly(col) for col in columns)
        return Solution(q, self.name, problem.constraint_count)


class KoetterEngine(BaseInterpolationEngine):
    """Koetter's incremental interpolation over candidates g_0..g_l.

    Candidate g_j starts as Y^j. Each constraint is a linear functional;
    candidates with a nonzero discrepancy are eliminated against the one
    with the smallest leading monomial, which is then multiplied by
    (X - x). The final answer is the candidate meeting the caps with the
    smallest weighted degree. Caps of the form ``d_j = D - j w`` are always
    met when the problem is solvable; other shapes may end in
    :class:`NoSolution`.

    :param trace:
        Stream receiving one line per constraint with the discrepancies.
        Defaults to stderr when ``RSRE_TRACE`` is set.
    :param check_invariants:
        Re-check every processed constraint on every candidate after each
        step. Quadratic; for debugging.
    """

    name = "koetter"

    def __init__(
        self, *, trace: Optional[TextIO] = None, check_invariants: bool = False
    ):
        if trace is None and env_flag("RSRE_TRACE"):
            trace = sys.stderr
        self._trace = trace
        self._check_invariants = check_invariants

    def _solve(self, problem: InterpolationProblem) -> Solution:
        field = problem.field
        ring = PolyRing(field)
        bivariate = BivariateRing(ring)
        weight = problem.wdegree
        candidates = [
            BiPoly([Poly()] * j + [ring.one()]) for j in range(problem.ell + 1)
        ]
        processed: List[Constraint] = []
        for step, constraint in enumerate(problem.constraints(), start=1):
            _, (x, y), a, b = constraint
            deltas = [bivariate.hasse_eval(g, a, b, x, y) for g in candidates]
            if self._trace is not None:
                self._write_trace(field, step, constraint, deltas)
            active = [j for j, delta in enumerate(deltas) if delta]
            if active:
                pivot = min(
                    active,
                    key=lambda j: bivariate.leading_monomial(candidates[j], weight),
                )
                pivot_delta = deltas[pivot]
                pivot_poly = candidates[pivot]
                for j in active:
                    if j == pivot:
                        continue
                    candidates[j] = bivariate.add(
                        bivariate.scale(candidates[j], pivot_delta),
                        bivariate.scale(pivot_poly, deltas[j]),
                    )
                # X - x in characteristic 2
                candidates[pivot] = bivariate.mul_poly(pivot_poly, Poly((x, 1)))
            processed.append(constraint)
            if self._check_invariants:
                self._assert_invariant(bivariate, candidates, processed)

        feasible = [g for g in candidates if problem.meets_bounds(g)]
        if not feasible:
            raise NoSolution(
                f"No Koetter candidate meets the degree bounds {list(problem.bounds)}"
            )
        best = min(feasible, key=lambda g: bivariate.leading_monomial(g, weight))
        return Solution(best, self.name, len(processed))

    def _write_trace(
        self, field: Field, step: int, constraint: Constraint, deltas: List[int]
    ) -> None:
        _, (x, y), a, b = constraint
        assert self._trace is not None
        self._trace.write(
            f"constraint {step}: point=({field.format_power(x)},"
            f"{field.format_power(y)}) order=({a},{b}) deltas=["
            + ",".join(field.format_power(d) for d in deltas)
            + "]\n"
        )

    @staticmethod
    def _assert_invariant(
        bivariate: BivariateRing,
        candidates: List[BiPoly],
        processed: List[Constraint],
    ) -> None:
        for j, g in enumerate(candidates):
            for _, (x, y), a, b in processed:
                if bivariate.hasse_eval(g, a, b, x, y):
                    raise InterpolationError(
                        f"Candidate {j} violates constraint order=({a},{b}) "
                        f"at ({x:x},{y:x})"
                    )


ENGINES: Dict[str, Type[BaseInterpolationEngine]] = {
    LinearSystemEngine.name: LinearSystemEngine,
    KoetterEngine.name: KoetterEngine,
}


def get_engine(name: str) -> BaseInterpolationEngine:
    try:
        return ENGINES[name]()
    except KeyError:
        raise InterpolationError(
            f"Unknown interpolation engine {name!r}, expected one of {sorted(ENGINES)}"
        )


def solve_linsys(problem: InterpolationProblem) -> Solution:
    return LinearSystemEngine().solve(problem)


def solve_koetter(problem: InterpolationProblem) -> Solution:
    return KoetterEngine().solve(problem)


def check_pointwise(problem: InterpolationProblem, q: BiPoly) -> bool:
    """Every Hasse derivative of order < s vanishes at every point."""
    bivariate = BivariateRing(PolyRing(problem.field))
    return all(
        bivariate.hasse_eval(q, a, b, x, y) == 0
        for _, (x, y), a, b in problem.constraints()
    )


def check_divisibility(problem: InterpolationProblem, q: BiPoly) -> bool:
    """(X - x_i)^(s-b) divides Q^[b](X, L(X)) for every b < s.

    L is the Lagrange interpolant of the points. This characterises the
    same solutions as :func:`check_pointwise`.
    """
    ring = PolyRing(problem.field)
    bivariate = BivariateRing(ring)
    if not problem.points:
        return True
    lagrange = ring.lagrange(problem.points)
    xs = [x for x, _ in problem.points]
    for b in range(problem.s):
        divisor = ring.vanishing(xs, problem.s - b)
        derived = bivariate.substitute(bivariate.y_hasse(q, b), lagrange)
        _, rem = ring.divrem(derived, divisor)
        if not rem.is_zero():
            return False
    return True


def verify_solution(problem: InterpolationProblem, q: BiPoly) -> bool:
    """True iff ``q`` is nonzero, meets the caps and the multiplicities.

    Multiplicities are checked both pointwise and through divisibility;
    :class:`VerificationMismatch` is raised if the two disagree.
    """
    if q.is_zero():
        return False
    pointwise = check_pointwise(problem, q)
    divisible = check_divisibility(problem, q)
    if pointwise != divisible:
        raise VerificationMismatch(
            f"Pointwise check gave {pointwise}, divisibility check gave {divisible}"
        )
    return pointwise and problem.meets_bounds(q)
