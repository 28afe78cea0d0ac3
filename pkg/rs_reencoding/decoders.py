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
"""Reed-Solomon encoding and interpolation-based decoders.

Welch-Berlekamp runs in three modes that all return the same outcome:

``none``
    Interpolate the raw received points.
``original``
    Translate by L_k so k positions vanish, solve the same-size problem.
``revisited``
    Translate, divide out Z_k and solve the (n - k)-point problem.
"""
import logging
from typing import List, Optional, Sequence, Set, Tuple, Union

from rs_reencoding.bivariate import BiPoly, BivariateRing
from rs_reencoding.exceptions import (
    BadDimension,
    DecodingError,
    DecodingFailure,
    DuplicateAbscissa,
    MessageTooLong,
    RadiusInfeasible,
)
from rs_reencoding.gf2m import Field, FieldElement, count_field_ops
from rs_reencoding.interpolation import (
    BaseInterpolationEngine,
    InterpolationProblem,
    Solution,
    get_engine,
)
from rs_reencoding.polyring import Poly, PolyRing
from rs_reencoding.reencoding import (
    ReencodingContext,
    ReencodingPlan,
    lift,
    reduced_bounds,
    reduced_points,
    unshift,
)
from rs_reencoding.utils import hamming_distance

logger = logging.getLogger(__name__)

MODES = ("none", "original", "revisited")

EngineLike = Union[str, BaseInterpolationEngine]


class RSCode:
    """A Reed-Solomon code {(P(a_1), ..., P(a_n)) : deg P < k}.

    :param field: The symbol field.
    :param support: n pairwise distinct evaluation points.
    :param k: The dimension, ``1 <= k < n``.
    """

    def __init__(self, field: Field, support: Sequence[FieldElement], k: int):
        n = len(support)
        if not 1 <= k < n <= field.size:
            raise BadDimension(
                f"Need 1 <= k < n <= {field.size}, got k={k}, n={n}"
            )
        seen = set()
        for a in support:
            if a not in field:
                raise BadDimension(f"Support point {a!r} is not in {field!r}")
            if a in seen:
                raise DuplicateAbscissa(a)
            seen.add(a)
        self.field: Field = field
        self.ring: PolyRing = PolyRing(field)
        self.support: Tuple[FieldElement, ...] = tuple(int(a) for a in support)
        self.k: int = k
        self._plan: Optional[ReencodingPlan] = None

    @classmethod
    def primitive(cls, field: Field, k: int, n: Optional[int] = None) -> "RSCode":
        """The code with support alpha^0, ..., alpha^(n-1); n defaults to 2^m - 1."""
        if n is None:
            n = field.order
        if n > field.order:
            raise BadDimension(f"A primitive support has at most {field.order} points")
        return cls(field, [field.exp(i) for i in range(n)], k)

    def __repr__(self):
        return f"RSCode(n={self.n}, k={self.k}, field={self.field!r})"

    @property
    def n(self) -> int:
        return len(self.support)

    @property
    def t(self) -> int:
        return (self.n - self.k) // 2

    @property
    def plan(self) -> ReencodingPlan:
        """Re-encoding plan forcing the first k positions to zero."""
        if self._plan is None:
            self._plan = ReencodingPlan(self.ring, self.support, self.k)
        return self._plan

    def encode(self, message: Poly) -> List[FieldElement]:
        if message.degree >= self.k:
            raise MessageTooLong(message.degree, self.k)
        return self.ring.evaluate_many(message, self.support)

    def distance(self, a: Sequence[FieldElement], b: Sequence[FieldElement]) -> int:
        return hamming_distance(a, b)


def rs_encode(code: RSCode, message: Poly) -> List[FieldElement]:
    return code.encode(message)


class DecodeOutcome:
    """Result of a unique decode.

    Two outcomes are equal when they agree on success and message; the
    diagnostics are informational.
    """

    def __init__(
        self,
        message: Optional[Poly],
        *,
        reason: Optional[str] = None,
        errors_corrected: Optional[int] = None,
        engine: Optional[str] = None,
        mode: Optional[str] = None,
        constraints_processed: int = 0,
        field_ops: int = 0,
        interpolation_ops: int = 0,
    ):
        self._message = message
        self.reason = reason
        self.errors_corrected = errors_corrected
        self.engine = engine
        self.mode = mode
        self.constraints_processed = constraints_processed
        self.field_ops = field_ops
        self.interpolation_ops = interpolation_ops

    @property
    def success(self) -> bool:
        return self._message is not None

    @property
    def message(self) -> Poly:
        if self._message is None:
            raise DecodingFailure(self.reason or "unknown")
        return self._message

    def __eq__(self, other):
        if not isinstance(other, DecodeOutcome):
            return NotImplemented
        return (self.success, self._message) == (other.success, other._message)

    def __hash__(self):
        return hash((self.success, self._message))

    def __repr__(self):
        if self.success:
            return (
                f"DecodeOutcome(message={self._message!r}, "
                f"errors_corrected={self.errors_corrected})"
            )
        return f"DecodeOutcome(failure={self.reason!r})"


class GSParams:
    """Multiplicity ``s``, list size ``ell`` and radius of a list decode."""

    def __init__(self, s: int, ell: int, radius: int):
        self.s: int = s
        self.ell: int = ell
        self.radius: int = radius

    def __eq__(self, other):
        return isinstance(other, GSParams) and (self.s, self.ell, self.radius) == (
            other.s,
            other.ell,
            other.radius,
        )

    def __repr__(self):
        return f"GSParams(s={self.s}, ell={self.ell}, radius={self.radius})"

    def bounds(self, code: RSCode) -> List[int]:
        """``deg Q_j <= s (n - T) - 1 - j (k - 1)`` for j = 0..ell."""
        return [
            self.s * (code.n - self.radius) - 1 - j * (code.k - 1)
            for j in range(self.ell + 1)
        ]


def _resolve_engine(engine: EngineLike) -> BaseInterpolationEngine:
    if isinstance(engine, BaseInterpolationEngine):
        return engine
    return get_engine(engine)


def _solve(
    engine: BaseInterpolationEngine, problem: InterpolationProblem
) -> Tuple[Solution, int]:
    with count_field_ops() as ops:
        solution = engine.solve(problem)
    return solution, ops.total


def _check_word(code: RSCode, y: Sequence[FieldElement]) -> List[FieldElement]:
    if len(y) != code.n:
        raise BadDimension(f"Received word has length {len(y)}, expected {code.n}")
    return [int(v) for v in y]


def wb_bounds(code: RSCode) -> List[int]:
    return [code.n - code.t - 1, code.n - code.t - code.k]


def wb_decode(
    code: RSCode,
    y: Sequence[FieldElement],
    engine: EngineLike = "linsys",
    mode: str = "none",
) -> DecodeOutcome:
    """Welch-Berlekamp decoding up to t errors.

    ``field_ops`` counts every field operation of the decode, re-encoding
    and message recovery included; ``interpolation_ops`` counts the
    interpolation step alone.
    """
    word = _check_word(code, y)
    if mode not in MODES:
        raise DecodingError(
            f"Unknown re-encoding mode {mode!r}, expected one of {MODES}"
        )
    solver = _resolve_engine(engine)
    # per-code precomputation, outside the per-decode tally
    plan = None if mode == "none" else code.plan
    with count_field_ops() as ops:
        solution, interpolation_ops, ctx = _wb_solve(code, word, solver, mode, plan)
        q0 = solution.q.column(0)
        if mode == "revisited":
            assert ctx is not None
            # the lifted column 0 is R_0 * Z_k, column 1 is R_1
            q0 = code.ring.mul(q0, ctx.z_k)
        offset = None if ctx is None else ctx.l_k
        reason, message, errors = _recover_message(
            code, word, q0, solution.q.column(1), offset
        )

    diagnostics = dict(
        engine=solver.name,
        mode=mode,
        constraints_processed=solution.constraints_processed,
        field_ops=ops.total,
        interpolation_ops=interpolation_ops,
    )
    if reason is not None:
        return _failure(reason, diagnostics)
    return DecodeOutcome(message, errors_corrected=errors, **diagnostics)


def _wb_solve(
    code: RSCode,
    word: List[FieldElement],
    solver: BaseInterpolationEngine,
    mode: str,
    plan: Optional[ReencodingPlan],
) -> Tuple[Solution, int, Optional[ReencodingContext]]:
    field = code.field
    bounds = wb_bounds(code)
    ctx: Optional[ReencodingContext] = None
    if plan is None:
        problem = InterpolationProblem(field, list(zip(code.support, word)), 1, bounds)
    elif mode == "original":
        ctx = plan.context(word)
        problem = InterpolationProblem(field, ctx.translated_points(), 1, bounds)
    else:
        ctx = plan.context(word)
        problem = InterpolationProblem(
            field, reduced_points(ctx), 1, reduced_bounds(bounds, 1, code.k)
        )
    solution, ops = _solve(solver, problem)
    return solution, ops, ctx


def _recover_message(
    code: RSCode,
    word: List[FieldElement],
    q0: Poly,
    q1: Poly,
    offset: Optional[Poly],
) -> Tuple[Optional[str], Optional[Poly], int]:
    """Return ``(failure reason, message, errors)`` from Q_0 + Y Q_1.

    With re-encoding the quotient is the correction to ``offset`` = L_k.
    """
    ring = code.ring
    if q1.is_zero():
        return "q1_zero", None, 0
    # -Q0 / Q1; negation is the identity in characteristic 2
    quot, rem = ring.divrem(q0, q1)
    if not rem.is_zero():
        return "inexact", None, 0
    if offset is not None:
        quot = ring.add(quot, offset)
    if quot.degree >= code.k:
        return "degree", None, 0
    errors = _count_errors(code, word, q1, quot)
    if errors > code.t:
        return "distance", None, 0
    return None, quot, errors


def _count_errors(
    code: RSCode, word: List[FieldElement], q1: Poly, message: Poly
) -> int:
    """Positions where the codeword of ``message`` differs from ``word``.

    Q_0 + Y Q_1 vanishes on every received point and Q_0 = -message * Q_1,
    so the two can only differ at the roots of Q_1.
    """
    ring = code.ring
    locator = ring.evaluate_many(q1, code.support)
    roots = [i for i, v in enumerate(locator) if v == 0]
    values = ring.evaluate_many(message, [code.support[i] for i in roots])
    return sum(1 for i, v in zip(roots, values) if v != word[i])


def _failure(reason: str, diagnostics: dict) -> DecodeOutcome:
    logger.debug(
        "Welch-Berlekamp decode failed (%s) with %s/%s",
        reason,
        diagnostics["engine"],
        diagnostics["mode"],
    )
    return DecodeOutcome(None, reason=reason, **diagnostics)


def _check_radius(code: RSCode, radius: int) -> None:
    if radius < code.t:
        raise RadiusInfeasible(radius, f"below the unique decoding radius t={code.t}")
    if radius >= code.n:
        raise RadiusInfeasible(radius, f"code length is n={code.n}")


def sudan_params(code: RSCode, radius: int) -> GSParams:
    """Smallest list size making Sudan's problem (s = 1) solvable."""
    _check_radius(code, radius)
    n, k = code.n, code.k
    unknowns = 0
    for ell in range(0, n + 1):
        cap = n - radius - 1 - ell * (k - 1)
        if cap < 0:
            break
        unknowns += cap + 1
        if ell >= 1 and unknowns > n:
            return GSParams(1, ell, radius)
    raise RadiusInfeasible(radius, "no list size up to n gives a solvable problem")


def gs_params(code: RSCode, radius: int) -> GSParams:
    """Smallest s, then smallest list size, with more unknowns than constraints."""
    _check_radius(code, radius)
    n, k = code.n, code.k
    for s in range(1, n + 1):
        constraints = n * s * (s + 1) // 2
        unknowns = 0
        for ell in range(0, s * n + 1):
            cap = s * (n - radius) - 1 - ell * (k - 1)
            if cap < 0:
                break
            unknowns += cap + 1
            if ell >= 1 and unknowns > constraints:
                logger.debug("Radius %s on %r needs s=%s, ell=%s", radius, code, s, ell)
                return GSParams(s, ell, radius)
    raise RadiusInfeasible(radius, "no multiplicity up to n gives a solvable problem")


def _list_filter(
    code: RSCode, word: Sequence[FieldElement], q: BiPoly, radius: int
) -> Set[Poly]:
    bivariate = BivariateRing(code.ring)
    found = set()
    for p in bivariate.y_roots(q, code.k):
        if code.distance(code.encode(p), word) <= radius:
            found.add(p)
    return found


def sudan_decode(
    code: RSCode,
    y: Sequence[FieldElement],
    radius: int,
    engine: EngineLike = "koetter",
) -> Set[Poly]:
    """All messages whose codewords lie within ``radius`` of ``y``, via s = 1."""
    word = _check_word(code, y)
    params = sudan_params(code, radius)
    problem = InterpolationProblem(
        code.field, list(zip(code.support, word)), 1, params.bounds(code)
    )
    solution = _resolve_engine(engine).solve(problem)
    return _list_filter(code, word, solution.q, radius)


def gs_decode(
    code: RSCode,
    y: Sequence[FieldElement],
    radius: int,
    engine: EngineLike = "koetter",
    reencode: Optional[bool] = None,
) -> Set[Poly]:
    """Guruswami-Sudan list decoding.

    The reduced (n - k)-point problem is used whenever ``s >= ell``;
    ``reencode`` forces the choice either way.
    """
    word = _check_word(code, y)
    params = gs_params(code, radius)
    bounds = params.bounds(code)
    if reencode is None:
        reencode = params.s >= params.ell
    solver = _resolve_engine(engine)
    if reencode:
        ctx = code.plan.context(word)
        problem = InterpolationProblem(
            code.field,
            reduced_points(ctx),
            params.s,
            reduced_bounds(bounds, params.s, code.k),
        )
        q = unshift(lift(solver.solve(problem).q, ctx, params.s), ctx)
    else:
        problem = InterpolationProblem(
            code.field, list(zip(code.support, word)), params.s, bounds
        )
        q = solver.solve(problem).q
    return _list_filter(code, word, q, radius)
