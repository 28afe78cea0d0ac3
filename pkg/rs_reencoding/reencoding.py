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
"""Re-encoding: translate the received word so k positions vanish, then
reduce the n-point problem to an (n - k)-point one.

With Z_k the vanishing polynomial of the chosen positions and L_k the
interpolant of the received word there, the residuals r_i = y_i - L_k(a_i)
are zero on the chosen positions, so their interpolant L_n is a multiple
Z_k * L_nk. A solution R of the reduced problem on (a_i, L_nk(a_i)) lifts
to a solution Q_j = R_j * Z_k^(s-j) of the translated problem, and
Q(X, Y + L_k) solves the original one.
"""
from typing import List, Optional, Sequence, Tuple

import numpy as np

from rs_reencoding.bivariate import BiPoly, BivariateRing
from rs_reencoding.exceptions import BadDimension, MultiplicityTooSmall
from rs_reencoding.gf2m import FieldElement, tally
from rs_reencoding.linalg import mat_vec
from rs_reencoding.polyring import Point, Poly, PolyRing


class ReencodingPlan:
    """Per-code data that does not depend on the received word.

    Besides Z_k, the plan keeps the Lagrange basis of the chosen positions
    in two forms: its values at the remaining positions, which give the
    residuals of a word in k (n - k) products, and its coefficients, which
    give L_k in k^2.

    :param ring: Polynomial ring over the code's field.
    :param support: The n distinct evaluation points.
    :param k: Number of positions forced to zero.
    :param positions: Chosen indices; defaults to the first ``k``.
    """

    def __init__(
        self,
        ring: PolyRing,
        support: Sequence[FieldElement],
        k: int,
        positions: Optional[Sequence[int]] = None,
    ):
        n = len(support)
        if not 1 <= k < n:
            raise BadDimension(f"Re-encoding needs 1 <= k < n, got k={k}, n={n}")
        if positions is None:
            positions = range(k)
        chosen = tuple(positions)
        if len(chosen) != k or len(set(chosen)) != k:
            raise BadDimension(f"Expected {k} distinct positions, got {list(chosen)}")
        if any(not 0 <= p < n for p in chosen):
            raise BadDimension(f"Positions {list(chosen)} fall outside [0, {n})")
        self.ring = ring
        self.support: Tuple[FieldElement, ...] = tuple(support)
        self.k: int = k
        self.positions: Tuple[int, ...] = chosen
        chosen_set = set(chosen)
        self.rest: Tuple[int, ...] = tuple(i for i in range(n) if i not in chosen_set)
        self.z_k: Poly = ring.vanishing([self.support[i] for i in chosen])
        self.z_k_at_rest: Tuple[FieldElement, ...] = tuple(
            ring.evaluate_many(self.z_k, [self.support[i] for i in self.rest])
        )
        self._build_basis()

    def _build_basis(self) -> None:
        field = self.ring.field
        support = np.array(self.support, dtype=np.int64)
        chosen_x = support[list(self.positions)]
        rest_x = support[list(self.rest)]
        # w_p = 1 / prod_{q != p} (a_p - a_q)
        gaps = chosen_x[:, None] ^ chosen_x[None, :]
        np.fill_diagonal(gaps, 1)
        weights = field.vinv(field.vprod(gaps, axis=1))
        z_rest = np.array(self.z_k_at_rest, dtype=np.int64)
        self.inv_z_k_at_rest: np.ndarray = field.vinv(z_rest)
        # lambda_p(a_i) = w_p Z_k(a_i) / (a_i - a_p)
        self.basis_at_rest: np.ndarray = field.vmul(
            field.vdiv(z_rest[:, None], rest_x[:, None] ^ chosen_x[None, :]),
            weights[None, :],
        )
        # column p holds the coefficients of lambda_p = w_p Z_k / (X - a_p)
        self.basis_coeffs: np.ndarray = np.zeros((self.k, self.k), dtype=np.int64)
        for col, (x, w) in enumerate(zip(chosen_x.tolist(), weights.tolist())):
            quotient = self.ring.exact_div(self.z_k, Poly((x, 1)))
            coeffs = self.ring.scale(quotient, w).coeffs
            self.basis_coeffs[: len(coeffs), col] = coeffs

    @property
    def n(self) -> int:
        return len(self.support)

    def context(
        self, y: Sequence[FieldElement], exact_quotient: bool = False
    ) -> "ReencodingContext":
        """Build the re-encoding context of a received word.

        Only L_k and the residuals are computed here; L_n and L_nk are
        interpolated on first access. By default L_nk comes from
        r_i / Z_k(a_i) on the remaining positions and L_n = Z_k * L_nk.
        ``exact_quotient`` interpolates L_n on all n translated points and
        divides by Z_k.
        """
        if len(y) != self.n:
            raise BadDimension(f"Received word has length {len(y)}, expected {self.n}")
        field = self.ring.field
        at_chosen = np.array([y[i] for i in self.positions], dtype=np.int64)
        l_k = Poly(mat_vec(field, self.basis_coeffs, at_chosen).tolist())
        at_rest = np.array([y[i] for i in self.rest], dtype=np.int64)
        at_rest ^= mat_vec(field, self.basis_at_rest, at_chosen)
        tally(additions=len(self.rest))
        residuals = [0] * self.n
        for i, r in zip(self.rest, at_rest.tolist()):
            residuals[i] = r
        return ReencodingContext(self, l_k, residuals, exact_quotient=exact_quotient)


class ReencodingContext:
    """The re-encoding of one received word.

    ``l_n``, ``l_nk`` and ``reduced_values`` are computed once, on first
    access.
    """

    def __init__(
        self,
        plan: ReencodingPlan,
        l_k: Poly,
        residuals: Sequence[FieldElement],
        exact_quotient: bool = False,
    ):
        self.plan = plan
        self.l_k: Poly = l_k
        self.residuals: Tuple[FieldElement, ...] = tuple(residuals)
        self.exact_quotient = exact_quotient
        self._l_n: Optional[Poly] = None
        self._l_nk: Optional[Poly] = None
        self._reduced_values: Optional[Tuple[FieldElement, ...]] = None

    @property
    def ring(self) -> PolyRing:
        return self.plan.ring

    @property
    def positions(self) -> Tuple[int, ...]:
        return self.plan.positions

    @property
    def z_k(self) -> Poly:
        return self.plan.z_k

    @property
    def k(self) -> int:
        return self.plan.k

    @property
    def reduced_values(self) -> Tuple[FieldElement, ...]:
        """r_i / Z_k(a_i), that is L_nk(a_i), on the remaining positions."""
        if self._reduced_values is None:
            residuals = np.array(
                [self.residuals[i] for i in self.plan.rest], dtype=np.int64
            )
            values = self.ring.field.vmul(residuals, self.plan.inv_z_k_at_rest)
            self._reduced_values = tuple(int(v) for v in values)
        return self._reduced_values

    @property
    def l_nk(self) -> Poly:
        if self._l_nk is None:
            self._interpolate()
        assert self._l_nk is not None
        return self._l_nk

    @property
    def l_n(self) -> Poly:
        if self._l_n is None:
            self._interpolate()
        assert self._l_n is not None
        return self._l_n

    def _interpolate(self) -> None:
        ring = self.ring
        if self.exact_quotient:
            self._l_n = ring.lagrange(self.translated_points())
            self._l_nk = ring.exact_div(self._l_n, self.z_k)
        else:
            self._l_nk = ring.lagrange(reduced_points(self))
            self._l_n = ring.mul(self.z_k, self._l_nk)

    def translated_points(self) -> List[Point]:
        """The n points (a_i, r_i) of the translated problem."""
        return list(zip(self.plan.support, self.residuals))


def make_context(
    ring: PolyRing,
    support: Sequence[FieldElement],
    y: Sequence[FieldElement],
    k: int,
    positions: Optional[Sequence[int]] = None,
    *,
    plan: Optional[ReencodingPlan] = None,
    exact_quotient: bool = False,
) -> ReencodingContext:
    if len(y) != len(support):
        raise BadDimension(
            f"Received word has length {len(y)}, support has {len(support)}"
        )
    if plan is None:
        plan = ReencodingPlan(ring, support, k, positions)
    return plan.context(y, exact_quotient=exact_quotient)


def reduced_points(ctx: ReencodingContext) -> List[Point]:
    """(a_i, L_nk(a_i)) for every position not chosen for re-encoding."""
    support = ctx.plan.support
    return [(support[i], v) for i, v in zip(ctx.plan.rest, ctx.reduced_values)]


def reduced_bounds(bounds: Sequence[int], s: int, k: int) -> List[int]:
    """Caps of the reduced problem: ``d_j - k (s - j)``."""
    ell = len(bounds) - 1
    if s < ell:
        raise MultiplicityTooSmall(s, ell)
    return [d - k * (s - j) for j, d in enumerate(bounds)]


def lift(r: BiPoly, ctx: ReencodingContext, s: int) -> BiPoly:
    """Return the BiPoly whose column j is R_j * Z_k^(s-j)."""
    if r.deg_y > s:
        raise MultiplicityTooSmall(s, int(r.deg_y))
    ring = ctx.ring
    z_k = ctx.z_k
    # Z_k^0 .. Z_k^s
    powers = [ring.one()]
    for _ in range(s):
        powers.append(ring.mul(powers[-1], z_k))
    return BiPoly(ring.mul(col, powers[s - j]) for j, col in enumerate(r.columns))


def unshift(q: BiPoly, ctx: ReencodingContext) -> BiPoly:
    """Return q(X, Y + L_k(X)), undoing the translation by L_k."""
    return BivariateRing(ctx.ring).y_shift(q, ctx.l_k)
