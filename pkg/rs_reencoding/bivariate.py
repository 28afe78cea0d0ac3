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
"""Bivariate polynomials Q(X, Y) = sum_j Q_j(X) Y^j over GF(2^m).

Binomial coefficients only ever appear reduced mod 2, so they are read off
with Lucas' theorem: C(i, a) is odd iff the bits of ``a`` are a subset of
the bits of ``i``.
"""
import itertools
from typing import Iterable, Iterator, List, Set, Tuple

from rs_reencoding.exceptions import ZeroPolynomial
from rs_reencoding.gf2m import FieldElement, tally
from rs_reencoding.polyring import NEG_INF, Degree, Poly, PolyRing


def _odd_binomial(n: int, k: int) -> bool:
    return (n & k) == k


class BiPoly:
    """An immutable bivariate polynomial stored as its Y-coefficient columns.

    :param columns: ``columns[j]`` is Q_j(X), the coefficient of Y^j.
    """

    __slots__ = ("_columns",)

    def __init__(self, columns: Iterable[Poly] = ()):
        cols = list(columns)
        while cols and cols[-1].is_zero():
            cols.pop()
        self._columns: Tuple[Poly, ...] = tuple(cols)

    @property
    def columns(self) -> Tuple[Poly, ...]:
        return self._columns

    @property
    def deg_y(self) -> Degree:
        if not self._columns:
            return NEG_INF
        return len(self._columns) - 1

    @property
    def deg_x(self) -> Degree:
        return max((c.degree for c in self._columns), default=NEG_INF)

    def column(self, j: int) -> Poly:
        if 0 <= j < len(self._columns):
            return self._columns[j]
        return Poly()

    def is_zero(self) -> bool:
        return not self._columns

    def monomials(self) -> Iterator[Tuple[int, int, FieldElement]]:
        """Yield ``(i, j, c)`` for every nonzero term c X^i Y^j."""
        for j, col in enumerate(self._columns):
            for i, c in enumerate(col.coeffs):
                if c:
                    yield i, j, c

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self._columns == other._columns

    def __hash__(self):
        return hash(("BiPoly", self._columns))

    def __repr__(self):
        return f"BiPoly({list(self._columns)!r})"

    def to_text(self, field) -> str:
        """Render as ``Y*[a3,a4,a6] + [a6,a2]``, highest Y power first."""
        blocks = []
        for j in range(len(self._columns) - 1, -1, -1):
            col = self._columns[j]
            if col.is_zero():
                continue
            body = col.to_text(field)
            if j == 0:
                blocks.append(body)
            elif j == 1:
                blocks.append(f"Y*{body}")
            else:
                blocks.append(f"Y^{j}*{body}")
        return " + ".join(blocks) if blocks else "0"


class WDegree:
    """A (1, w)-weighted degree functional; ``yweight`` may be negative.

    This is a degree functional only: with a negative Y weight it does not
    define a monomial order.
    """

    def __init__(self, yweight: int, xweight: int = 1):
        if xweight != 1:
            raise ValueError("Only an X weight of 1 is supported")
        self.xweight: int = xweight
        self.yweight: int = yweight

    def __eq__(self, other):
        return (
            isinstance(other, WDegree)
            and self.xweight == other.xweight
            and self.yweight == other.yweight
        )

    def __repr__(self):
        return f"WDegree(yweight={self.yweight})"


class BivariateRing:
    """Operations on :class:`BiPoly` values over the field of ``ring``."""

    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.field = ring.field
        self._exp = ring.field._exp
        self._log = ring.field._log

    def zero(self) -> BiPoly:
        return BiPoly()

    def one(self) -> BiPoly:
        return BiPoly((self.ring.one(),))

    def y(self) -> BiPoly:
        return BiPoly((Poly(), self.ring.one()))

    def add(self, p: BiPoly, q: BiPoly) -> BiPoly:
        width = max(len(p.columns), len(q.columns))
        return BiPoly(self.ring.add(p.column(j), q.column(j)) for j in range(width))

    def scale(self, q: BiPoly, c: FieldElement) -> BiPoly:
        return BiPoly(self.ring.scale(col, c) for col in q.columns)

    def mul_poly(self, q: BiPoly, p: Poly) -> BiPoly:
        return BiPoly(self.ring.mul(col, p) for col in q.columns)

    def mul(self, p: BiPoly, q: BiPoly) -> BiPoly:
        if p.is_zero() or q.is_zero():
            return BiPoly()
        out = [Poly()] * (len(p.columns) + len(q.columns) - 1)
        for i, a in enumerate(p.columns):
            for j, b in enumerate(q.columns):
                out[i + j] = self.ring.add(out[i + j], self.ring.mul(a, b))
        return BiPoly(out)

    def from_roots(self, roots: Iterable[Poly]) -> BiPoly:
        """Return the product of (Y - P) over ``roots``."""
        result = self.one()
        for p in roots:
            result = self.mul(result, BiPoly((p, self.ring.one())))
        return result

    def eval(self, q: BiPoly, x: FieldElement, y: FieldElement) -> FieldElement:
        return self.hasse_eval(q, 0, 0, x, y)

    def hasse(self, q: BiPoly, a: int, b: int) -> BiPoly:
        """The (a, b)-th Hasse derivative, binomials reduced mod 2."""
        if a < 0 or b < 0:
            raise ValueError("Hasse derivative orders must be non-negative")
        cols = []
        for j in range(b, len(q.columns)):
            if not _odd_binomial(j, b):
                cols.append(Poly())
                continue
            coeffs = q.columns[j].coeffs
            cols.append(
                Poly(
                    coeffs[i] if _odd_binomial(i, a) else 0
                    for i in range(a, len(coeffs))
                )
            )
        return BiPoly(cols)

    def y_hasse(self, q: BiPoly, b: int) -> BiPoly:
        return self.hasse(q, 0, b)

    def hasse_eval(
        self, q: BiPoly, a: int, b: int, x: FieldElement, y: FieldElement
    ) -> FieldElement:
        """Evaluate the (a, b)-th Hasse derivative of ``q`` at (x, y).

        Equivalent to ``eval(hasse(q, a, b), x, y)`` without building the
        derivative.
        """
        exp, log = self._exp, self._log
        lx = log[x] if x else None
        ly = log[y] if y else None
        steps = 0
        total = 0
        cols = q.columns
        for j in range(len(cols) - 1, b - 1, -1):
            inner = 0
            if _odd_binomial(j, b):
                coeffs = cols[j].coeffs
                steps += max(len(coeffs) - a, 0)
                if lx is None:
                    inner = coeffs[a] if a < len(coeffs) else 0
                else:
                    for i in range(len(coeffs) - 1, a - 1, -1):
                        term = coeffs[i] if _odd_binomial(i, a) else 0
                        inner = (exp[log[inner] + lx] if inner else 0) ^ term
            # Horner in Y
            if ly is None:
                total = inner
            else:
                total = (exp[log[total] + ly] if total else 0) ^ inner
        tally(additions=steps + len(cols), multiplications=steps + len(cols))
        return total

    def multiplicity_at(self, q: BiPoly, x: FieldElement, y: FieldElement) -> int:
        """Largest s such that every Hasse derivative of order < s vanishes."""
        if q.is_zero():
            raise ZeroPolynomial("Multiplicity is undefined for the zero polynomial")
        total_degree = max(i + j for i, j, _ in q.monomials())
        for s in range(total_degree + 1):
            for a in range(s + 1):
                if self.hasse_eval(q, a, s - a, x, y):
                    return s
        raise AssertionError("a nonzero polynomial has a nonzero Taylor coefficient")

    def y_shift(self, q: BiPoly, shift: Poly) -> BiPoly:
        """Return q(X, Y + shift(X)), expanded through Hasse derivatives in Y."""
        if shift.is_zero() or q.is_zero():
            return q
        ring = self.ring
        ell = len(q.columns) - 1
        powers = [ring.one()]
        for _ in range(ell):
            powers.append(ring.mul(powers[-1], shift))
        cols = []
        for b in range(ell + 1):
            acc = Poly()
            for j in range(b, ell + 1):
                if _odd_binomial(j, b):
                    acc = ring.add(acc, ring.mul(q.columns[j], powers[j - b]))
            cols.append(acc)
        return BiPoly(cols)

    def y_translate(self, q: BiPoly, beta: FieldElement) -> BiPoly:
        """Return q(X, Y + beta)."""
        return self.y_shift(q, Poly((beta,)))

    def x_shift(self, q: BiPoly, c: FieldElement) -> BiPoly:
        """Return q(X + c, Y)."""
        return BiPoly(self.ring.taylor_shift(col, c) for col in q.columns)

    def substitute(self, q: BiPoly, p: Poly) -> Poly:
        """Return the univariate polynomial q(X, p(X))."""
        acc = Poly()
        for col in reversed(q.columns):
            acc = self.ring.add(self.ring.mul(acc, p), col)
        return acc

    def wdeg(self, q: BiPoly, w: WDegree) -> int:
        """Max of i + j * yweight over the nonzero monomials X^i Y^j."""
        if q.is_zero():
            raise ZeroPolynomial("Weighted degree is undefined for the zero polynomial")
        return max(
            int(col.degree) + j * w.yweight
            for j, col in enumerate(q.columns)
            if not col.is_zero()
        )

    def leading_monomial(self, q: BiPoly, w: WDegree) -> Tuple[int, int]:
        """Return ``(weighted degree, Y-degree)`` of the leading monomial.

        Monomials compare by weighted degree, then by Y-degree. This total
        order is compatible with multiplication even for negative weights.
        """
        if q.is_zero():
            raise ZeroPolynomial("The zero polynomial has no leading monomial")
        return max(
            (int(col.degree) + j * w.yweight, j)
            for j, col in enumerate(q.columns)
            if not col.is_zero()
        )

    def y_roots(
        self, q: BiPoly, degree_bound: int, exhaustive: bool = False
    ) -> Set[Poly]:
        """All P with deg P < ``degree_bound`` and q(X, P(X)) = 0.

        Uses the Roth-Ruckenstein recursion. ``exhaustive`` enumerates every
        candidate polynomial instead, for cross-checks on tiny fields.
        """
        if q.is_zero():
            raise ZeroPolynomial("Every polynomial is a root of the zero polynomial")
        if degree_bound < 1:
            raise ValueError("degree_bound must be at least 1")
        if exhaustive:
            candidates: Set[Poly] = set(self._all_polynomials(degree_bound))
        else:
            candidates = set()
            self._roth_ruckenstein(q, degree_bound, 0, [], candidates)
        return {
            p
            for p in candidates
            if p.degree < degree_bound and self.substitute(q, p).is_zero()
        }

    def _all_polynomials(self, degree_bound: int) -> Iterator[Poly]:
        for coeffs in itertools.product(self.field.elements(), repeat=degree_bound):
            yield Poly(coeffs)

    def _roth_ruckenstein(
        self,
        q: BiPoly,
        degree_bound: int,
        depth: int,
        prefix: List[FieldElement],
        found: Set[Poly],
    ) -> None:
        q = self._strip_x(q)
        at_zero = Poly(col.coefficient(0) for col in q.columns)
        for gamma in self._univariate_roots(at_zero):
            coeffs = prefix + [gamma]
            nxt = self._strip_x(self._rr_step(q, gamma))
            if nxt.column(0).is_zero():
                found.add(Poly(coeffs))
            if depth + 1 < degree_bound:
                self._roth_ruckenstein(nxt, degree_bound, depth + 1, coeffs, found)

    def _rr_step(self, q: BiPoly, gamma: FieldElement) -> BiPoly:
        """Return q(X, XY + gamma)."""
        translated = self.y_translate(q, gamma)
        return BiPoly(
            Poly([0] * j + list(col.coeffs)) if not col.is_zero() else col
            for j, col in enumerate(translated.columns)
        )

    def _strip_x(self, q: BiPoly) -> BiPoly:
        """Divide out the largest power of X dividing every column."""
        lowest = min(
            (
                next(i for i, c in enumerate(col.coeffs) if c)
                for col in q.columns
                if not col.is_zero()
            ),
            default=0,
        )
        if lowest == 0:
            return q
        return BiPoly(Poly(col.coeffs[lowest:]) for col in q.columns)

    def _univariate_roots(self, p: Poly) -> List[FieldElement]:
        if p.is_zero():
            return list(self.field.elements())
        return [v for v in self.field.elements() if self.ring.eval(p, v) == 0]
