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
"""Dense univariate polynomials over GF(2^m)."""
import random
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from rs_reencoding.exceptions import (
    DivisionByZero,
    DuplicateAbscissa,
    InexactDivision,
    PolynomialError,
)
from rs_reencoding.gf2m import Field, FieldElement, tally

# degree of the zero polynomial, ordered below every integer
NEG_INF = float("-inf")

Degree = Union[int, float]
Point = Tuple[FieldElement, FieldElement]


class Poly:
    """An immutable polynomial, ``coeffs[i]`` being the coefficient of X^i.

    Trailing zeros are stripped on construction; the zero polynomial is the
    empty coefficient tuple.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        values = [int(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: Tuple[int, ...] = tuple(values)

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> Degree:
        if not self._coeffs:
            return NEG_INF
        return len(self._coeffs) - 1

    @property
    def leading(self) -> FieldElement:
        return self._coeffs[-1] if self._coeffs else 0

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, i: int) -> FieldElement:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    def __eq__(self, other):
        return isinstance(other, Poly) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(("Poly", self._coeffs))

    def __repr__(self):
        return f"Poly({list(self._coeffs)})"

    def to_hex(self) -> str:
        return "[" + ",".join(format(c, "x") for c in self._coeffs) + "]"

    def to_text(self, field: Field) -> str:
        """Low-to-high coefficients in alpha-power notation, e.g. ``[a5,a6]``."""
        return "[" + ",".join(field.format_power(c) for c in self._coeffs) + "]"


def _check_distinct(xs: Sequence[FieldElement]) -> None:
    seen = set()
    for x in xs:
        if x in seen:
            raise DuplicateAbscissa(x)
        seen.add(x)


class PolyRing:
    """Operations on :class:`Poly` values over a fixed :class:`Field`."""

    def __init__(self, field: Field):
        self.field = field
        self._exp = field._exp
        self._log = field._log

    def __repr__(self):
        return f"PolyRing({self.field!r})"

    def zero(self) -> Poly:
        return Poly()

    def one(self) -> Poly:
        return Poly((1,))

    def x(self) -> Poly:
        return Poly((0, 1))

    def constant(self, c: FieldElement) -> Poly:
        return Poly((c,))

    def monomial(self, c: FieldElement, i: int) -> Poly:
        return Poly([0] * i + [c])

    def random(self, rng: random.Random, degree_bound: int) -> Poly:
        """A uniformly random polynomial of degree < ``degree_bound``."""
        return Poly(rng.randrange(self.field.size) for _ in range(degree_bound))

    def parse(self, text: str) -> Poly:
        """Inverse of :meth:`Poly.to_text`."""
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"Unexpected polynomial literal {text!r}")
        body = body[1:-1].strip()
        if not body:
            return Poly()
        return Poly(self.field.parse_power(part) for part in body.split(","))

    def add(self, a: Poly, b: Poly) -> Poly:
        ac, bc = a.coeffs, b.coeffs
        if len(ac) < len(bc):
            ac, bc = bc, ac
        tally(additions=len(bc))
        out = list(ac)
        for i, c in enumerate(bc):
            out[i] ^= c
        return Poly(out)

    sub = add

    def neg(self, p: Poly) -> Poly:
        return p

    def scale(self, p: Poly, c: FieldElement) -> Poly:
        if c == 0 or p.is_zero():
            return Poly()
        tally(multiplications=len(p.coeffs))
        exp, log = self._exp, self._log
        lc = log[c]
        return Poly(exp[log[a] + lc] if a else 0 for a in p.coeffs)

    def mul(self, a: Poly, b: Poly) -> Poly:
        ac, bc = a.coeffs, b.coeffs
        if not ac or not bc:
            return Poly()
        tally(additions=len(ac) * len(bc), multiplications=len(ac) * len(bc))
        exp, log = self._exp, self._log
        blogs = [(j, log[c]) for j, c in enumerate(bc) if c]
        out = [0] * (len(ac) + len(bc) - 1)
        for i, c in enumerate(ac):
            if not c:
                continue
            lc = log[c]
            for j, lb in blogs:
                out[i + j] ^= exp[lc + lb]
        return Poly(out)

    def mul_linear(self, p: Poly, c: FieldElement) -> Poly:
        """Multiply by (X - c)."""
        coeffs = p.coeffs
        if not coeffs:
            return Poly()
        tally(additions=len(coeffs), multiplications=len(coeffs))
        out = [0] + list(coeffs)
        if c:
            exp, log = self._exp, self._log
            lc = log[c]
            for i, a in enumerate(coeffs):
                if a:
                    out[i] ^= exp[log[a] + lc]
        return Poly(out)

    def pow(self, p: Poly, e: int) -> Poly:
        if e < 0:
            raise ValueError("Polynomial powers must be non-negative")
        result = self.one()
        base = p
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def eval(self, p: Poly, x: FieldElement) -> FieldElement:
        """Evaluate by Horner's rule."""
        coeffs = p.coeffs
        tally(additions=len(coeffs), multiplications=len(coeffs))
        if x == 0:
            return coeffs[0] if coeffs else 0
        exp, log = self._exp, self._log
        lx = log[x]
        acc = 0
        for c in reversed(coeffs):
            acc = (exp[log[acc] + lx] if acc else 0) ^ c
        return acc

    def divrem(self, num: Poly, den: Poly) -> Tuple[Poly, Poly]:
        if den.is_zero():
            raise DivisionByZero("Division by the zero polynomial")
        dd = len(den.coeffs) - 1
        if len(num.coeffs) - 1 < dd:
            return Poly(), num
        exp, log = self._exp, self._log
        inv_lead = self.field.inv(den.leading)
        den_logs = [(j, log[c]) for j, c in enumerate(den.coeffs[:-1]) if c]
        rem = list(num.coeffs)
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = exp[log[c] + log[inv_lead]]
            quot[i - dd] = q
            rem[i] = 0
            lq = log[q]
            for j, ld in den_logs:
                rem[i - dd + j] ^= exp[lq + ld]
        steps = len(quot) * len(den.coeffs)
        tally(additions=steps, multiplications=steps)
        return Poly(quot), Poly(rem[:dd])

    def exact_div(self, num: Poly, den: Poly) -> Poly:
        quot, rem = self.divrem(num, den)
        if not rem.is_zero():
            raise InexactDivision(rem)
        return quot

    def lagrange(self, points: Sequence[Point]) -> Poly:
        """The unique polynomial of degree < len(points) through ``points``.

        Newton divided differences, then conversion of the Newton form to
        monomial coefficients; each level is one vector operation.
        """
        if not points:
            raise PolynomialError("Lagrange interpolation needs at least one point")
        field = self.field
        xs_list = [int(x) for x, _ in points]
        _check_distinct(xs_list)
        xs = np.array(xs_list, dtype=np.int64)
        c = np.array([int(y) for _, y in points], dtype=np.int64)
        n = len(xs_list)
        for j in range(1, n):
            tally(additions=2 * (n - j))
            c[j:] = field.vdiv(c[j:] ^ c[j - 1 : n - 1], xs[j:] ^ xs[: n - j])
        result = c[n - 1 : n].copy()
        for j in range(n - 2, -1, -1):
            # result * (X - x_j) + c_j
            scaled = field.vmul(result, xs[j])
            tally(additions=len(result) + 1)
            result = np.concatenate(([0], result)) ^ np.concatenate((scaled, [0]))
            result[0] ^= c[j]
        return Poly(result.tolist())

    def vanishing(self, roots: Sequence[FieldElement], multiplicity: int = 1) -> Poly:
        """Return the product of (X - r)^multiplicity over ``roots``."""
        if multiplicity < 1:
            raise ValueError("Multiplicity must be at least 1")
        _check_distinct(roots)
        result = self.one()
        for r in roots:
            for _ in range(multiplicity):
                result = self.mul_linear(result, r)
        return result

    def taylor_shift(self, p: Poly, c: FieldElement) -> Poly:
        """Return p(X + c)."""
        result = Poly()
        # X + c = X - c in characteristic 2
        for coef in reversed(p.coeffs):
            result = self.add(self.mul_linear(result, c), Poly((coef,)))
        return result

    def evaluate_many(self, p: Poly, xs: Sequence[FieldElement]) -> List[FieldElement]:
        """Horner's rule run on all of ``xs`` at once."""
        points = np.asarray(xs, dtype=np.int64)
        acc = np.zeros(points.shape, dtype=np.int64)
        for c in reversed(p.coeffs):
            acc = self.field.vmul(acc, points) ^ c
            tally(additions=int(points.size))
        return [int(v) for v in acc]
