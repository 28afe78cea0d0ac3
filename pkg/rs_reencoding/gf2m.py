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
"""Arithmetic in binary extension fields GF(2^m), 2 <= m <= 16.

Elements are plain ``int`` values whose bit ``i`` is the coefficient of
alpha^i in the polynomial basis. They never carry their field: every
operation goes through a :class:`Field` handle.
"""
import logging
import random
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from rs_reencoding.exceptions import (
    DivisionByZero,
    NonPrimitiveModulus,
    ReducibleModulus,
    UnsupportedDegree,
)

logger = logging.getLogger(__name__)

FieldElement = int

MIN_DEGREE = 2
MAX_DEGREE = 16

# bit i = coefficient of x^i; m=3 gives alpha^3 = alpha + 1
DEFAULT_MODULI: Dict[int, int] = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x89,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
}


class OpCounter:
    """Running tally of scalar field additions and multiplications.

    Divisions and inversions are tallied as multiplications.
    """

    def __init__(self):
        self.additions: int = 0
        self.multiplications: int = 0

    @property
    def total(self) -> int:
        return self.additions + self.multiplications

    def __repr__(self):
        return (
            f"OpCounter(additions={self.additions}, "
            f"multiplications={self.multiplications})"
        )


_ACTIVE_COUNTER: ContextVar[Optional[OpCounter]] = ContextVar(
    "rs_reencoding_op_counter", default=None
)


@contextmanager
def count_field_ops() -> Iterator[OpCounter]:
    """Count field operations performed in the enclosed block.

    The counter lives in a context variable, so decodes running in other
    threads or tasks keep their own tallies. When blocks nest, the inner
    tally is added to the enclosing counter on exit.
    """
    parent = _ACTIVE_COUNTER.get()
    counter = OpCounter()
    token = _ACTIVE_COUNTER.set(counter)
    try:
        yield counter
    finally:
        _ACTIVE_COUNTER.reset(token)
        if parent is not None:
            parent.additions += counter.additions
            parent.multiplications += counter.multiplications


def tally(additions: int = 0, multiplications: int = 0) -> None:
    counter = _ACTIVE_COUNTER.get()
    if counter is not None:
        counter.additions += additions
        counter.multiplications += multiplications


def _gf2_mod(a: int, b: int) -> int:
    """Remainder of carry-less division of GF(2)[x] polynomials."""
    deg_b = b.bit_length() - 1
    while a and a.bit_length() - 1 >= deg_b:
        a ^= b << (a.bit_length() - 1 - deg_b)
    return a


def is_irreducible(modulus: int) -> bool:
    """Trial division by every GF(2)[x] polynomial of degree <= deg/2."""
    degree = modulus.bit_length() - 1
    if degree < 1:
        return False
    for d in range(1, degree // 2 + 1):
        for divisor in range(1 << d, 1 << (d + 1)):
            if _gf2_mod(modulus, divisor) == 0:
                return False
    return True


def _build_tables(m: int, modulus: int) -> Tuple[List[int], List[int]]:
    size = 1 << m
    order = size - 1
    # exp is doubled so log[a] + log[b] never needs a reduction
    exp = [0] * (2 * order)
    log = [0] * size
    value = 1
    for e in range(order):
        if e > 0 and value == 1:
            raise NonPrimitiveModulus(modulus, e)
        exp[e] = value
        log[value] = e
        value <<= 1
        if value & size:
            value ^= modulus
    for e in range(order, 2 * order):
        exp[e] = exp[e - order]
    return exp, log


class Field:
    """The field GF(2^m) with log/antilog tables over the generator x.

    :param m: Extension degree, between 2 and 16.
    :param modulus:
        Optional irreducible polynomial over GF(2), bit-encoded. Defaults to
        the fixed entry of ``DEFAULT_MODULI`` so serialized values are
        portable between runs.
    """

    def __init__(self, m: int, modulus: Optional[int] = None):
        if not MIN_DEGREE <= m <= MAX_DEGREE:
            raise UnsupportedDegree(m)
        if modulus is None:
            modulus = DEFAULT_MODULI[m]
        elif modulus >> m != 1 or not modulus & 1 or not is_irreducible(modulus):
            raise ReducibleModulus(modulus)
        self.m: int = m
        self.modulus: int = modulus
        self.size: int = 1 << m
        self.order: int = self.size - 1
        self._exp, self._log = _build_tables(m, modulus)
        self._exp_array = np.array(self._exp, dtype=np.int64)
        self._log_array = np.array(self._log, dtype=np.int64)
        logger.debug("Built GF(2^%s) tables for modulus 0x%x", m, modulus)

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.m, self.modulus))

    def __repr__(self):
        return f"Field(m={self.m}, modulus=0x{self.modulus:x})"

    def __contains__(self, a: object) -> bool:
        return isinstance(a, (int, np.integer)) and 0 <= a < self.size

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        assert a in self and b in self, "element outside the field"
        tally(additions=1)
        return a ^ b

    # characteristic 2: subtraction is addition and negation is the identity
    sub = add

    def neg(self, a: FieldElement) -> FieldElement:
        return a

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        assert a in self and b in self, "element outside the field"
        tally(multiplications=1)
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def div(self, a: FieldElement, b: FieldElement) -> FieldElement:
        if b == 0:
            raise DivisionByZero("Division by the zero element")
        tally(multiplications=1)
        if a == 0:
            return 0
        return self._exp[self._log[a] - self._log[b] + self.order]

    def inv(self, a: FieldElement) -> FieldElement:
        assert a in self, "element outside the field"
        if a == 0:
            raise DivisionByZero("The zero element has no inverse")
        tally(multiplications=1)
        return self._exp[self.order - self._log[a]]

    def pow(self, a: FieldElement, e: int) -> FieldElement:
        """Raise ``a`` to an integer power; negative ``e`` gives inverse powers."""
        assert a in self, "element outside the field"
        tally(multiplications=1)
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise DivisionByZero("Negative power of the zero element")
        return self._exp[(self._log[a] * e) % self.order]

    def log(self, a: FieldElement) -> int:
        if a == 0:
            raise DivisionByZero("The zero element has no discrete logarithm")
        return self._log[a]

    def exp(self, e: int) -> FieldElement:
        """Return alpha^e, where alpha is the class of x."""
        return self._exp[e % self.order]

    def elements(self) -> range:
        return range(self.size)

    def nonzero_elements(self) -> range:
        return range(1, self.size)

    def random_element(
        self, rng: Optional[random.Random] = None, nonzero: bool = False
    ) -> FieldElement:
        if rng is None:
            rng = random.Random()
        low = 1 if nonzero else 0
        return rng.randrange(low, self.size)

    def to_hex(self, a: FieldElement) -> str:
        return format(a, "x")

    def from_hex(self, text: str) -> FieldElement:
        value = int(text, 16)
        if value not in self:
            raise ValueError(f"0x{text} is not an element of {self!r}")
        return value

    def format_power(self, a: FieldElement) -> str:
        """Render ``a`` as ``0``, ``1``, ``a`` or ``a<e>`` for alpha^e."""
        if a == 0:
            return "0"
        e = self._log[a]
        if e == 0:
            return "1"
        if e == 1:
            return "a"
        return f"a{e}"

    def parse_power(self, text: str) -> FieldElement:
        text = text.strip()
        if text == "0":
            return 0
        if text == "1":
            return 1
        if not text.startswith("a"):
            raise ValueError(f"Unexpected element literal {text!r}")
        exponent = text[1:]
        return self.exp(int(exponent) if exponent else 1)

    def vmul(self, a, b) -> np.ndarray:
        """Elementwise (broadcasting) product of two arrays of elements."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        product = self._exp_array[self._log_array[a] + self._log_array[b]]
        product = np.where((a == 0) | (b == 0), 0, product)
        tally(multiplications=int(product.size))
        return product

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("The zero element has no inverse")
        tally(multiplications=int(a.size))
        return self._exp_array[self.order - self._log_array[a]]

    def vdiv(self, a, b) -> np.ndarray:
        return self.vmul(a, self.vinv(b))

    def vprod(self, a, axis: int = -1) -> np.ndarray:
        """Product of the elements of ``a`` along ``axis``."""
        a = np.asarray(a, dtype=np.int64)
        tally(multiplications=int(a.size))
        logs = self._log_array[a].sum(axis=axis) % self.order
        return np.where(np.any(a == 0, axis=axis), 0, self._exp_array[logs])

    def vpow(self, a, e: int) -> np.ndarray:
        """Elementwise ``a ** e``; 0^0 is 1 and 0^e is 0 for e > 0."""
        a = np.asarray(a, dtype=np.int64)
        if e < 0:
            return self.vpow(self.vinv(a), -e)
        if e == 0:
            return np.ones_like(a)
        tally(multiplications=int(a.size))
        out = self._exp_array[(self._log_array[a] * e) % self.order]
        return np.where(a == 0, 0, out)

    def powers(self, a: FieldElement, count: int) -> np.ndarray:
        """Return ``[1, a, a^2, ..., a^(count-1)]`` as an array."""
        if count <= 0:
            return np.zeros(0, dtype=np.int64)
        tally(multiplications=count - 1)
        if a == 0:
            out = np.zeros(count, dtype=np.int64)
            out[0] = 1
            return out
        exponents = (self._log[a] * np.arange(count, dtype=np.int64)) % self.order
        return self._exp_array[exponents]
