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
"""Step-by-step revisited re-encoding of RS[7,2] over GF(8) with two errors."""
from typing import List, Optional, TextIO

from rs_reencoding.bench import apply_error_pattern
from rs_reencoding.bivariate import BiPoly
from rs_reencoding.decoders import RSCode, wb_bounds
from rs_reencoding.gf2m import Field
from rs_reencoding.interpolation import InterpolationProblem, KoetterEngine
from rs_reencoding.polyring import Poly, PolyRing
from rs_reencoding.reencoding import (
    lift,
    make_context,
    reduced_bounds,
    reduced_points,
    unshift,
)

# P = a6 X + a5, low to high
SENT_MESSAGE = "[a5,a6]"
# position -> error value; turns a into a5 and a2 into a3
ERROR_PATTERN = {0: "a6", 4: "a5"}
# a solution of the reduced problem with a two dimensional solution space
REFERENCE_S = ("[a6,a2]", "[a3,a4,a6]")


def _points_text(field: Field, points) -> str:
    return (
        "["
        + ",".join(
            f"({field.format_power(x)},{field.format_power(y)})" for x, y in points
        )
        + "]"
    )


def _word_text(field: Field, word) -> str:
    return "[" + ",".join(field.format_power(v) for v in word) + "]"


def example_lines() -> List[str]:
    field = Field(3)
    code = RSCode.primitive(field, 2)
    ring = code.ring
    message = ring.parse(SENT_MESSAGE)
    codeword = code.encode(message)
    errors = {pos: field.parse_power(v) for pos, v in ERROR_PATTERN.items()}
    received = apply_error_pattern(field, codeword, errors)

    ctx = make_context(ring, code.support, received, code.k, exact_quotient=True)
    points = reduced_points(ctx)
    problem = InterpolationProblem(
        field, points, 1, reduced_bounds(wb_bounds(code), 1, code.k)
    )
    s_engine = KoetterEngine().solve(problem).q
    p_engine = _message(ring, unshift(lift(s_engine, ctx, 1), ctx))

    s_ref = BiPoly(ring.parse(col) for col in REFERENCE_S)
    r_ref = lift(s_ref, ctx, 1)
    q_ref = unshift(r_ref, ctx)

    return [
        f"field = GF(2^{field.m}) modulus=0x{field.modulus:x}",
        f"support = {_word_text(field, code.support)}",
        f"P_sent = {message.to_text(field)}",
        f"c = {_word_text(field, codeword)}",
        f"y = {_word_text(field, received)}",
        f"L_k = {ctx.l_k.to_text(field)}",
        f"L_n = {ctx.l_n.to_text(field)}",
        f"L_nk = {ctx.l_nk.to_text(field)}",
        f"P_nk = {_points_text(field, points)}",
        f"S_engine = {s_engine.to_text(field)}",
        f"P_engine = {p_engine.to_text(field)}",
        f"S = {s_ref.to_text(field)}",
        f"R = {r_ref.to_text(field)}",
        f"Q = {q_ref.to_text(field)}",
        f"P = {_message(ring, q_ref).to_text(field)}",
    ]


def _message(ring: PolyRing, q: BiPoly) -> Poly:
    # -Q0 / Q1 in characteristic 2
    return ring.exact_div(q.column(0), q.column(1))


def print_example(stream: Optional[TextIO] = None) -> str:
    """Write the trace to ``stream`` when given and return it."""
    text = "\n".join(example_lines()) + "\n"
    if stream is not None:
        stream.write(text)
    return text
