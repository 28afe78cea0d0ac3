import itertools
import random

import pytest

from rs_reencoding.bench import inject_errors
from rs_reencoding.bivariate import BiPoly
from rs_reencoding.decoders import MODES, RSCode, wb_decode
from rs_reencoding.gf2m import Field
from rs_reencoding.polyring import Poly, PolyRing
from tests.unit.test_bivariate import brute_multiplicity, random_bipoly

SAMPLES = 10_000
COMBOS = list(itertools.product(["linsys", "koetter"], MODES))


@pytest.fixture(scope="module")
def ring64():
    return PolyRing(Field(6))


class TestPolynomialLaws:
    def test_lagrange_round_trip(self, ring64):
        field = ring64.field
        rng = random.Random(100)
        for _ in range(SAMPLES):
            count = rng.randrange(1, 17)
            xs = rng.sample(range(field.size), count)
            points = [(x, field.random_element(rng)) for x in xs]
            interpolant = ring64.lagrange(points)
            assert interpolant.degree <= count - 1
            values = ring64.evaluate_many(interpolant, xs)
            assert values == [y for _, y in points]

    def test_division_law(self, ring64):
        rng = random.Random(101)
        for _ in range(SAMPLES):
            num = ring64.random(rng, rng.randrange(0, 16))
            den = ring64.random(rng, rng.randrange(1, 8))
            if den.is_zero():
                continue
            quot, rem = ring64.divrem(num, den)
            assert ring64.add(ring64.mul(quot, den), rem) == num
            assert rem.degree < den.degree

    def test_taylor_shift(self, ring8):
        rng = random.Random(102)
        for _ in range(SAMPLES):
            p = ring8.random(rng, rng.randrange(1, 8))
            c = rng.randrange(8)
            shifted = ring8.taylor_shift(p, c)
            xs = list(range(8))
            assert ring8.evaluate_many(shifted, xs) == ring8.evaluate_many(
                p, [x ^ c for x in xs]
            )


class TestBivariateLaws:
    def test_y_shift_involution_and_evaluation(self, ring8, bivariate8):
        rng = random.Random(103)
        for _ in range(SAMPLES):
            q = random_bipoly(ring8, rng, rng.randrange(4), 4)
            shift = ring8.random(rng, 3)
            shifted = bivariate8.y_shift(q, shift)
            assert bivariate8.y_shift(shifted, shift) == q
            x, y = rng.randrange(8), rng.randrange(8)
            assert bivariate8.eval(shifted, x, y) == bivariate8.eval(
                q, x, y ^ ring8.eval(shift, x)
            )

    def test_multiplicity_matches_shifted_definition(self, ring8, bivariate8):
        rng = random.Random(104)
        checked = 0
        while checked < SAMPLES:
            x, y = rng.randrange(8), rng.randrange(8)
            q = random_bipoly(ring8, rng, 2, 3)
            if q.is_zero():
                continue
            # vanishing factors push the multiplicity up to 3
            for _ in range(rng.randrange(3)):
                factor = rng.choice(
                    [BiPoly([Poly([x, 1])]), BiPoly([Poly([y]), ring8.one()])]
                )
                q = bivariate8.mul(q, factor)
            assert bivariate8.multiplicity_at(q, x, y) == brute_multiplicity(
                bivariate8, q, x, y
            )
            checked += 1

    def test_hasse_taylor_identity(self, ring8, bivariate8):
        field = ring8.field
        rng = random.Random(105)
        for _ in range(SAMPLES):
            q = random_bipoly(ring8, rng, 3, 4)
            beta = rng.randrange(8)
            x, y = rng.randrange(8), rng.randrange(8)
            expansion = 0
            for b in range(4):
                term = bivariate8.eval(bivariate8.y_hasse(q, b), x, y)
                expansion ^= field.mul(term, field.pow(beta, b))
            assert expansion == bivariate8.eval(q, x, y ^ beta)


class TestDecoderModes:
    @pytest.mark.parametrize("m,trials", [(4, 400), (5, 350), (6, 250)])
    def test_modes_agree(self, m, trials):
        field = Field(m)
        rng = random.Random(170 + m)
        codes = {}
        for _ in range(trials):
            k = rng.randrange(1, field.order - 1)
            if k not in codes:
                codes[k] = RSCode.primitive(field, k)
            code = codes[k]
            message = code.ring.random(rng, k)
            weight = min(rng.randrange(0, code.t + 3), code.n)
            word = inject_errors(
                field, code.encode(message), weight, rng.getrandbits(32)
            )
            outcomes = [wb_decode(code, word, e, mode) for e, mode in COMBOS]
            assert all(outcome == outcomes[0] for outcome in outcomes)
            if weight <= code.t:
                assert outcomes[0].message == message
                assert outcomes[0].errors_corrected == weight
