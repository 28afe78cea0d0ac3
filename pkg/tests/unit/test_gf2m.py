import itertools
import random

import numpy as np
import pytest

from rs_reencoding.exceptions import (
    DivisionByZero,
    NonPrimitiveModulus,
    ReducibleModulus,
    UnsupportedDegree,
)
from rs_reencoding.gf2m import (
    DEFAULT_MODULI,
    Field,
    count_field_ops,
    is_irreducible,
    tally,
)


class TestFieldConstruction:
    def test_gf8_default_modulus(self, gf8):
        assert gf8.modulus == 0b1011
        # alpha^3 = alpha + 1
        assert gf8.exp(3) == gf8.add(gf8.exp(1), 1)

    def test_gf16_group_order(self, gf16):
        assert gf16.size == 16
        assert gf16.pow(gf16.exp(1), 15) == 1

    @pytest.mark.parametrize("m", [0, 1, 17])
    def test_unsupported_degree(self, m):
        with pytest.raises(UnsupportedDegree) as e:
            Field(m)
        assert e.value.m == m

    def test_reducible_modulus(self):
        # (x + 1)(x^2 + 1)
        with pytest.raises(ReducibleModulus):
            Field(3, modulus=0b1111)

    def test_modulus_of_wrong_degree(self):
        with pytest.raises(ReducibleModulus):
            Field(3, modulus=0x13)

    def test_non_primitive_modulus(self):
        # x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5
        with pytest.raises(NonPrimitiveModulus) as e:
            Field(4, modulus=0x1F)
        assert e.value.order == 5

    def test_custom_primitive_modulus(self):
        field = Field(3, modulus=0b1101)
        assert field.exp(3) == 0b101
        assert field != Field(3)

    @pytest.mark.parametrize("m", sorted(DEFAULT_MODULI))
    def test_default_moduli_are_irreducible(self, m):
        assert is_irreducible(DEFAULT_MODULI[m])
        assert DEFAULT_MODULI[m] >> m == 1

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 8])
    def test_log_antilog_round_trip(self, m):
        field = Field(m)
        for e in range(field.order):
            assert field.log(field.exp(e)) == e

    def test_equality_and_hash(self):
        assert Field(5) == Field(5)
        assert hash(Field(5)) == hash(Field(5))
        assert Field(5) != Field(6)

    def test_membership(self, gf8):
        assert 7 in gf8
        assert np.int64(3) in gf8
        assert 8 not in gf8
        assert -1 not in gf8
        assert "a" not in gf8


class TestScalarArithmetic:
    def test_add_identity_and_char_two(self, gf8):
        for x in gf8.elements():
            assert gf8.add(x, 0) == x
            assert gf8.add(x, x) == 0

    def test_add_worked_example(self, gf8, a):
        assert gf8.add(a(1), a(6)) == a(5)

    def test_mul(self, gf8, a):
        assert gf8.mul(a(4), a(5)) == a(2)
        for x in gf8.elements():
            assert gf8.mul(x, 0) == 0
            assert gf8.mul(x, 1) == x

    def test_inv(self, gf8, a):
        assert gf8.inv(a(3)) == a(4)

    def test_inv_zero(self, gf8):
        with pytest.raises(DivisionByZero):
            gf8.inv(0)

    def test_division_by_zero_is_zero_division_error(self, gf8):
        with pytest.raises(ZeroDivisionError):
            gf8.div(1, 0)

    def test_div(self, gf8, a):
        assert gf8.div(a(2), a(5)) == a(4)
        assert gf8.div(0, a(5)) == 0

    def test_negative_pow(self, gf8, a):
        assert gf8.pow(a(3), -1) == a(4)
        assert gf8.pow(a(2), -3) == a(1)

    def test_pow_of_zero(self, gf8):
        assert gf8.pow(0, 0) == 1
        assert gf8.pow(0, 5) == 0
        with pytest.raises(DivisionByZero):
            gf8.pow(0, -1)

    def test_log_zero(self, gf8):
        with pytest.raises(DivisionByZero):
            gf8.log(0)

    def test_sub_and_neg(self, gf8, a):
        assert gf8.sub(a(5), a(6)) == a(1)
        assert gf8.neg(a(2)) == a(2)


class TestFieldAxioms:
    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_exhaustive_axioms(self, m):
        field = Field(m)
        elements = list(field.elements())
        for x, y in itertools.product(elements, repeat=2):
            assert field.add(x, y) == field.add(y, x)
            assert field.mul(x, y) == field.mul(y, x)
            assert field.add(field.add(x, y), y) == x
        for x, y, z in itertools.product(elements, repeat=3):
            assert field.mul(field.mul(x, y), z) == field.mul(x, field.mul(y, z))
            assert field.add(field.add(x, y), z) == field.add(x, field.add(y, z))
            assert field.mul(x, field.add(y, z)) == field.add(
                field.mul(x, y), field.mul(x, z)
            )
        for x in field.nonzero_elements():
            inverses = [y for y in elements if field.mul(x, y) == 1]
            assert inverses == [field.inv(x)]
            assert field.pow(x, field.order) == 1

    @pytest.mark.parametrize("m", [5, 8, 16])
    def test_sampled_axioms(self, m):
        field = Field(m)
        rng = random.Random(m)
        for _ in range(10000):
            x, y, z = (field.random_element(rng) for _ in range(3))
            assert field.mul(field.mul(x, y), z) == field.mul(x, field.mul(y, z))
            assert field.mul(x, field.add(y, z)) == field.add(
                field.mul(x, y), field.mul(x, z)
            )
            assert field.mul(x, y) == field.mul(y, x)
            if x:
                assert field.mul(x, field.inv(x)) == 1
                assert field.pow(x, field.order) == 1


class TestFormatting:
    def test_format_power(self, gf8, a):
        assert gf8.format_power(0) == "0"
        assert gf8.format_power(1) == "1"
        assert gf8.format_power(a(1)) == "a"
        assert gf8.format_power(a(6)) == "a6"

    @pytest.mark.parametrize("text", ["0", "1", "a", "a2", "a6"])
    def test_parse_power_inverts_format(self, gf8, text):
        assert gf8.format_power(gf8.parse_power(text)) == text

    def test_parse_power_rejects_garbage(self, gf8):
        with pytest.raises(ValueError):
            gf8.parse_power("x3")

    def test_hex(self, gf8, a):
        assert gf8.to_hex(a(5)) == "7"
        assert gf8.from_hex("5") == a(6)
        with pytest.raises(ValueError):
            gf8.from_hex("f")


class TestVectorised:
    def test_vmul_matches_scalar(self, gf16):
        xs = np.array(list(gf16.elements()))
        table = gf16.vmul(xs[:, None], xs[None, :])
        for x in gf16.elements():
            for y in gf16.elements():
                assert table[x, y] == gf16.mul(x, y)

    def test_vinv_and_vdiv(self, gf16):
        xs = np.array(list(gf16.nonzero_elements()))
        assert np.all(gf16.vmul(xs, gf16.vinv(xs)) == 1)
        assert np.all(gf16.vdiv(xs, xs) == 1)

    def test_vinv_zero(self, gf16):
        with pytest.raises(DivisionByZero):
            gf16.vinv([1, 0])

    def test_vpow_matches_scalar(self, gf16):
        xs = np.array(list(gf16.elements()))
        for e in (0, 1, 2, 7, 15, 16):
            assert gf16.vpow(xs, e).tolist() == [gf16.pow(int(x), e) for x in xs]
        nonzero = xs[1:]
        assert gf16.vpow(nonzero, -2).tolist() == [
            gf16.pow(int(x), -2) for x in nonzero
        ]

    def test_vprod(self, gf16):
        rng = random.Random(9)
        rows = np.array([[rng.randrange(1, 16) for _ in range(6)] for _ in range(5)])
        rows[2, 3] = 0
        expected = []
        for row in rows.tolist():
            acc = 1
            for v in row:
                acc = gf16.mul(acc, v)
            expected.append(acc)
        assert gf16.vprod(rows, axis=1).tolist() == expected
        assert expected[2] == 0

    def test_powers(self, gf8, a):
        assert gf8.powers(a(2), 4).tolist() == [1, a(2), a(4), a(6)]
        assert gf8.powers(0, 3).tolist() == [1, 0, 0]
        assert gf8.powers(a(1), 0).tolist() == []


class TestOpCounting:
    def test_counts_inside_block_only(self, gf8):
        gf8.mul(3, 4)
        with count_field_ops() as ops:
            gf8.mul(3, 4)
            gf8.add(3, 4)
            gf8.add(5, 6)
        gf8.add(1, 2)
        assert ops.multiplications == 1
        assert ops.additions == 2
        assert ops.total == 3

    def test_nested_counter_rolls_up(self):
        with count_field_ops() as outer:
            tally(additions=1)
            with count_field_ops() as inner:
                tally(multiplications=4)
            tally(additions=1)
        assert inner.total == 4
        assert outer.additions == 2
        assert outer.multiplications == 4


class TestAgainstGalois:
    @pytest.mark.parametrize("m", [3, 4, 8])
    def test_multiplication_table(self, m):
        galois = pytest.importorskip("galois")
        field = Field(m)
        oracle = galois.GF(2 ** m, irreducible_poly=field.modulus)
        rng = random.Random(m)
        for _ in range(500):
            x = field.random_element(rng)
            y = field.random_element(rng)
            assert field.mul(x, y) == int(oracle(x) * oracle(y))
            if y:
                assert field.div(x, y) == int(oracle(x) / oracle(y))
