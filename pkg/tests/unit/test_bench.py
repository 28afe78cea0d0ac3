import io
import random
from fractions import Fraction

import pytest

from rs_reencoding.bench import (
    CSV_HEADER,
    BenchConfig,
    BenchRow,
    Cell,
    apply_error_pattern,
    derive_seed,
    error_patterns,
    inject_errors,
    write_csv,
)
from rs_reencoding.exceptions import BadDimension, BadWeight, InvalidConfig
from rs_reencoding.utils import hamming_distance


class TestBenchConfig:
    def test_defaults(self):
        config = BenchConfig()
        assert config.m_values == (4, 5, 6, 7, 8)
        assert config.engines == ("linsys", "koetter")
        assert config.modes == ("none", "original", "revisited")
        assert config.iterations == 100
        assert config.fail_fast
        assert config.error_weight is None

    @pytest.mark.parametrize(
        "m,rate,k",
        [
            (4, Fraction(1, 2), 8),
            (4, Fraction(7, 8), 14),
            (6, Fraction(5, 8), 40),
            (8, Fraction(3, 4), 192),
        ],
    )
    def test_dimension(self, m, rate, k):
        assert BenchConfig.dimension(m, rate) == k

    def test_cells_in_grid_order(self):
        config = BenchConfig()
        cells = list(config.cells())
        assert len(cells) == 5 * 4 * 2 * 3
        assert cells[0] == Cell(4, 8, "linsys", "none")
        assert cells[1] == Cell(4, 8, "linsys", "original")
        assert cells[3] == Cell(4, 8, "koetter", "none")
        assert cells[6] == Cell(4, 10, "linsys", "none")
        assert cells[-1] == Cell(8, 224, "koetter", "revisited")

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"m_values": [1]},
            {"m_values": [17]},
            {"m_values": []},
            {"rates": [Fraction(1)]},
            {"rates": [Fraction(1, 64)]},
            {"engines": ["groebner"]},
            {"modes": ["sideways"]},
            {"iterations": 0},
            {"error_weight": -1},
            {"jobs": 0},
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(InvalidConfig):
            BenchConfig(**kwargs)

    def test_rates_accept_strings(self):
        config = BenchConfig(m_values=[4], rates=["1/2"])
        assert config.rates == (Fraction(1, 2),)


class TestSeeds:
    def test_deterministic(self):
        assert derive_seed(0, 4, 8, "linsys", "none", 3) == derive_seed(
            0, 4, 8, "linsys", "none", 3
        )

    def test_independent_per_cell(self):
        seeds = {
            derive_seed(base, m, 8, engine, mode, trial)
            for base in (0, 1)
            for m in (4, 5)
            for engine in ("linsys", "koetter")
            for mode in ("none", "revisited")
            for trial in range(5)
        }
        assert len(seeds) == 2 * 2 * 2 * 2 * 5

    def test_fits_in_64_bits(self):
        assert 0 <= derive_seed(7, 8, 128, "koetter", "original", 99) < 2 ** 64


class TestErrorInjection:
    def test_exact_weight(self, gf16):
        rng = random.Random(50)
        codeword = [gf16.random_element(rng) for _ in range(15)]
        for weight in range(16):
            word = inject_errors(gf16, codeword, weight, seed=weight)
            assert hamming_distance(word, codeword) == weight

    def test_reproducible(self, gf16):
        codeword = [0] * 15
        assert inject_errors(gf16, codeword, 4, 11) == inject_errors(
            gf16, codeword, 4, 11
        )

    @pytest.mark.parametrize("weight", [-1, 8])
    def test_bad_weight(self, gf8, weight):
        with pytest.raises(BadWeight):
            inject_errors(gf8, [0] * 7, weight, 0)

    def test_worked_example_pattern(self, gf8, a, received_word):
        codeword = [a(1), a(4), a(6), a(3), a(2), 1, 0]
        errors = {0: a(6), 4: a(5)}
        assert apply_error_pattern(gf8, codeword, errors) == received_word

    def test_pattern_outside_word(self, gf8):
        with pytest.raises(BadDimension):
            apply_error_pattern(gf8, [0] * 7, {7: 1})

    def test_pattern_count(self, gf8):
        # 1 + 7 * 7 + C(7, 2) * 7^2
        assert sum(1 for _ in error_patterns(gf8, 7, 2)) == 1079


class TestOutput:
    def test_mean(self):
        row = BenchRow(4, 15, 8, "koetter", "revisited", 100, 0.5, 0, 1234)
        assert row.mean_us == pytest.approx(5000.0)
        assert row.as_csv() == [
            "4",
            "15",
            "8",
            "koetter",
            "revisited",
            "100",
            "0.500",
            "5000.000",
            "0",
            "1234",
        ]

    def test_write_csv(self):
        stream = io.StringIO()
        write_csv([BenchRow(5, 31, 16, "linsys", "none", 10, 0.01, 2, 99)], stream)
        lines = stream.getvalue().splitlines()
        assert lines[0] == "m,n,k,engine,mode,iters,total_s,mean_us,failures,field_ops"
        assert lines[0].split(",") == list(CSV_HEADER)
        assert lines[1] == "5,31,16,linsys,none,10,0.010,1000.000,2,99"

    def test_header_only(self):
        stream = io.StringIO()
        write_csv([], stream)
        assert stream.getvalue() == ",".join(CSV_HEADER) + "\n"
