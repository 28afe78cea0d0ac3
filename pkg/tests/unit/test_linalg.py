import random

import numpy as np
import pytest

from rs_reencoding.gf2m import Field, count_field_ops
from rs_reencoding.linalg import mat_vec, nullspace_vector, rank, row_reduce


class TestRowReduce:
    def test_identity(self, gf8):
        reduced, pivots = row_reduce(gf8, np.eye(3, dtype=np.int64))
        assert pivots == [0, 1, 2]
        assert np.array_equal(reduced, np.eye(3, dtype=np.int64))

    def test_pivot_rows_are_normalised(self, gf8):
        reduced, pivots = row_reduce(gf8, [[0, 3, 5], [6, 2, 0]])
        assert pivots == [0, 1]
        assert reduced[0, 0] == 1
        assert reduced[1, 1] == 1
        assert reduced[0, 1] == 0
        assert reduced[1, 0] == 0

    def test_input_is_not_modified(self, gf8):
        matrix = np.array([[2, 3], [4, 5]], dtype=np.int64)
        row_reduce(gf8, matrix)
        assert matrix.tolist() == [[2, 3], [4, 5]]

    def test_rejects_vectors(self, gf8):
        with pytest.raises(ValueError):
            row_reduce(gf8, [1, 2, 3])

    def test_rank(self, gf8):
        assert rank(gf8, [[1, 2], [2, gf8.mul(2, 2)]]) == 1
        assert rank(gf8, [[0, 0], [0, 0]]) == 0
        assert rank(gf8, [[1, 0], [0, 1]]) == 2


class TestNullspace:
    def test_trivial_kernel(self, gf8):
        assert nullspace_vector(gf8, np.eye(4, dtype=np.int64)) is None

    def test_first_free_variable_is_one(self, gf8):
        vector = nullspace_vector(gf8, [[1, 1, 0], [0, 0, 1]])
        assert vector.tolist() == [1, 1, 0]

    def test_wide_matrix_has_kernel(self, gf8):
        vector = nullspace_vector(gf8, [[3, 5, 7]])
        assert vector.tolist()[1:] == [1, 0]
        assert not np.any(mat_vec(gf8, [[3, 5, 7]], vector))

    def test_empty_system(self, gf8):
        vector = nullspace_vector(gf8, np.zeros((0, 3), dtype=np.int64))
        assert vector.tolist() == [1, 0, 0]

    @pytest.mark.parametrize("m", [3, 4, 8])
    def test_random_kernels(self, m):
        field = Field(m)
        rng = random.Random(m)
        for _ in range(30):
            rows = rng.randrange(1, 8)
            cols = rows + rng.randrange(1, 4)
            matrix = np.array(
                [[field.random_element(rng) for _ in range(cols)] for _ in range(rows)]
            )
            vector = nullspace_vector(field, matrix)
            assert vector is not None
            assert np.any(vector)
            assert not np.any(mat_vec(field, matrix, vector))


class TestMatVec:
    def test_matches_scalar_sum(self, gf16):
        rng = random.Random(12)
        matrix = [[rng.randrange(16) for _ in range(5)] for _ in range(4)]
        vector = [rng.randrange(16) for _ in range(5)]
        expected = []
        for row in matrix:
            acc = 0
            for a, b in zip(row, vector):
                acc = gf16.add(acc, gf16.mul(a, b))
            expected.append(acc)
        assert mat_vec(gf16, matrix, vector).tolist() == expected

    def test_counts_a_dot_product_per_row(self, gf8):
        with count_field_ops() as ops:
            mat_vec(gf8, np.ones((3, 4), dtype=np.int64), [1, 2, 3, 4])
        assert ops.multiplications == 12
        assert ops.additions == 9

    def test_shape_mismatch(self, gf8):
        with pytest.raises(ValueError):
            mat_vec(gf8, np.ones((2, 3), dtype=np.int64), [1, 2])
