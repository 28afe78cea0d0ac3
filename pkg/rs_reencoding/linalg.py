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
"""Gauss-Jordan elimination over GF(2^m) on numpy integer matrices."""
from typing import List, Optional, Tuple

import numpy as np

from rs_reencoding.gf2m import Field, tally


def row_reduce(field: Field, matrix) -> Tuple[np.ndarray, List[int]]:
    """Return the reduced row echelon form of ``matrix`` and its pivot columns.

    The pivot of each column is the first row at or below the current one
    holding a nonzero entry.
    """
    a = np.array(matrix, dtype=np.int64, copy=True)
    if a.ndim != 2:
        raise ValueError("row_reduce expects a two dimensional matrix")
    rows, cols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.flatnonzero(a[r:, c])
        if nonzero.size == 0:
            continue
        p = r + int(nonzero[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = field.vmul(a[r], field.inv(int(a[r, c])))
        factors = a[:, c].copy()
        factors[r] = 0
        if np.any(factors):
            a ^= field.vmul(factors[:, None], a[r][None, :])
            tally(additions=int(np.count_nonzero(factors)) * cols)
        pivots.append(c)
        r += 1
    return a, pivots


def rank(field: Field, matrix) -> int:
    return len(row_reduce(field, matrix)[1])


def nullspace_vector(field: Field, matrix) -> Optional[np.ndarray]:
    """A nonzero kernel vector, or ``None`` when the kernel is trivial.

    The first free variable is set to 1 and every other free variable to 0.
    """
    reduced, pivots = row_reduce(field, matrix)
    cols = reduced.shape[1]
    pivot_set = set(pivots)
    free = next((c for c in range(cols) if c not in pivot_set), None)
    if free is None:
        return None
    vector = np.zeros(cols, dtype=np.int64)
    vector[free] = 1
    # -a equals a in characteristic 2
    for row, c in enumerate(pivots):
        vector[c] = reduced[row, free]
    return vector


def mat_vec(field: Field, matrix, vector) -> np.ndarray:
    """The product ``matrix @ vector`` over the field."""
    a = np.asarray(matrix, dtype=np.int64)
    v = np.asarray(vector, dtype=np.int64)
    if a.ndim != 2 or a.shape[1] != v.shape[0]:
        raise ValueError(f"Cannot multiply {a.shape} by a vector of {v.shape}")
    products = field.vmul(a, v[None, :])
    tally(additions=a.shape[0] * max(a.shape[1] - 1, 0))
    return np.bitwise_xor.reduce(products, axis=1)
