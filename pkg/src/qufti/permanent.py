"""Exact permanent computation for dense complex matrices.

Two independent routes: a factorial-time expansion over permutations
(the oracle) and a Ryser inclusion-exclusion kernel with Gray-code
row-sum updates (the production path, O(2^n * n)). A repeated-column
variant supplies amplitudes for bunched Fock outcomes.

The Gray-code summation order is fixed, so results are bit-reproducible
run-to-run on the same platform.
"""

from __future__ import annotations

import itertools

import numpy as np
from numpy.typing import NDArray

from .exceptions import SizeLimitError

# Size guards; tune for the machine at hand, they are not algorithmic limits.
NAIVE_DIM_LIMIT = 10
RYSER_DIM_LIMIT = 30


def _check_square(m: NDArray[np.complex128]) -> int:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    return m.shape[0]


def permanent_naive(m: NDArray[np.complex128]) -> complex:
    """Permanent by direct sum over permutations, lexicographic order.

    Factorial time; exists as the independent oracle for the Ryser kernel.
    """
    n = _check_square(m)
    if n > NAIVE_DIM_LIMIT:
        raise SizeLimitError(
            f"naive permanent limited to dim <= {NAIVE_DIM_LIMIT}, got {n}"
        )
    rows = [list(map(complex, row)) for row in m]
    total = 0j
    for perm in itertools.permutations(range(n)):
        prod = 1 + 0j
        for i, j in enumerate(perm):
            prod *= rows[i][j]
        total += prod
    return total


def permanent_ryser(m: NDArray[np.complex128]) -> complex:
    """Permanent via Ryser's inclusion-exclusion formula.

    Per(A) = (-1)^n sum over nonempty column subsets S of
    (-1)^|S| prod_i sum_{j in S} A[i,j]. Subsets are visited in Gray-code
    order so each step updates the row sums by a single column.
    """
    n = _check_square(m)
    if n > RYSER_DIM_LIMIT:
        raise SizeLimitError(
            f"Ryser permanent limited to dim <= {RYSER_DIM_LIMIT}, got {n}"
        )
    a = np.ascontiguousarray(m, dtype=np.complex128)
    row_sums = np.zeros(n, dtype=np.complex128)
    total = 0j
    sign = 1  # (-1)^|S| tracked incrementally
    gray = 0
    for step in range(1, 1 << n):
        new_gray = step ^ (step >> 1)
        flipped = (gray ^ new_gray).bit_length() - 1
        if new_gray & (1 << flipped):
            row_sums += a[:, flipped]
            sign = -sign
        else:
            row_sums -= a[:, flipped]
            sign = -sign
        gray = new_gray
        total += sign * complex(np.prod(row_sums))
    if n % 2:
        total = -total
    return total


def permanent_with_repeats(
    m: NDArray[np.complex128], col_multiplicities: list[int] | tuple[int, ...]
) -> complex:
    """Permanent of the matrix with column k repeated col_multiplicities[k] times.

    Multiplicities must sum to the dimension; all-ones reduces to
    permanent_ryser on the original matrix.
    """
    n = _check_square(m)
    mult = list(col_multiplicities)
    if len(mult) != n or any(s < 0 for s in mult):
        raise ValueError(f"multiplicities must be {n} non-negative integers")
    if sum(mult) != n:
        raise ValueError(f"multiplicities sum to {sum(mult)}, expected {n}")
    cols = [k for k, s in enumerate(mult) for _ in range(s)]
    return permanent_ryser(m[:, cols])
