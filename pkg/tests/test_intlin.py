"""Exact linear algebra: canonical bases, saturated kernels, membership."""

import random
from fractions import Fraction

import pytest

from twistor_pushout.intlin import (
    hermite_row_basis,
    kernel_basis,
    lattice_contains,
    lattices_equal,
    mat_mul,
    mat_vec,
    xgcd,
)


def rational_kernel(rows, ncols):
    """Independent oracle: kernel basis over the rationals by Gaussian elimination,
    scaled to integer vectors."""
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        mat[r] = [x / mat[r][c] for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                factor = mat[i][c]
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row_idx, c in enumerate(pivots):
            vec[c] = -mat[row_idx][f]
        denom = 1
        for x in vec:
            denom = denom * x.denominator // _gcd(denom, x.denominator)
        basis.append([int(x * denom) for x in vec])
    return basis


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def test_xgcd_bezout():
    rng = random.Random(7)
    for _ in range(200):
        a, b = rng.randint(-50, 50), rng.randint(-50, 50)
        x, y, g = xgcd(a, b)
        assert x * a + y * b == g
        if a or b:
            assert g > 0 and a % g == 0 and b % g == 0


def test_hermite_is_canonical_under_row_mixing():
    rng = random.Random(11)
    rows = [[2, 4, 6, 0], [1, 1, 1, 1], [0, 0, 5, 5]]
    reference = hermite_row_basis(rows)
    for _ in range(20):
        mixed = [list(r) for r in rows]
        rng.shuffle(mixed)
        i, j = rng.randrange(3), rng.randrange(3)
        if i != j:
            c = rng.randint(-2, 2)
            mixed[i] = [a + c * b for a, b in zip(mixed[i], mixed[j])]
        assert hermite_row_basis(mixed) == reference


def test_kernel_of_sum_functional():
    assert kernel_basis([[1, 1]]) == [(1, -1)]


def test_kernel_of_identity_is_empty():
    assert kernel_basis([[1, 0], [0, 1]]) == []


def test_kernel_of_zero_map_is_everything():
    assert kernel_basis([[0, 0, 0]]) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_kernel_vectors_annihilate_and_saturate():
    rng = random.Random(23)
    for _ in range(60):
        m, n = rng.randint(1, 4), rng.randint(1, 5)
        rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)]
        kernel = kernel_basis(rows, ncols=n)
        for vec in kernel:
            assert all(v == 0 for v in mat_vec(rows, vec))
        oracle = rational_kernel(rows, n)
        assert len(kernel) == len(oracle)
        # saturation: integer multiples of rational solutions are members
        for vec in oracle:
            assert lattice_contains(kernel, vec)


def test_membership_basics():
    basis = hermite_row_basis([[2, 0, 1], [0, 3, 0]])
    assert lattice_contains(basis, basis[0])
    assert lattice_contains(basis, [0, 0, 0])
    assert lattice_contains(basis, [2, 3, 1])
    assert not lattice_contains(basis, [1, 0, 0])


def test_membership_outside_rank_one_lattice():
    basis = hermite_row_basis([[1, 2]])
    assert not lattice_contains(basis, [0, 1])


def test_membership_dimension_mismatch():
    with pytest.raises(ValueError):
        lattice_contains([[1, 0]], [1, 0, 0])


def test_membership_of_random_combinations():
    rng = random.Random(31)
    basis = hermite_row_basis([[3, 1, 0, 2], [0, 4, 4, 0], [0, 0, 6, 6]])
    for _ in range(100):
        combo = [0, 0, 0, 0]
        for row in basis:
            c = rng.randint(-10, 10)
            combo = [a + c * b for a, b in zip(combo, row)]
        assert lattice_contains(basis, combo)


def test_lattices_equal_ignores_presentation():
    assert lattices_equal([[1, 1], [0, 2]], [[1, 3], [1, 1]])
    assert not lattices_equal([[1, 1]], [[1, 1], [0, 2]])


def test_mat_mul_and_vec():
    a = [[1, 2], [3, 4]]
    b = [[0, 1], [1, 0]]
    assert mat_mul(a, b) == ((2, 1), (4, 3))
    assert mat_vec(a, [1, 1]) == (3, 7)
    with pytest.raises(ValueError):
        mat_vec(a, [1, 1, 1])
