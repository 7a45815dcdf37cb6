"""Exact integer linear algebra.

Everything in this package reduces to one primitive: Hermite-style row
reduction of integer matrices with unimodular row operations.  From it we get
canonical lattice bases, saturated kernels and lattice membership, all over
unbounded Python integers.  No floating point is used anywhere.
"""

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Iterable, Sequence

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (x, y, g) with x*a + y*b == g == gcd(a, b), g >= 0 when a, b not both 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def _pivot(row: Sequence[int]) -> int:
    for k, a in enumerate(row):
        if a:
            return k
    raise ValueError("zero row has no pivot")


def _accumulate(basis: list[list[int]], pivots: list[int], vec: list[int]) -> None:
    # Row-reduce vec against the echelon basis, inserting whatever survives.
    n = len(vec)
    while True:
        j = next((k for k, a in enumerate(vec) if a), None)
        if j is None:
            return
        pos = bisect_left(pivots, j)
        if pos < len(pivots) and pivots[pos] == j:
            row = basis[pos]
            a, b = row[j], vec[j]
            if b % a == 0:
                q = b // a
                for k in range(j, n):
                    vec[k] -= q * row[k]
            else:
                x, y, g = xgcd(a, b)
                ag, bg = a // g, b // g
                for k in range(j, n):
                    rk, vk = row[k], vec[k]
                    row[k] = x * rk + y * vk
                    vec[k] = ag * vk - bg * rk
        else:
            basis.insert(pos, vec)
            pivots.insert(pos, j)
            return


def hermite_row_basis(rows: Iterable[Sequence[int]]) -> list[Vector]:
    """Canonical (Hermite normal form) basis of the integer row span of ``rows``.

    Rows come back in echelon order with positive pivots and entries above each
    pivot reduced into [0, pivot).  Two inputs span the same lattice iff their
    outputs are equal, which is what makes brute-force cross-checks exact.
    """
    basis: list[list[int]] = []
    pivots: list[int] = []
    for row in rows:
        if any(row):
            _accumulate(basis, pivots, list(row))
    for idx, p in enumerate(pivots):
        if basis[idx][p] < 0:
            basis[idx] = [-a for a in basis[idx]]
    # Reduce entries above each pivot, left to right; later reducing rows have
    # zeros in all earlier pivot columns, so earlier reductions stay valid.
    for idx in range(len(basis)):
        p = pivots[idx]
        piv = basis[idx][p]
        for above in range(idx):
            q = basis[above][p] // piv
            if q:
                basis[above] = [a - q * b for a, b in zip(basis[above], basis[idx])]
    return [tuple(row) for row in basis]


def kernel_basis(rows: Sequence[Sequence[int]], ncols: int | None = None) -> list[Vector]:
    """Canonical basis of the saturated integer kernel {x : rows @ x = 0}.

    Saturated means every integral solution is an integer combination of the
    returned vectors, not merely a rational one.  Implemented by reducing the
    augmented matrix [A^T | I]: rows whose A^T-part vanishes carry a kernel
    vector in their identity part, and unimodularity of the reduction makes the
    collection a basis of the full solution lattice.
    """
    mat = [list(r) for r in rows]
    m = len(mat)
    if ncols is None:
        if m == 0:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(mat[0])
    if any(len(r) != ncols for r in mat):
        raise ValueError("ragged matrix")
    if ncols == 0:
        return []
    augmented = []
    for i in range(ncols):
        augmented.append([mat[r][i] for r in range(m)] + [int(k == i) for k in range(ncols)])
    reduced = hermite_row_basis(augmented)
    kernel = [row[m:] for row in reduced if not any(row[:m])]
    return hermite_row_basis(kernel)


def lattice_contains(basis: Sequence[Sequence[int]], vec: Sequence[int]) -> bool:
    """True iff ``vec`` is an integer combination of the HNF rows ``basis``."""
    rows = [list(r) for r in basis if any(r)]
    v = list(vec)
    if rows and any(len(r) != len(v) for r in rows):
        raise ValueError("dimension mismatch")
    cleared = 0
    for row in rows:
        p = _pivot(row)
        if any(v[k] for k in range(cleared, min(p, len(v)))):
            return False
        cleared = p
        if v[p]:
            if v[p] % row[p]:
                return False
            q = v[p] // row[p]
            v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def lattices_equal(a: Iterable[Sequence[int]], b: Iterable[Sequence[int]]) -> bool:
    return hermite_row_basis(a) == hermite_row_basis(b)


def mat_vec(matrix: Sequence[Sequence[int]], vec: Sequence[int]) -> Vector:
    if matrix and len(matrix[0]) != len(vec):
        raise ValueError("dimension mismatch")
    return tuple(sum(r * x for r, x in zip(row, vec)) for row in matrix)


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("dimension mismatch")
    if not b:
        return tuple(tuple() for _ in a)
    cols = len(b[0])
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(cols))
        for i in range(len(a))
    )
