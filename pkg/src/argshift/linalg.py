"""Exact linear algebra over the rationals (and fraction-free over polynomial rings).

Matrices are plain lists of rows. Vectors are sequences of Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

Matrix = list[list[Fraction]]


def to_fractions(rows) -> Matrix:
    return [[Fraction(v) for v in row] for row in rows]


def rref(rows) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = to_fractions(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1]) if rows else 0


def row_basis(rows) -> Matrix:
    m, piv = rref(rows)
    return m[: len(piv)]


def nullspace(rows, ncols: int | None = None) -> Matrix:
    """Basis of {v : M v = 0}, one basis vector per free column."""
    if not rows:
        n = ncols or 0
        return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    m, piv = rref(rows)
    n = len(m[0])
    basis = []
    for free in (c for c in range(n) if c not in piv):
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for r, pc in enumerate(piv):
            v[pc] = -m[r][free]
        basis.append(v)
    return basis


def mat_vec(m, v) -> list[Fraction]:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m]


def mat_mul(a, b) -> Matrix:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def same_row_span(a, b) -> bool:
    """rank(A) = rank(B) = rank(A stacked on B)."""
    ra, rb = rank(a), rank(b)
    return ra == rb == rank(list(a) + list(b))


def row_span_contains(a, b) -> bool:
    """True iff every row of b lies in the row span of a."""
    return rank(list(a) + list(b)) == rank(a)


def coordinates(basis, v) -> list[Fraction] | None:
    """Coefficients c with sum c_i basis_i = v, or None when v is outside the span."""
    k = len(basis)
    if k == 0:
        return [] if not any(v) else None
    # columns are basis vectors, augmented with v
    aug = [[basis[i][r] for i in range(k)] + [v[r]] for r in range(len(v))]
    m, piv = rref(aug)
    if k in piv:
        return None
    coeffs = [Fraction(0)] * k
    for r, pc in enumerate(piv):
        coeffs[pc] = m[r][k]
    return coeffs


def charpoly(m) -> list[Fraction]:
    """Characteristic polynomial det(t I - M), coefficients low to high.

    Faddeev-LeVerrier recursion; exact over the rationals.
    """
    m = to_fractions(m)
    n = len(m)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = identity(n)
    for k in range(1, n + 1):
        am = mat_mul(m, mk)
        c = -sum((am[i][i] for i in range(n)), Fraction(0)) / k
        coeffs[n - k] = c
        mk = [[am[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
    return coeffs


def _numbers_to_fractions(m) -> list[list]:
    # ints would otherwise divide into floats; other ring elements pass through
    return [[Fraction(v) if isinstance(v, int) else v for v in row] for row in m]


def det_fraction_free(m, exact_div: Callable | None = None, zero=0, one=1):
    """Bareiss determinant over an integral domain.

    ``exact_div(a, b)`` must return a/b when b divides a exactly; it defaults
    to ``/`` (right for Fractions and for Polynomials, whose ``/`` is exact
    division).
    """
    div = exact_div or (lambda a, b: a / b)
    a = _numbers_to_fractions(m)
    n = len(a)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if a[k][k] == zero:
            swap = next((i for i in range(k + 1, n) if a[i][k] != zero), None)
            if swap is None:
                return zero
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def rank_fraction_free(m, exact_div: Callable | None = None, zero=0) -> int:
    """Rank over the fraction field by fraction-free (Bareiss) elimination."""
    div = exact_div or (lambda a, b: a / b)
    a = _numbers_to_fractions(m)
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    prev = None
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != zero), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                num = a[i][j] * a[r][c] - a[i][c] * a[r][j]
                a[i][j] = num if prev is None else div(num, prev)
            a[i][c] = zero
        prev = a[r][c]
        r += 1
        if r == nrows:
            break
    return r


def numeric_nullspace(m, tol: float = 1e-9) -> np.ndarray:
    """Columns spanning the numerical kernel of a float matrix.

    Gaussian elimination with partial pivoting; a pivot below ``tol`` (scaled
    by the matrix norm) is treated as zero.
    """
    a = np.array(m, dtype=float)
    nrows, ncols = a.shape
    scale = max(1.0, float(np.max(np.abs(a))) if a.size else 1.0)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = r + int(np.argmax(np.abs(a[r:, c])))
        if abs(a[piv, c]) <= tol * scale:
            a[r:, c] = 0.0
            continue
        a[[r, piv]] = a[[piv, r]]
        a[r] /= a[r, c]
        for i in range(nrows):
            if i != r:
                a[i] -= a[i, c] * a[r]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = np.zeros((ncols, len(free)))
    for k, f in enumerate(free):
        basis[f, k] = 1.0
        for row, pc in enumerate(pivots):
            basis[pc, k] = -a[row, f]
    return basis


def numeric_rank(m, tol: float = 1e-9) -> int:
    a = np.atleast_2d(np.array(m, dtype=float))
    if a.size == 0:
        return 0
    return a.shape[1] - numeric_nullspace(a, tol).shape[1]


def is_zero_vector(v: Sequence) -> bool:
    return not any(v)
