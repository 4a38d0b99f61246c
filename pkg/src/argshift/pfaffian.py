"""Pfaffians of skew polynomial matrices and the fundamental semi-invariant."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .liealg import LieAlgebra, SkewPolyMatrix, structure_matrix
from .poly import Polynomial, gcd_many


@dataclass(frozen=True)
class SubPfaffian:
    indices: tuple[int, ...]  # 0-based, strictly increasing
    value: Polynomial


def _pfaffian_entries(entries, nvars: int) -> Polynomial:
    memo: dict[tuple[int, ...], Polynomial] = {}

    def pf(idx: tuple[int, ...]) -> Polynomial:
        if not idx:
            return Polynomial.constant(1, nvars)
        if idx in memo:
            return memo[idx]
        first, rest = idx[0], idx[1:]
        total = Polynomial.zero(nvars)
        for pos, j in enumerate(rest):
            a = entries[first][j]
            if not a:
                continue
            term = a * pf(rest[:pos] + rest[pos + 1:])
            total = total + term if pos % 2 == 0 else total - term
        memo[idx] = total
        return total

    return pf(tuple(range(len(entries))))


def pfaffian(M: SkewPolyMatrix | list, nvars: int | None = None) -> Polynomial:
    """Pf(M) by expansion along the first row, memoized on index subsets."""
    if not isinstance(M, SkewPolyMatrix):
        M = SkewPolyMatrix(M)
    n = M.size
    if n % 2:
        raise ValueError(f"Pfaffian of an odd-size ({n}) matrix")
    if nvars is None:
        if n == 0:
            raise ValueError("nvars is required for the empty matrix")
        nvars = M[0, 0].nvars
    return _pfaffian_entries(M.entries, nvars)


def sub_pfaffians(L: LieAlgebra, t: int) -> list[SubPfaffian]:
    """Pfaffians of all principal t x t submatrices of A_x, in lexicographic subset order."""
    if t % 2 or not 0 <= t <= L.dim:
        raise ValueError(f"t must be even with 0 <= t <= {L.dim}, got {t}")
    A = structure_matrix(L)
    out = []
    for idx in itertools.combinations(range(L.dim), t):
        sub = [[A.entries[i][j] for j in idx] for i in idx]
        out.append(SubPfaffian(idx, _pfaffian_entries(sub, L.dim)))
    return out


def fundamental_semiinvariant(L: LieAlgebra, index: int | None = None) -> Polynomial:
    """p_g: gcd of the nonzero principal sub-Pfaffians of size dim - ind."""
    ind = L.index if index is None else index
    t = L.dim - ind
    values = [sp.value for sp in sub_pfaffians(L, t) if sp.value]
    g = gcd_many(values)
    if g.is_constant():
        return Polynomial.constant(1, L.dim)
    return g
