"""Lie algebras from structure constants: structure matrix, index, stabilizers."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from . import linalg
from .poly import Polynomial, as_fraction

DEFAULT_INDEX_SAMPLES = 8
DEFAULT_COEFF_BOUND = 999


class LieAlgebraError(ValueError):
    pass


class JacobiViolation(LieAlgebraError):
    def __init__(self, triple, residual):
        i, j, k = triple
        super().__init__(
            f"Jacobi identity fails on (e{i + 1}, e{j + 1}, e{k + 1}); residual {list(map(str, residual))}"
        )
        self.triple = triple
        self.residual = residual


class AntisymmetryViolation(LieAlgebraError):
    pass


class ClosureFailure(AssertionError):
    pass


class LieAlgebra:
    """Finite-dimensional Lie algebra with basis e_1..e_n.

    ``constants[(i, j)][k]`` is c_ij^k for i < j (0-based), i.e.
    [e_i, e_j] = sum_k c_ij^k e_k. Construct through :func:`validate`.
    """

    def __init__(self, dim: int, constants: Mapping[tuple[int, int], Mapping[int, Fraction]],
                 name: str = "", casimirs: Sequence[Polynomial] = (),
                 known_semi_invariants: Sequence[Polynomial] = ()):
        self.dim = dim
        self.name = name
        self.constants = {key: dict(val) for key, val in constants.items() if any(val.values())}
        self.casimirs = tuple(casimirs)
        self.known_semi_invariants = tuple(known_semi_invariants)
        n = dim
        c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for (i, j), coeffs in self.constants.items():
            for k, v in coeffs.items():
                c[i][j][k] = v
                c[j][i][k] = -v
        self._c = c

    def c(self, i: int, j: int, k: int) -> Fraction:
        return self._c[i][j][k]

    def bracket_vector(self, i: int, j: int) -> list[Fraction]:
        return list(self._c[i][j])

    def bracket(self, u: Sequence, v: Sequence) -> list[Fraction]:
        """[u, v] for coordinate vectors u, v in the basis e_1..e_n."""
        out = [Fraction(0)] * self.dim
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                w = ui * vj
                for k, ck in enumerate(self._c[i][j]):
                    if ck:
                        out[k] += w * ck
        return out

    def nonzero_constants(self):
        """Iterate (i, j, k, c_ij^k) over all ordered pairs with c nonzero."""
        n = self.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    v = self._c[i][j][k]
                    if v:
                        yield i, j, k, v

    @cached_property
    def index(self) -> int:
        """ind g, certified by symbolic rank of the structure matrix."""
        return index_of(self, exact=True)

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim})"


def jacobi_residual(c, n, i, j, k) -> list[Fraction]:
    # [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
    out = [Fraction(0)] * n
    for a, b, d in ((i, j, k), (j, k, i), (k, i, j)):
        for m in range(n):
            cm = c[b][d][m]
            if cm:
                for l in range(n):
                    out[l] += cm * c[a][m][l]
    return out


def validate(raw: Mapping, n: int, name: str = "", casimirs=(), known_semi_invariants=()) -> LieAlgebra:
    """Build a LieAlgebra from raw constants ``{(i, j): {k: value}}`` (0-based).

    Pairs may be given in either order; a pair given both ways must agree
    up to sign.
    """
    constants: dict[tuple[int, int], dict[int, Fraction]] = {}
    seen: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), coeffs in raw.items():
        for idx in (i, j, *coeffs):
            if not 0 <= idx < n:
                raise LieAlgebraError(f"index {idx + 1} out of range 1..{n}")
        vals = {k: as_fraction(v) for k, v in coeffs.items() if as_fraction(v)}
        if i == j:
            if vals:
                raise AntisymmetryViolation(f"[e{i + 1}, e{i + 1}] must vanish")
            continue
        key, sign = ((i, j), 1) if i < j else ((j, i), -1)
        oriented = {k: sign * v for k, v in vals.items()}
        if key in seen and seen[key] != oriented:
            raise AntisymmetryViolation(
                f"[e{key[0] + 1}, e{key[1] + 1}] and [e{key[1] + 1}, e{key[0] + 1}] are not opposite"
            )
        seen[key] = oriented
        if oriented:
            constants[key] = oriented
    L = LieAlgebra(n, constants, name=name)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                res = jacobi_residual(L._c, n, i, j, k)
                if any(res):
                    raise JacobiViolation((i, j, k), res)
    L.casimirs = tuple(casimirs)
    L.known_semi_invariants = tuple(known_semi_invariants)
    return L


class SkewPolyMatrix:
    """Skew-symmetric matrix with Polynomial entries."""

    def __init__(self, entries: Sequence[Sequence[Polynomial]]):
        n = len(entries)
        for i in range(n):
            if len(entries[i]) != n:
                raise ValueError("matrix is not square")
            if entries[i][i]:
                raise ValueError(f"diagonal entry ({i + 1},{i + 1}) is nonzero")
            for j in range(i + 1, n):
                if entries[i][j] != -entries[j][i]:
                    raise ValueError(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) are not opposite")
        self.entries = [list(row) for row in entries]

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def submatrix(self, indices: Sequence[int]) -> "SkewPolyMatrix":
        return SkewPolyMatrix([[self.entries[i][j] for j in indices] for i in indices])

    def evaluate(self, point: Sequence) -> list[list[Fraction]]:
        return [[e(point) for e in row] for row in self.entries]


def structure_matrix(L: LieAlgebra) -> SkewPolyMatrix:
    """A_x with entries sum_k c_ij^k x_k."""
    n = L.dim
    return SkewPolyMatrix(
        [[Polynomial.linear_form(L._c[i][j], n) for j in range(n)] for i in range(n)]
    )


def evaluate_matrix(L: LieAlgebra, a: Sequence) -> list[list[Fraction]]:
    """The numeric structure matrix A_a."""
    if len(a) != L.dim:
        raise ValueError(f"point has length {len(a)}, expected {L.dim}")
    a = [as_fraction(v) for v in a]
    n = L.dim
    return [
        [sum((ck * ak for ck, ak in zip(L._c[i][j], a) if ck), Fraction(0)) for j in range(n)]
        for i in range(n)
    ]


def random_point(rng: random.Random, n: int, bound: int = DEFAULT_COEFF_BOUND) -> list[Fraction]:
    return [Fraction(rng.randint(-bound, bound)) for _ in range(n)]


def index_of(L: LieAlgebra, rng: random.Random | None = None, samples: int = DEFAULT_INDEX_SAMPLES,
             exact: bool = False, bound: int = DEFAULT_COEFF_BOUND) -> int:
    """ind g = n - generic rank of A_x.

    By default the rank is maximized over ``samples`` random integer points
    (exact at each point). ``exact=True`` computes the rank of A_x over the
    field of rational functions instead.
    """
    n = L.dim
    if exact:
        entries = structure_matrix(L).entries
        return n - linalg.rank_fraction_free(entries)
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = rng or random.Random(0)
    best = 0
    for _ in range(samples):
        best = max(best, linalg.rank(evaluate_matrix(L, random_point(rng, n, bound))))
    return n - best


def is_regular(L: LieAlgebra, a: Sequence, index: int | None = None) -> bool:
    ind = L.index if index is None else index
    return linalg.rank(evaluate_matrix(L, a)) == L.dim - ind


@dataclass
class Subalgebra:
    """Subalgebra of ``ambient`` spanned by ``basis``; ``induced_c[p][q]`` holds
    the coordinates of [b_p, b_q] in that basis."""

    ambient: LieAlgebra
    basis: list[list[Fraction]]
    induced_c: list[list[list[Fraction]]] = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def bracket(self, u: Sequence, v: Sequence) -> list[Fraction]:
        """Bracket of two vectors given in subalgebra coordinates."""
        m = self.dim
        out = [Fraction(0)] * m
        for p in range(m):
            if not u[p]:
                continue
            for q in range(m):
                if v[q]:
                    w = u[p] * v[q]
                    for r in range(m):
                        out[r] += w * self.induced_c[p][q][r]
        return out


def subalgebra(L: LieAlgebra, basis: Sequence[Sequence]) -> Subalgebra:
    basis = [[as_fraction(v) for v in b] for b in basis]
    if linalg.rank(basis) != len(basis):
        raise ValueError("basis vectors are linearly dependent")
    m = len(basis)
    induced = [[[Fraction(0)] * m for _ in range(m)] for _ in range(m)]
    for p in range(m):
        for q in range(p + 1, m):
            coords = linalg.coordinates(basis, L.bracket(basis[p], basis[q]))
            if coords is None:
                raise ClosureFailure(f"bracket of basis vectors {p + 1},{q + 1} leaves the span")
            induced[p][q] = coords
            induced[q][p] = [-v for v in coords]
    return Subalgebra(L, basis, induced)


def stabilizer(L: LieAlgebra, y: Sequence) -> Subalgebra:
    """g_y = {xi : ad*_xi y = 0} = Ker A_y."""
    return subalgebra(L, linalg.nullspace(evaluate_matrix(L, y), L.dim))


def derived_span(S: Subalgebra) -> list[list[Fraction]]:
    m = S.dim
    unit = linalg.identity(m)
    vecs = [S.bracket(unit[p], unit[q]) for p in range(m) for q in range(p + 1, m)]
    return linalg.row_basis(vecs) if vecs else []


def is_aff1_plus_abelian(S: Subalgebra) -> bool:
    """True iff S is isomorphic to aff(1) + abelian.

    A Lie algebra whose derived algebra is one-dimensional is either
    Heisenberg-plus-abelian (derived algebra central) or aff(1)-plus-abelian
    (derived algebra not central).
    """
    derived = derived_span(S)
    if len(derived) != 1:
        return False
    z = derived[0]
    unit = linalg.identity(S.dim)
    return any(any(S.bracket(e, z)) for e in unit)
