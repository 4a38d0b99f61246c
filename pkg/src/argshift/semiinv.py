"""Semi-invariants of the coadjoint action: verification, search, factorization.

A nonzero g is a semi-invariant with weight chi when, for every basis index i,

    sum_{k,j} c_ij^k x_k dg/dx_j = chi_i * g.

The left side is the operator L_i applied to g; L_i is the action of e_i
on polynomials (``L_i g = {x_i, g}``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .liealg import LieAlgebra
from .poly import Monomial, Polynomial, rational_roots, upoly_squarefree

DEFAULT_T_BOUND = 997


@dataclass(frozen=True)
class SemiInvariant:
    poly: Polynomial
    weight: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return self.poly.degree()

    @property
    def is_invariant(self) -> bool:
        return not any(self.weight)

    def to_dict(self) -> dict:
        return {"poly": str(self.poly), "weight": [str(w) for w in self.weight]}


class NotSemiInvariant(ValueError):
    pass


class IncompleteFactorization(ArithmeticError):
    def __init__(self, factors, cofactor: Polynomial):
        super().__init__(f"no pool element divides the cofactor {cofactor}")
        self.factors = factors
        self.cofactor = cofactor


def apply_action(L: LieAlgebra, i: int, g: Polynomial) -> Polynomial:
    """L_i g = sum_{k,j} c_ij^k x_k dg/dx_j."""
    n = L.dim
    out = Polynomial.zero(n)
    for j in range(n):
        coeffs = L.bracket_vector(i, j)
        if not any(coeffs):
            continue
        dg = g.derivative(j)
        if dg:
            out = out + Polynomial.linear_form(coeffs, n) * dg
    return out


def verify_semiinvariant(L: LieAlgebra, g: Polynomial) -> tuple[Fraction, ...] | None:
    """Weight of g, or None if g is not a semi-invariant."""
    if g.is_zero():
        raise ValueError("the zero polynomial is not a semi-invariant")
    lm = g.leading_monomial()
    lc = g.coefficient(lm)
    weight = []
    for i in range(L.dim):
        h = apply_action(L, i, g)
        chi = h.coefficient(lm) / lc
        if h != g.scale(chi):
            return None
        weight.append(chi)
    return tuple(weight)


def as_semiinvariant(L: LieAlgebra, g: Polynomial) -> SemiInvariant:
    w = verify_semiinvariant(L, g)
    if w is None:
        raise NotSemiInvariant(f"{g} is not a semi-invariant")
    return SemiInvariant(g, w)


def monomial_basis(n: int, d: int) -> list[Monomial]:
    """Exponent tuples of total degree d, descending graded-lex order."""
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for e in range(left, -1, -1):
            rec(prefix + (e,), left - e, slots - 1)

    if n == 0:
        return [()] if d == 0 else []
    rec((), d, n)
    return out


def weight_operators(L: LieAlgebra, d: int) -> list[list[list[Fraction]]]:
    """Matrices of L_1..L_n on degree-d forms in :func:`monomial_basis` order.

    Column c holds the coordinates of L_i applied to the c-th basis monomial.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    n = L.dim
    basis = monomial_basis(n, d)
    pos = {m: r for r, m in enumerate(basis)}
    mats = []
    for i in range(n):
        M = [[Fraction(0)] * len(basis) for _ in basis]
        for c, mono in enumerate(basis):
            image = apply_action(L, i, Polynomial({mono: 1}, n))
            for m, v in image.terms.items():
                M[pos[m]][c] = v
        mats.append(M)
    return mats


def _combine(mats, coeffs, size):
    out = [[Fraction(0)] * size for _ in range(size)]
    for M, t in zip(mats, coeffs):
        if t:
            for r in range(size):
                row, src = out[r], M[r]
                for c in range(size):
                    if src[c]:
                        row[c] += t * src[c]
    return out


def _restrict(M, basis):
    """Matrix of M on the invariant subspace spanned by ``basis`` (list of column vectors)."""
    cols = []
    for b in basis:
        coords = linalg.coordinates(basis, linalg.mat_vec(M, b))
        if coords is None:
            raise AssertionError("subspace is not invariant under the operator")
        cols.append(coords)
    return [list(row) for row in zip(*cols)] if cols else []


def _shift_identity(M, mu):
    return [[v - (mu if r == c else 0) for c, v in enumerate(row)] for r, row in enumerate(M)]


@dataclass
class SemiInvariantSearch:
    max_degree: int
    found: list[SemiInvariant] = field(default_factory=list)
    irrational_degrees: list[int] = field(default_factory=list)

    def __iter__(self):
        return iter(self.found)

    def __len__(self):
        return len(self.found)

    def to_dict(self) -> dict:
        return {
            "max_degree": self.max_degree,
            "found": [s.to_dict() for s in self.found],
            "irrational_degrees": list(self.irrational_degrees),
        }


def _joint_eigenspaces(L: LieAlgebra, d: int, rng: random.Random):
    """Rational joint eigenspaces of L_1..L_n on degree-d forms.

    Weights vanish on the derived algebra, so joint eigenvectors live in the
    common kernel K of the derived-algebra operators. K is invariant under every
    L_i and the restrictions commute there, so a generic combination T splits K.
    Yields (weight, basis vectors in monomial coordinates) and a flag telling
    whether T had eigenvalues outside the rationals.
    """
    n = L.dim
    mats = weight_operators(L, d)
    size = len(mats[0])
    derived = linalg.row_basis([L.bracket_vector(i, j) for i in range(n) for j in range(i + 1, n)])
    stacked = []
    for dv in derived:
        stacked.extend(_combine(mats, dv, size))
    K = linalg.nullspace(stacked, size) if stacked else linalg.identity(size)
    if not K:
        return [], False
    R = [_restrict(M, K) for M in mats]
    m = len(K)
    for i in range(n):
        for j in range(i + 1, n):
            assert linalg.mat_mul(R[i], R[j]) == linalg.mat_mul(R[j], R[i]), "restricted operators must commute"

    def spectrum(M):
        cp = linalg.charpoly(M)
        return cp, rational_roots(cp)

    for attempt in range(2):
        t = [rng.randint(1, DEFAULT_T_BOUND) for _ in range(n)]
        T = _combine(R, t, m)
        cp, roots = spectrum(T)
        if len(upoly_squarefree(cp)) == len(cp):
            break
    irrational = sum(mult for _, mult in roots) < m

    results = []
    for mu, _ in roots:
        E = linalg.nullspace(_shift_identity(T, mu), m)
        spaces = [(E, [])]
        for i in range(n):
            refined = []
            for W, chi in spaces:
                Ri = _restrict(R[i], W)
                for nu, _ in spectrum(Ri)[1] if Ri else []:
                    sub = linalg.nullspace(_shift_identity(Ri, nu), len(W))
                    # back to coordinates w.r.t. K
                    W2 = [[sum((c * w[r] for c, w in zip(s, W)), Fraction(0)) for r in range(m)] for s in sub]
                    refined.append((W2, chi + [nu]))
            spaces = refined
        for W, chi in spaces:
            vecs = [[sum((c * kv[r] for c, kv in zip(w, K)), Fraction(0)) for r in range(size)] for w in W]
            results.append((tuple(chi), linalg.row_basis(vecs)))
    return results, irrational


def find_semiinvariants(L: LieAlgebra, max_degree: int, rng: random.Random | None = None) -> SemiInvariantSearch:
    """Rational semi-invariants of degree <= max_degree.

    Products of lower-degree findings are dropped; elements of a
    multi-dimensional weight space are represented by an echelon basis.
    """
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    rng = rng or random.Random(0)
    n = L.dim
    search = SemiInvariantSearch(max_degree)
    for d in range(1, max_degree + 1):
        basis = monomial_basis(n, d)
        spaces, irrational = _joint_eigenspaces(L, d, rng)
        if irrational:
            search.irrational_degrees.append(d)
        lower = list(search.found)
        batch = []
        for chi, vecs in spaces:
            for v in vecs:
                g = Polynomial({m: c for m, c in zip(basis, v)}, n).primitive()
                if any(h.poly.divides(g) for h in lower):
                    continue
                w = verify_semiinvariant(L, g)
                assert w == chi, f"weight mismatch for {g}: {w} vs {chi}"
                batch.append(SemiInvariant(g, w))
        batch.sort(key=lambda s: _poly_order_key(s.poly), reverse=True)
        search.found.extend(batch)
    return search


def _poly_order_key(p: Polynomial):
    return [(sum(m), m, c) for m, c in p.items()]


def pool_order(pool: Iterable[SemiInvariant]) -> list[SemiInvariant]:
    """Lowest degree first; graded-lex descending within a degree."""
    by_degree: dict[int, list[SemiInvariant]] = {}
    for s in pool:
        by_degree.setdefault(s.degree, []).append(s)
    out = []
    for d in sorted(by_degree):
        out.extend(sorted(by_degree[d], key=lambda s: _poly_order_key(s.poly), reverse=True))
    return out


def factor_semiinvariant(L: LieAlgebra, g: SemiInvariant, pool: Sequence[SemiInvariant]):
    """Split g into pool elements by greedy exact division.

    Returns [(factor, multiplicity), ...]. Raises IncompleteFactorization
    (carrying the partial result) when a nonconstant cofactor remains.
    """
    cofactor = g.poly
    factors: list[tuple[SemiInvariant, int]] = []
    for h in pool_order(pool):
        if h.poly.is_constant():
            continue
        mult = 0
        while not cofactor.is_constant():
            q, r = cofactor.divmod(h.poly)
            if r:
                break
            cofactor, mult = q, mult + 1
        if mult:
            factors.append((h, mult))
        if cofactor.is_constant():
            break
    if not cofactor.is_constant():
        raise IncompleteFactorization(factors, cofactor)
    total = [sum((m * h.weight[i] for h, m in factors), Fraction(0)) for i in range(L.dim)]
    assert tuple(total) == tuple(g.weight), "factor weights do not add up"
    return factors
