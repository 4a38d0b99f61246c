"""The three commutative families F_a, F~_a, F^si_a, and root covectors."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .liealg import LieAlgebra, evaluate_matrix, is_regular
from .pfaffian import fundamental_semiinvariant
from .poly import (Polynomial, as_fraction, rational_roots, restrict_to_line, shift_expand, trim,
                   upoly_squarefree)
from .semiinv import SemiInvariant, verify_semiinvariant

FA, FTILDE, FSI = "Fa", "Ftilde", "Fsi"


class NonInvariantInput(ValueError):
    pass


class IrregularBasePoint(ValueError):
    pass


@dataclass(frozen=True)
class Provenance:
    source: str  # e.g. "casimir[0]", "p_g", "semi[1]"
    poly: Polynomial
    power: int


@dataclass
class GeneratorFamily:
    kind: str
    base_point: tuple[Fraction, ...]
    generators: list[Polynomial] = field(default_factory=list)
    provenance: list[list[Provenance]] = field(default_factory=list)

    def add(self, poly: Polynomial, tag: Provenance):
        """Append a generator; a repeated polynomial only gains a provenance tag."""
        if poly.is_constant():
            return
        for k, g in enumerate(self.generators):
            if g == poly:
                self.provenance[k].append(tag)
                return
        self.generators.append(poly)
        self.provenance.append([tag])

    def extended(self, kind: str) -> "GeneratorFamily":
        return GeneratorFamily(kind, self.base_point, list(self.generators),
                               [list(p) for p in self.provenance])

    def __len__(self):
        return len(self.generators)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "base_point": [str(v) for v in self.base_point],
            "generators": [
                {"poly": str(g), "from": [{"source": t.source, "power": t.power} for t in tags]}
                for g, tags in zip(self.generators, self.provenance)
            ],
        }


def _base_point(L: LieAlgebra, a: Sequence) -> tuple[Fraction, ...]:
    a = tuple(as_fraction(v) for v in a)
    if len(a) != L.dim:
        raise ValueError(f"base point has length {len(a)}, expected {L.dim}")
    if not is_regular(L, a):
        raise IrregularBasePoint(f"{[str(v) for v in a]} is not regular")
    return a


def _add_shifts(family: GeneratorFamily, source: str, poly: Polynomial):
    for power, coeff in enumerate(shift_expand(poly, family.base_point)):
        if power:
            family.add(coeff, Provenance(source, poly, power))


def shift_family(L: LieAlgebra, a: Sequence, invariants: Sequence[Polynomial]) -> GeneratorFamily:
    """F_a: the positive-power coefficients of f(a + lam*x) over the invariants f."""
    fam = GeneratorFamily(FA, _base_point(L, a))
    for k, f in enumerate(invariants):
        w = verify_semiinvariant(L, f) if f else None
        if w is None or any(w):
            raise NonInvariantInput(f"{f} is not an invariant of {L.name or 'the algebra'}")
        _add_shifts(fam, f"casimir[{k}]", f)
    return fam


def extended_family(L: LieAlgebra, a: Sequence, invariants: Sequence[Polynomial],
                    p_g: Polynomial | None = None) -> GeneratorFamily:
    """F~_a: F_a plus the shift coefficients of the fundamental semi-invariant."""
    fam = shift_family(L, a, invariants).extended(FTILDE)
    _add_shifts(fam, "p_g", fundamental_semiinvariant(L) if p_g is None else p_g)
    return fam


def semiinvariant_family(L: LieAlgebra, a: Sequence, invariants: Sequence[Polynomial],
                         semis: Sequence[SemiInvariant], p_g: Polynomial | None = None) -> GeneratorFamily:
    """F^si_a: F~_a plus the shift coefficients of every supplied semi-invariant."""
    fam = extended_family(L, a, invariants, p_g).extended(FSI)
    for k, s in enumerate(semis):
        if verify_semiinvariant(L, s.poly) != tuple(s.weight):
            raise ValueError(f"{s.poly} does not have the stated weight")
        _add_shifts(fam, f"semi[{k}]", s.poly)
    return fam


def default_lambdas(L: LieAlgebra) -> list[Fraction]:
    return [Fraction(v) for v in range(L.dim + 3)]


@dataclass
class KernelSpan:
    basis: list[list[Fraction]]
    accepted: list[Fraction]
    skipped: list[Fraction]

    @property
    def dim(self) -> int:
        return len(self.basis)


def kernel_span(L: LieAlgebra, a: Sequence, x: Sequence, lambdas: Sequence | None = None) -> KernelSpan:
    """Sum of Ker(A_x - lam*A_a) over the lam where the pencil has maximal rank."""
    a = _base_point(L, a)
    x = [as_fraction(v) for v in x]
    lambdas = default_lambdas(L) if lambdas is None else [as_fraction(v) for v in lambdas]
    generic_rank = L.dim - L.index
    Ax, Aa = evaluate_matrix(L, x), evaluate_matrix(L, a)
    vectors, accepted, skipped = [], [], []
    for lam in lambdas:
        M = [[u - lam * v for u, v in zip(ru, rv)] for ru, rv in zip(Ax, Aa)]
        if linalg.rank(M) != generic_rank:
            skipped.append(lam)
            continue
        accepted.append(lam)
        vectors.extend(linalg.nullspace(M, L.dim))
    return KernelSpan(linalg.row_basis(vectors) if vectors else [], accepted, skipped)


@dataclass(frozen=True)
class RootCovector:
    """A rational root lam of g(x - lam*a) and its differential d(lam) at x.

    ``covector`` is None for a degenerate root, where <grad g(x - lam*a), a> = 0.
    """

    lam: Fraction
    covector: tuple[Fraction, ...] | None

    @property
    def degenerate(self) -> bool:
        return self.covector is None


class ZeroRestriction(ValueError):
    """g vanishes identically on the line x - lam*a; resample x."""


def root_polynomial(g: Polynomial, a: Sequence, x: Sequence) -> list[Fraction]:
    """Coefficients (low to high) of lam -> g(x - lam*a)."""
    return restrict_to_line(g, x, [-as_fraction(v) for v in a])


def root_covectors(L: LieAlgebra, a: Sequence, g: SemiInvariant | Polynomial, x: Sequence) -> list[RootCovector]:
    """Rational roots of g(x - lam*a) = 0 with d(lam) = grad g(y) / <grad g(y), a>, y = x - lam*a.

    Each covector is checked to lie in Ker(A_x - lam*A_a).
    """
    poly = g.poly if isinstance(g, SemiInvariant) else g
    a = [as_fraction(v) for v in a]
    x = [as_fraction(v) for v in x]
    coeffs = root_polynomial(poly, a, x)
    if not coeffs:
        raise ZeroRestriction(f"{poly} vanishes on the whole line")
    if len(coeffs) == 1:
        return []
    grad = poly.gradient()
    Ax, Aa = evaluate_matrix(L, x), evaluate_matrix(L, a)
    out = []
    for lam, _ in rational_roots(coeffs):
        y = [xv - lam * av for xv, av in zip(x, a)]
        dg = [p(y) for p in grad]
        denom = sum((u * v for u, v in zip(dg, a)), Fraction(0))
        if not denom:
            out.append(RootCovector(lam, None))
            continue
        cov = tuple(v / denom for v in dg)
        M = [[u - lam * v for u, v in zip(ru, rv)] for ru, rv in zip(Ax, Aa)]
        assert not any(linalg.mat_vec(M, cov)), f"d(lam) for lam={lam} is not in Ker(A_x - lam A_a)"
        out.append(RootCovector(lam, cov))
    return out


def distinct_root_count(g: SemiInvariant | Polynomial, a: Sequence, x: Sequence) -> int:
    """Number of distinct complex roots of lam -> g(x - lam*a)."""
    poly = g.poly if isinstance(g, SemiInvariant) else g
    coeffs = trim(root_polynomial(poly, a, x))
    if not coeffs:
        raise ZeroRestriction(f"{poly} vanishes on the whole line")
    return len(upoly_squarefree(coeffs)) - 1
