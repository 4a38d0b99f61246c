"""Lie-Poisson and frozen-argument brackets, and bi-involution checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .liealg import LieAlgebra
from .poly import Polynomial, as_fraction


def _check(L: LieAlgebra, *polys: Polynomial):
    for p in polys:
        if p.nvars != L.dim:
            raise ValueError(f"polynomial in {p.nvars} variables, algebra has dimension {L.dim}")


def _bracket(L: LieAlgebra, f: Polynomial, g: Polynomial, coeff) -> Polynomial:
    n = L.dim
    df = [f.derivative(i) for i in range(n)]
    dg = [g.derivative(j) for j in range(n)]
    out = Polynomial.zero(n)
    for i in range(n):
        if not df[i]:
            continue
        for j in range(n):
            if not dg[j] or i == j:
                continue
            w = sum((coeff(k) * L.c(i, j, k) for k in range(n) if L.c(i, j, k)), Polynomial.zero(n))
            if w:
                out = out + w * df[i] * dg[j]
    return out


def lie_poisson(L: LieAlgebra, f: Polynomial, g: Polynomial) -> Polynomial:
    """{f, g}(x) = sum_{i,j,k} c_ij^k x_k df/dx_i dg/dx_j."""
    _check(L, f, g)
    n = L.dim
    xs = [Polynomial.variable(k, n) for k in range(n)]
    return _bracket(L, f, g, lambda k: xs[k])


def frozen(L: LieAlgebra, a: Sequence, f: Polynomial, g: Polynomial) -> Polynomial:
    """{f, g}_a = sum_{i,j,k} c_ij^k a_k df/dx_i dg/dx_j."""
    _check(L, f, g)
    if len(a) != L.dim:
        raise ValueError(f"base point has length {len(a)}, expected {L.dim}")
    a = [as_fraction(v) for v in a]
    return _bracket(L, f, g, lambda k: a[k])


@dataclass(frozen=True)
class Violation:
    i: int
    j: int
    bracket: str  # "lie_poisson" or "frozen"
    residual: Polynomial


@dataclass
class InvolutionReport:
    size: int
    violations: list[Violation] = field(default_factory=list)

    @property
    def bi_involutive(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "bi_involutive": self.bi_involutive,
            "violations": [
                {"pair": [v.i, v.j], "bracket": v.bracket, "residual": str(v.residual)}
                for v in self.violations
            ],
        }


def involution_report(L: LieAlgebra, a: Sequence, family) -> InvolutionReport:
    """Test every unordered pair of generators under both brackets.

    ``family`` is a GeneratorFamily or a plain sequence of polynomials.
    """
    gens = list(getattr(family, "generators", family))
    report = InvolutionReport(len(gens))
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            r = lie_poisson(L, gens[i], gens[j])
            if r:
                report.violations.append(Violation(i, j, "lie_poisson", r))
            r = frozen(L, a, gens[i], gens[j])
            if r:
                report.violations.append(Violation(i, j, "frozen", r))
    return report
