"""Differential spans of generator families and transcendence-degree checks.

The transcendence degree of a finitely generated family is the generic rank
of the matrix of generator gradients; it is estimated from below by exact
ranks at random integer points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .liealg import DEFAULT_COEFF_BOUND, LieAlgebra, random_point
from .poly import Polynomial, as_fraction, rational_roots, shift_expand, upoly_squarefree
from .semiinv import SemiInvariant
from .shifts import GeneratorFamily, root_covectors, root_polynomial

DEFAULT_SAMPLES = 12


class BoundExceeded(AssertionError):
    pass


def differential_matrix(family: GeneratorFamily | Sequence[Polynomial], x: Sequence) -> list[list[Fraction]]:
    gens = list(getattr(family, "generators", family))
    x = [as_fraction(v) for v in x]
    return [[d(x) for d in g.gradient()] for g in gens]


@dataclass
class SpanSample:
    point: list[Fraction]
    kind: str
    rank: int
    basis: list[list[Fraction]]


def span_samples(family: GeneratorFamily, rng: random.Random, samples: int = DEFAULT_SAMPLES,
                 bound: int = DEFAULT_COEFF_BOUND, nvars: int | None = None) -> list[SpanSample]:
    n = nvars if nvars is not None else len(family.base_point)
    out = []
    for _ in range(samples):
        x = random_point(rng, n, bound)
        D = differential_matrix(family, x)
        basis = linalg.row_basis(D) if D else []
        out.append(SpanSample(x, getattr(family, "kind", ""), len(basis), basis))
    return out


def span_dimension(family: GeneratorFamily, rng: random.Random, samples: int = DEFAULT_SAMPLES,
                   bound: int = DEFAULT_COEFF_BOUND) -> int:
    """Maximum exact differential rank over random integer points."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    return max(s.rank for s in span_samples(family, rng, samples, bound))


def completeness_bound(L: LieAlgebra) -> int:
    total = L.dim + L.index
    assert total % 2 == 0
    return total // 2


def check_bound(L: LieAlgebra, value: int, what: str = "family"):
    if value > completeness_bound(L):
        raise BoundExceeded(f"{what} has span dimension {value} > (dim + ind)/2 = {completeness_bound(L)}")


@dataclass
class TrdegVerdict:
    ftilde: int
    fsi: int
    bound: int
    samples: int
    equal_span_points: int = 0
    span_mismatches: list[list[str]] = field(default_factory=list)
    containment_failures: list[list[str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.ftilde == self.fsi and not self.span_mismatches and not self.containment_failures

    def to_dict(self) -> dict:
        return {
            "verdict": "PASS" if self.passed else "FAIL",
            "trdeg_ftilde": self.ftilde,
            "trdeg_fsi": self.fsi,
            "bound": self.bound,
            "samples": self.samples,
            "equal_span_points": self.equal_span_points,
            "span_mismatches": self.span_mismatches,
            "containment_failures": self.containment_failures,
        }


def verify_trdeg_equality(L: LieAlgebra, ftilde: GeneratorFamily, fsi: GeneratorFamily,
                          rng: random.Random, samples: int = DEFAULT_SAMPLES,
                          bound: int = DEFAULT_COEFF_BOUND) -> TrdegVerdict:
    """Compare generic differential ranks of F~_a and F^si_a on shared sample points.

    Where F~_a attains its maximal rank, the two differential spans must coincide.
    """
    points = [random_point(rng, L.dim, bound) for _ in range(samples)]
    rows_t = [differential_matrix(ftilde, x) for x in points]
    rows_s = [differential_matrix(fsi, x) for x in points]
    ranks_t = [linalg.rank(r) if r else 0 for r in rows_t]
    ranks_s = [linalg.rank(r) if r else 0 for r in rows_s]
    verdict = TrdegVerdict(max(ranks_t), max(ranks_s), completeness_bound(L), samples)
    check_bound(L, verdict.ftilde, "F~_a")
    check_bound(L, verdict.fsi, "F^si_a")
    for x, rt, rs, kt in zip(points, rows_t, rows_s, ranks_t):
        label = [str(v) for v in x]
        if rt and not linalg.row_span_contains(rs, rt):
            verdict.containment_failures.append(label)
        if kt == verdict.ftilde:
            if linalg.same_row_span(rt, rs) if rt else not any(map(any, rs)):
                verdict.equal_span_points += 1
            else:
                verdict.span_mismatches.append(label)
    return verdict


@dataclass
class SpanCheck:
    passed: bool | None  # None when skipped
    reason: str = ""

    @property
    def skipped(self) -> bool:
        return self.passed is None


def root_coefficient_span_check(L: LieAlgebra, a: Sequence, g: SemiInvariant | Polynomial,
                                x: Sequence) -> SpanCheck:
    """span(d lam_1..d lam_d) == span(d g_1..d g_m) at x.

    The lam_i are the roots of lam -> g(x - lam*a) and the g_i are the
    coefficients of g(a + lam*x). Skipped unless every root is rational and simple.
    """
    poly = g.poly if isinstance(g, SemiInvariant) else g
    coeffs = root_polynomial(poly, a, x)
    if not coeffs:
        return SpanCheck(None, "vanishes on the line")
    if len(coeffs) - 1 < poly.degree():
        return SpanCheck(None, "root at infinity")
    roots = rational_roots(coeffs)
    if len(upoly_squarefree(coeffs)) != len(coeffs):
        return SpanCheck(None, "non-simple root")
    if len(roots) != len(coeffs) - 1:
        return SpanCheck(None, "irrational root")
    covs = root_covectors(L, a, poly, x)
    if any(c.degenerate for c in covs):
        return SpanCheck(None, "degenerate root")
    lam_span = [list(c.covector) for c in covs]
    coeff_span = differential_matrix(shift_expand(poly, a)[1:], x)
    return SpanCheck(linalg.same_row_span(lam_span, coeff_span))
