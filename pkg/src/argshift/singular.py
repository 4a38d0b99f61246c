"""Codimension-one singular components and the completeness verdict.

The codimension-one part of the singular set is taken to be the zero locus of
the fundamental semi-invariant p_g; its components are the irreducible factors
of p_g. A component is good when the coadjoint stabilizer at a generic point
of it is aff(1) + abelian.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import linalg
from .liealg import LieAlgebra, is_aff1_plus_abelian, stabilizer
from .pfaffian import fundamental_semiinvariant
from .poly import Polynomial, rational_roots, real_roots_numeric, restrict_to_line
from .semiinv import (IncompleteFactorization, SemiInvariant, as_semiinvariant, factor_semiinvariant,
                      find_semiinvariants)

AFF_ABELIAN = "AffAbelian"
NOT_AFF_ABELIAN = "NotAffAbelian"
UNDETERMINED = "Undetermined"

COMPLETE = "Complete"
INCOMPLETE = "Incomplete"

DEFAULT_POINTS = 5
DEFAULT_ATTEMPTS = 20
ROOT_TOL = 1e-12
RANK_TOL = 1e-9


class NoPointFound(RuntimeError):
    pass


@dataclass
class SampledPoint:
    coords: list  # Fractions when exact, floats when numeric
    exact: bool
    residual: float = 0.0  # |h(y)| for numeric points

    def to_list(self) -> list[str]:
        return [str(v) if self.exact else repr(float(v)) for v in self.coords]


def sample_on_hypersurface(h: Polynomial, rng: random.Random, attempts: int = DEFAULT_ATTEMPTS,
                           bound: int = 999, numeric_fallback: bool = True) -> SampledPoint:
    """A point of {h = 0}: fix all but one variable at random integers, solve for the last.

    Variables in which h has low degree are tried first, so linear factors always
    give exact points.
    """
    if h.is_constant():
        raise ValueError("hypersurface of a constant polynomial")
    n = h.nvars
    order = sorted(h.variables(), key=lambda v: (h.degree_in(v), v))
    pending_numeric = None
    for attempt in range(attempts):
        var = order[attempt % len(order)]
        base = [Fraction(rng.randint(-bound, bound)) for _ in range(n)]
        base[var] = Fraction(0)
        direction = [Fraction(int(k == var)) for k in range(n)]
        coeffs = restrict_to_line(h, base, direction)
        if len(coeffs) < 2:
            continue
        roots = rational_roots(coeffs)
        if roots:
            r = roots[rng.randrange(len(roots))][0]
            base[var] = r
            assert h(base) == 0
            return SampledPoint(base, True)
        if pending_numeric is None:
            real = real_roots_numeric(coeffs)
            if real:
                pending_numeric = (base, var, real[0], coeffs)
    if numeric_fallback and pending_numeric is not None:
        base, var, root, coeffs = pending_numeric
        root = _newton(coeffs, root)
        y = [float(v) for v in base]
        y[var] = root
        residual = abs(_eval_float(h, y))
        if residual > ROOT_TOL * max(1.0, _scale(h, y)):
            raise NoPointFound(f"numeric root of {h} did not converge (residual {residual:.3g})")
        return SampledPoint(y, False, residual)
    raise NoPointFound(f"no point found on {{{h} = 0}} after {attempts} attempts")


def _newton(coeffs, x0: float, steps: int = 50) -> float:
    c = [float(v) for v in coeffs]
    dc = [k * v for k, v in enumerate(c)][1:]
    x = x0
    for _ in range(steps):
        fx = np.polyval(c[::-1], x)
        dfx = np.polyval(dc[::-1], x)
        if dfx == 0:
            break
        step = fx / dfx
        x -= step
        if abs(step) <= 1e-16 * max(1.0, abs(x)):
            break
    return float(x)


def _eval_float(h: Polynomial, y) -> float:
    return float(sum(float(c) * np.prod([v ** e for v, e in zip(y, m)]) for m, c in h.terms.items()))


def _scale(h: Polynomial, y) -> float:
    return float(sum(abs(float(c)) * np.prod([abs(v) ** e for v, e in zip(y, m)]) for m, c in h.terms.items()))


@dataclass
class PointClass:
    point: SampledPoint
    stabilizer_dim: int
    singular: bool
    aff_abelian: bool

    def to_dict(self) -> dict:
        return {
            "point": self.point.to_list(),
            "exact": self.point.exact,
            "stabilizer_dim": self.stabilizer_dim,
            "singular": self.singular,
            "aff_abelian": self.aff_abelian,
        }


@dataclass
class ComponentVerdict:
    factor: SemiInvariant
    points: list[PointClass] = field(default_factory=list)
    generic_class: str = UNDETERMINED
    numeric_flag: bool = False
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "factor": self.factor.to_dict(),
            "generic_class": self.generic_class,
            "numeric": self.numeric_flag,
            "note": self.note,
            "points": [p.to_dict() for p in self.points],
        }


def _numeric_is_aff1_plus_abelian(L: LieAlgebra, y, tol: float = RANK_TOL) -> tuple[int, bool]:
    """Stabilizer dimension and the aff(1) + abelian test at a floating-point point."""
    n = L.dim
    C = np.array([[[float(L.c(i, j, k)) for k in range(n)] for j in range(n)] for i in range(n)])
    A = np.einsum("ijk,k->ij", C, np.asarray(y, dtype=float))
    basis = linalg.numeric_nullspace(A, tol).T
    m = len(basis)
    brackets = [np.einsum("i,j,ijk->k", basis[p], basis[q], C) for p in range(m) for q in range(p + 1, m)]
    if not brackets or linalg.numeric_rank(brackets, tol) != 1:
        return m, False
    z = max(brackets, key=np.linalg.norm)
    z = z / np.linalg.norm(z)
    central = all(np.linalg.norm(np.einsum("i,j,ijk->k", b, z, C)) <= tol * max(1.0, np.linalg.norm(b))
                  for b in basis)
    return m, not central


def classify_component(L: LieAlgebra, factor: SemiInvariant, rng: random.Random,
                       points: int = DEFAULT_POINTS, numeric_fallback: bool = True) -> ComponentVerdict:
    """Classify the stabilizer at ``points`` sampled points of {factor = 0}."""
    verdict = ComponentVerdict(factor)
    for _ in range(points):
        try:
            pt = sample_on_hypersurface(factor.poly, rng, numeric_fallback=numeric_fallback)
        except NoPointFound as exc:
            verdict.note = str(exc)
            continue
        if pt.exact:
            S = stabilizer(L, pt.coords)
            dim, aff = S.dim, is_aff1_plus_abelian(S)
        else:
            verdict.numeric_flag = True
            dim, aff = _numeric_is_aff1_plus_abelian(L, pt.coords)
        verdict.points.append(PointClass(pt, dim, dim > L.index, aff))
    usable = [p for p in verdict.points if p.singular]
    if not usable:
        verdict.generic_class = UNDETERMINED
    elif any(not p.aff_abelian and p.point.exact for p in usable):
        verdict.generic_class = NOT_AFF_ABELIAN
    elif all(p.aff_abelian for p in usable):
        verdict.generic_class = AFF_ABELIAN
    else:
        verdict.generic_class = UNDETERMINED
    return verdict


def sing0_components(L: LieAlgebra, p_g: Polynomial | None = None,
                     pool: Sequence[SemiInvariant] | None = None, rng: random.Random | None = None):
    """Distinct irreducible factors of p_g as semi-invariants (empty when p_g is constant)."""
    p_g = fundamental_semiinvariant(L) if p_g is None else p_g
    if p_g.is_constant():
        return []
    if pool is None:
        pool = list(find_semiinvariants(L, max(1, p_g.degree()), rng or random.Random(0)))
        pool += [as_semiinvariant(L, s) for s in L.known_semi_invariants]
    factors = factor_semiinvariant(L, as_semiinvariant(L, p_g), pool)
    return [h for h, _ in factors]


@dataclass
class CompletenessVerdict:
    verdict: str
    p_g: Polynomial
    components: list[ComponentVerdict] = field(default_factory=list)
    numeric_flag: bool = False
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "p_g": str(self.p_g),
            "numeric": self.numeric_flag,
            "note": self.note,
            "components": [c.to_dict() for c in self.components],
        }


def completeness_verdict(L: LieAlgebra, rng: random.Random, points: int = DEFAULT_POINTS,
                         numeric_fallback: bool = True, p_g: Polynomial | None = None,
                         pool: Sequence[SemiInvariant] | None = None) -> CompletenessVerdict:
    """Complete iff every codimension-one singular component is generically aff(1) + abelian."""
    p_g = fundamental_semiinvariant(L) if p_g is None else p_g
    if p_g.is_constant():
        return CompletenessVerdict(COMPLETE, p_g, note="p_g is constant: no codimension-one singular set")
    try:
        comps = sing0_components(L, p_g, pool, rng)
    except IncompleteFactorization as exc:
        return CompletenessVerdict(UNDETERMINED, p_g, note=str(exc))
    verdicts = [classify_component(L, h, rng, points, numeric_fallback) for h in comps]
    numeric = any(v.numeric_flag for v in verdicts)
    classes = [v.generic_class for v in verdicts]
    if all(c == AFF_ABELIAN for c in classes):
        result = COMPLETE
    elif NOT_AFF_ABELIAN in classes:
        result = INCOMPLETE
    else:
        result = UNDETERMINED
    return CompletenessVerdict(result, p_g, verdicts, numeric)
