"""End-to-end verification of one catalog entry, producing a JSON-ready report."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .brackets import involution_report
from .catalog import CatalogEntry
from .liealg import LieAlgebra, index_of, is_regular, random_point
from .pfaffian import fundamental_semiinvariant
from .poly import Polynomial
from .semiinv import SemiInvariant, find_semiinvariants, verify_semiinvariant
from .shifts import FA, FSI, FTILDE, extended_family, kernel_span, semiinvariant_family, shift_family
from .singular import UNDETERMINED, COMPLETE, completeness_verdict
from .trdeg import check_bound, completeness_bound, span_dimension, verify_trdeg_equality

SCHEMA = "argshift-report/1"
BASE_POINT_BOUND = 99


@dataclass
class VerifyOptions:
    samples: int = 12
    coeff_bound: int = 999
    numeric_fallback: bool = True
    max_degree: int | None = None
    point: Sequence | None = None
    component_points: int = 5


def choose_regular_point(L: LieAlgebra, rng: random.Random, bound: int = BASE_POINT_BOUND,
                         tries: int = 1000) -> list[Fraction]:
    for _ in range(tries):
        a = random_point(rng, L.dim, bound)
        if is_regular(L, a):
            return a
    raise RuntimeError(f"no regular point found for {L.name} after {tries} tries")


def has_full_invariant_set(L: LieAlgebra, invariants: Sequence[Polynomial], rng: random.Random,
                           samples: int = 4) -> bool:
    """True when the invariants have ind g independent differentials somewhere."""
    if len(invariants) < L.index:
        return False
    if L.index == 0:
        return True
    best = 0
    for _ in range(samples):
        x = random_point(rng, L.dim)
        best = max(best, linalg.rank([[d(x) for d in f.gradient()] for f in invariants]))
    return best == L.index


def semi_pool(L: LieAlgebra, entry_semis: Sequence[SemiInvariant], found: Sequence[SemiInvariant]):
    """Discovered semi-invariants followed by user-supplied ones not already present."""
    pool = list(found)
    seen = {s.poly for s in pool}
    for s in entry_semis:
        if s.poly.primitive() not in seen:
            pool.append(s)
            seen.add(s.poly.primitive())
    return pool


def run_verify(entry: CatalogEntry, seed: int = 42, options: VerifyOptions | None = None) -> dict:
    """Run the full pipeline for one algebra; the result is deterministic in (entry, seed, options)."""
    opts = options or VerifyOptions()
    rng = random.Random(seed)
    L = entry.algebra
    failures: list[str] = []
    report: dict = {"schema": SCHEMA, "algebra": entry.name, "dim": L.dim, "seed": seed,
                    "parameters": {"samples": opts.samples, "coeff_bound": opts.coeff_bound,
                                   "numeric_fallback": opts.numeric_fallback,
                                   "component_points": opts.component_points}}

    ind = L.index
    report["index"] = ind
    report["index_sampled"] = index_of(L, rng, 8, bound=opts.coeff_bound)
    if report["index_sampled"] != ind:
        failures.append("sampled index disagrees with symbolic index")

    p_g = fundamental_semiinvariant(L)
    report["p_g"] = str(p_g)
    pg_weight = verify_semiinvariant(L, p_g)
    report["p_g_weight"] = None if pg_weight is None else [str(w) for w in pg_weight]
    if pg_weight is None:
        failures.append("p_g is not a semi-invariant")

    D = opts.max_degree or max(2, p_g.degree())
    search = find_semiinvariants(L, D, rng)
    report["semi_invariants"] = search.to_dict()
    pool = semi_pool(L, entry.semi_invariants, search.found)

    a = list(opts.point) if opts.point is not None else choose_regular_point(L, rng)
    report["base_point"] = [str(v) for v in a]
    fa = shift_family(L, a, entry.casimirs)
    ftilde = extended_family(L, a, entry.casimirs, p_g)
    fsi = semiinvariant_family(L, a, entry.casimirs, pool, p_g)
    families = {FA: fa, FTILDE: ftilde, FSI: fsi}
    report["families"] = {k: f.to_dict() for k, f in families.items()}

    invol = {k: involution_report(L, a, f) for k, f in families.items()}
    report["involution"] = {k: r.to_dict() for k, r in invol.items()}
    for k, r in invol.items():
        if not r.bi_involutive:
            failures.append(f"{k} is not in bi-involution")

    bound = completeness_bound(L)
    spans = {k: span_dimension(f, rng, opts.samples, opts.coeff_bound) for k, f in families.items()}
    for k, v in spans.items():
        check_bound(L, v, k)
    report["span_dimension"] = spans
    report["completeness_bound"] = bound
    if not spans[FA] <= spans[FTILDE] <= spans[FSI]:
        failures.append("span dimensions are not monotone Fa <= Ftilde <= Fsi")

    trdeg = verify_trdeg_equality(L, ftilde, fsi, rng, opts.samples, opts.coeff_bound)
    report["trdeg_equality"] = trdeg.to_dict()
    if not trdeg.passed:
        failures.append("tr.deg F~_a != tr.deg F^si_a")

    full = has_full_invariant_set(L, entry.casimirs, rng)
    report["full_invariant_set"] = full
    if full:
        x = random_point(rng, L.dim, opts.coeff_bound)
        ks = kernel_span(L, a, x)
        report["kernel_span"] = {"point": [str(v) for v in x], "dim": ks.dim,
                                 "skipped_lambdas": [str(v) for v in ks.skipped]}
        if ks.dim != spans[FA]:
            failures.append("kernel-sum dimension differs from span dimension of F_a")

    cv = completeness_verdict(L, rng, opts.component_points, opts.numeric_fallback, p_g, pool)
    report["completeness"] = cv.to_dict()
    if cv.verdict != UNDETERMINED and full:
        consistent = (cv.verdict == COMPLETE) == (spans[FTILDE] == bound) == (spans[FSI] == bound)
        report["criterion_consistent"] = consistent
        if not consistent:
            failures.append("completeness verdict disagrees with the span-dimension bound test")

    observed = {"index": ind, "p_g": str(p_g), "completeness": cv.verdict, "bound": bound,
                "trdeg": {FA: spans[FA], FTILDE: spans[FTILDE], FSI: spans[FSI]}}
    for key, want in entry.expected.items():
        got = observed.get(key)
        if key == "trdeg":
            for fk, fv in want.items():
                if got.get(fk) != fv:
                    failures.append(f"expected trdeg {fk} = {fv}, got {got.get(fk)}")
        elif got != want:
            failures.append(f"expected {key} = {want!r}, got {got!r}")

    report["failures"] = failures
    report["passed"] = not failures
    return report
