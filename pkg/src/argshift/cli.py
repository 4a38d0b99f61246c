"""Command-line interface: ``argshift <command> [catalog.json] [options]``."""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from .catalog import CatalogError, load_catalog
from .liealg import LieAlgebraError, index_of
from .pfaffian import fundamental_semiinvariant, sub_pfaffians
from .poly import PolynomialSyntaxError
from .semiinv import find_semiinvariants
from .shifts import FA, FSI, FTILDE, extended_family, semiinvariant_family, shift_family
from .singular import completeness_verdict
from .trdeg import completeness_bound, span_dimension
from .verify import VerifyOptions, choose_regular_point, run_verify, semi_pool

FAMILY_NAMES = {"fa": FA, "ftilde": FTILDE, "fsi": FSI}


def _on_off(value: str) -> bool:
    if value not in ("on", "off"):
        raise argparse.ArgumentTypeError("expected 'on' or 'off'")
    return value == "on"


def _point(value: str) -> list[Fraction]:
    try:
        return [Fraction(v.strip()) for v in value.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", nargs="?", help="catalog JSON (default: bundled catalog)")
    common.add_argument("--algebra", help="only process the entry with this name")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--samples", type=int, default=12)
    common.add_argument("--coeff-bound", type=int, default=999)
    common.add_argument("--numeric-fallback", type=_on_off, default=True, metavar="on|off")

    parser = argparse.ArgumentParser(prog="argshift", description="Argument-shift families of Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="check structure constants and invariants")
    sub.add_parser("index", parents=[common], help="index of each algebra")
    sub.add_parser("pfaff", parents=[common], help="fundamental semi-invariant")
    p = sub.add_parser("semiinv", parents=[common], help="search for semi-invariants")
    p.add_argument("--max-degree", type=int, default=2)
    p = sub.add_parser("families", parents=[common], help="generators of F_a, F~_a, F^si_a")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--point", type=_point, help='base point "r1,...,rn"')
    group.add_argument("--random-regular", action="store_true", help="random regular base point (default)")
    p.add_argument("--max-degree", type=int)
    p = sub.add_parser("trdeg", parents=[common], help="generic differential rank of a family")
    p.add_argument("--family", choices=sorted(FAMILY_NAMES), default="ftilde")
    p.add_argument("--point", type=_point)
    p.add_argument("--max-degree", type=int)
    sub.add_parser("completeness", parents=[common], help="completeness verdict")
    p = sub.add_parser("verify", parents=[common], help="full verification report")
    p.add_argument("--json", dest="json_out", help="write the JSON report to this file")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--point", type=_point)
    return parser.parse_args(argv)


def _entries(args):
    entries = load_catalog(args.file)
    if args.algebra:
        entries = [e for e in entries if e.name == args.algebra]
        if not entries:
            raise CatalogError(f"no algebra named {args.algebra!r}")
    return entries


def _families(entry, args, rng):
    L = entry.algebra
    p_g = fundamental_semiinvariant(L)
    if args.point is not None and len(args.point) != L.dim:
        raise ValueError(f"{entry.name}: --point has {len(args.point)} coordinates, expected {L.dim}")
    a = args.point if args.point is not None else choose_regular_point(L, rng)
    D = args.max_degree or max(2, p_g.degree())
    pool = semi_pool(L, entry.semi_invariants, find_semiinvariants(L, D, rng).found)
    return a, {
        FA: shift_family(L, a, entry.casimirs),
        FTILDE: extended_family(L, a, entry.casimirs, p_g),
        FSI: semiinvariant_family(L, a, entry.casimirs, pool, p_g),
    }


def main(argv: list[str] | None = None) -> int:
    args = _parse_args(argv)
    try:
        entries = _entries(args)
    except (CatalogError, LieAlgebraError, PolynomialSyntaxError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    status = 0
    if args.command == "validate":
        for e in entries:
            print(f"{e.name}: dim {e.dim}, {len(e.casimirs)} casimirs, "
                  f"{len(e.semi_invariants)} semi-invariants: OK")
    elif args.command == "index":
        for e in entries:
            sampled = index_of(e.algebra, random.Random(args.seed), args.samples, bound=args.coeff_bound)
            print(f"{e.name}: ind = {e.algebra.index} (sampled {sampled}), "
                  f"bound (dim+ind)/2 = {completeness_bound(e.algebra)}")
    elif args.command == "pfaff":
        for e in entries:
            L = e.algebra
            t = L.dim - L.index
            nonzero = sum(1 for s in sub_pfaffians(L, t) if s.value)
            print(f"{e.name}: p_g = {fundamental_semiinvariant(L)}  (t = {t}, {nonzero} nonzero sub-Pfaffians)")
    elif args.command == "semiinv":
        for e in entries:
            search = find_semiinvariants(e.algebra, args.max_degree, random.Random(args.seed))
            print(f"{e.name}:")
            for s in search:
                print(f"  {s.poly}  weight ({', '.join(map(str, s.weight))})")
            if search.irrational_degrees:
                print(f"  note: non-rational eigenvalues at degrees {search.irrational_degrees}")
    elif args.command == "families":
        for e in entries:
            a, fams = _families(e, args, random.Random(args.seed))
            print(f"{e.name}: a = ({', '.join(map(str, a))})")
            for k, fam in fams.items():
                print(f"  {k}: {{{', '.join(str(g) for g in fam.generators)}}}")
    elif args.command == "trdeg":
        for e in entries:
            rng = random.Random(args.seed)
            a, fams = _families(e, args, rng)
            fam = fams[FAMILY_NAMES[args.family]]
            dim = span_dimension(fam, rng, args.samples, args.coeff_bound)
            print(f"{e.name}: trdeg {fam.kind} = {dim} (bound {completeness_bound(e.algebra)})")
    elif args.command == "completeness":
        for e in entries:
            cv = completeness_verdict(e.algebra, random.Random(args.seed), numeric_fallback=args.numeric_fallback)
            comps = ", ".join(f"{c.factor.poly}: {c.generic_class}" for c in cv.components)
            print(f"{e.name}: {cv.verdict}" + (f"  [{comps}]" if comps else "")
                  + ("  (numeric)" if cv.numeric_flag else ""))
    elif args.command == "verify":
        opts = VerifyOptions(samples=args.samples, coeff_bound=args.coeff_bound,
                             numeric_fallback=args.numeric_fallback, max_degree=args.max_degree,
                             point=args.point)
        reports = []
        for e in entries:
            start = time.perf_counter()
            rep = run_verify(e, args.seed, opts)
            elapsed = time.perf_counter() - start
            reports.append(rep)
            mark = "PASS" if rep["passed"] else "FAIL"
            sd = rep["span_dimension"]
            print(f"[{mark}] {e.name}: ind {rep['index']}, p_g = {rep['p_g']}, "
                  f"trdeg Fa/Ftilde/Fsi = {sd[FA]}/{sd[FTILDE]}/{sd[FSI]} (bound {rep['completeness_bound']}), "
                  f"{rep['completeness']['verdict']}  ({elapsed:.2f}s)")
            for f in rep["failures"]:
                print(f"    - {f}")
            if not rep["passed"]:
                status = 1
        if args.json_out:
            with open(args.json_out, "w") as fh:
                json.dump({"schema": "argshift-report/1", "seed": args.seed, "reports": reports},
                          fh, indent=2, sort_keys=True)
                fh.write("\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
