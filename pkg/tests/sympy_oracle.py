"""Independent reference computations in sympy, sharing no code with argshift.

Used to derive expected values before they are frozen into tests.
"""

from __future__ import annotations

import itertools
import json
from pathlib import Path

import sympy as sp

CATALOG = Path(__file__).resolve().parents[1] / "src" / "argshift" / "data" / "catalog.json"


def load(name):
    for obj in json.loads(CATALOG.read_text()):
        if obj["name"] == name:
            return obj
    raise KeyError(name)


def symbols(n):
    return sp.symbols(f"x1:{n + 1}")


def structure_matrix(obj):
    n = obj["dim"]
    xs = symbols(n)
    A = sp.zeros(n, n)
    for key, coeffs in obj["brackets"].items():
        i, j = (int(s) - 1 for s in key.split(","))
        val = sum(sp.Rational(v) * xs[int(k) - 1] for k, v in coeffs.items())
        A[i, j] += val
        A[j, i] -= val
    return A, xs


def index(obj):
    A, _ = structure_matrix(obj)
    return obj["dim"] - A.rank()


def fundamental_semiinvariant(obj):
    """gcd of principal t-minors' determinants is p_g^2; take the square root by factoring."""
    A, xs = structure_matrix(obj)
    n = obj["dim"]
    t = n - index(obj)
    dets = [sp.expand(A.extract(list(s), list(s)).det()) for s in itertools.combinations(range(n), t)]
    g = sp.Integer(0)
    for d in dets:
        g = sp.gcd(g, d)
    if g == 0 or not g.free_symbols:
        return sp.Integer(1), xs
    _, factors = sp.factor_list(g)
    root = sp.Integer(1)
    for f, e in factors:
        assert e % 2 == 0
        root *= f ** (e // 2)
    return sp.expand(root), xs


def shift_coefficients(f, xs, a):
    lam = sp.Symbol("lam")
    shifted = sp.expand(f.subs({x: ai + lam * x for x, ai in zip(xs, a)}, simultaneous=True))
    poly = sp.Poly(shifted, lam)
    return [c for (k,), c in poly.terms() if k > 0]


def family_generators(obj, a, kind):
    A, xs = structure_matrix(obj)
    n = obj["dim"]
    casimirs = [sp.sympify(c.replace("^", "**"), locals={f"x{i + 1}": xs[i] for i in range(n)})
                for c in obj["casimirs"]]
    gens = []
    for c in casimirs:
        gens += shift_coefficients(c, xs, a)
    if kind in ("Ftilde", "Fsi"):
        pg, _ = fundamental_semiinvariant(obj)
        gens += shift_coefficients(pg, xs, a)
    if kind == "Fsi":
        for s in obj["semi_invariants"]:
            g = sp.sympify(s.replace("^", "**"), locals={f"x{i + 1}": xs[i] for i in range(n)})
            gens += shift_coefficients(g, xs, a)
    return gens, xs


def symbolic_trdeg(obj, a, kind):
    """Rank of the Jacobian of the generators over the rational function field."""
    gens, xs = family_generators(obj, a, kind)
    if not gens:
        return 0
    return sp.Matrix([[sp.diff(g, x) for x in xs] for g in gens]).rank()


if __name__ == "__main__":
    for obj in json.loads(CATALOG.read_text()):
        ind = index(obj)
        pg, _ = fundamental_semiinvariant(obj)
        a = [sp.Integer(k + 2) ** 2 + k for k in range(obj["dim"])]
        ranks = [symbolic_trdeg(obj, a, kind) for kind in ("Fa", "Ftilde", "Fsi")]
        print(f"{obj['name']}: ind {ind}, p_g = {pg}, trdeg Fa/Ftilde/Fsi = {ranks}, "
              f"bound {(obj['dim'] + ind) // 2}")
