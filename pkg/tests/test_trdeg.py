import random

import pytest
import sympy as sp

from argshift.semiinv import as_semiinvariant
from argshift.shifts import FA, FSI, FTILDE, extended_family, semiinvariant_family, shift_family
from argshift.trdeg import (BoundExceeded, check_bound, completeness_bound, differential_matrix,
                            root_coefficient_span_check, span_dimension, verify_trdeg_equality)
from argshift.verify import choose_regular_point

from conftest import CATALOG, P, alg

import sympy_oracle

TRDEG = {"abelian3": (3, 3, 3), "aff1": (0, 1, 1), "heisenberg3": (1, 1, 1), "sl2": (2, 2, 2),
         "aff1+aff1": (0, 2, 2), "heisenberg3+aff1": (1, 2, 2)}
BOUND = {"abelian3": 3, "aff1": 1, "heisenberg3": 2, "sl2": 2, "aff1+aff1": 2, "heisenberg3+aff1": 3}


def families(entry, a):
    L = entry.algebra
    return (shift_family(L, a, entry.casimirs), extended_family(L, a, entry.casimirs),
            semiinvariant_family(L, a, entry.casimirs, entry.semi_invariants))


@pytest.mark.parametrize("name", sorted(TRDEG))
def test_span_dimensions(name):
    entry = CATALOG[name]
    rng = random.Random(21)
    a = choose_regular_point(entry.algebra, rng)
    dims = tuple(span_dimension(f, rng) for f in families(entry, a))
    assert dims == TRDEG[name]
    assert completeness_bound(entry.algebra) == BOUND[name]


@pytest.mark.parametrize("name", sorted(TRDEG))
def test_span_dimensions_match_symbolic_rank(name):
    a = choose_regular_point(alg(name), random.Random(2))
    obj = sympy_oracle.load(name)
    want = tuple(sympy_oracle.symbolic_trdeg(obj, [sp.Rational(str(v)) for v in a], k) for k in (FA, FTILDE, FSI))
    assert want == TRDEG[name]


def test_differential_matrix():
    assert differential_matrix([P("x1*x2", 2), P("x2^2", 2)], [3, 5]) == [[5, 3], [0, 10]]


def test_check_bound():
    L = alg("aff1")
    check_bound(L, 1)
    with pytest.raises(BoundExceeded):
        check_bound(L, 2)


@pytest.mark.parametrize("name", sorted(TRDEG))
def test_trdeg_equality(name):
    entry = CATALOG[name]
    rng = random.Random(8)
    a = choose_regular_point(entry.algebra, rng)
    _, ft, fs = families(entry, a)
    verdict = verify_trdeg_equality(entry.algebra, ft, fs, rng)
    assert verdict.passed
    assert verdict.ftilde == verdict.fsi == TRDEG[name][1]


def test_trdeg_equality_catches_a_bad_family():
    entry = CATALOG["heisenberg3+aff1"]
    L = entry.algebra
    a = [1, 2, 3, 5, 7]
    ft = extended_family(L, a, entry.casimirs)
    fs = semiinvariant_family(L, a, entry.casimirs, entry.semi_invariants)
    fs.generators.append(P("x1", 5))  # not a shift of anything
    verdict = verify_trdeg_equality(L, ft, fs, random.Random(0))
    assert not verdict.passed and verdict.fsi == 3


def test_family_above_the_bound_is_an_error():
    L = alg("aff1+aff1")
    a = [1, 2, 3, 5]
    fs = semiinvariant_family(L, a, [], [as_semiinvariant(L, P("x2", 4))])
    fs.generators.append(P("x1", 4))
    with pytest.raises(BoundExceeded):
        verify_trdeg_equality(L, extended_family(L, a, []), fs, random.Random(0))


def test_root_coefficient_span_check():
    L = alg("aff1+aff1")
    a = [1, 2, 3, 5]
    g = P("x2*x4", 4)
    ok = root_coefficient_span_check(L, a, g, [7, 4, 1, 15])
    assert ok.passed is True
    # x = a gives a double root at lam = 1
    skipped = root_coefficient_span_check(L, a, g, [1, 2, 3, 5])
    assert skipped.skipped and skipped.reason == "non-simple root"
