from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from argshift.poly import (Polynomial, PolynomialSyntaxError, evaluate, format_polynomial, gcd, gcd_many,
                           multiply, parse_polynomial, partial_derivative, rational_roots, shift_expand,
                           squarefree_part, upoly_eval)

from conftest import P

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def exponents(draw, nvars, total):
    # stars and bars: a random composition of ``total`` into nvars parts
    cuts = sorted(draw(st.lists(st.integers(0, total), min_size=nvars - 1, max_size=nvars - 1)))
    bounds = [0, *cuts, total]
    return tuple(bounds[k + 1] - bounds[k] for k in range(nvars))


def polys(nvars, max_deg=3, max_terms=5, homogeneous=None):
    if homogeneous is None:
        exps = st.integers(0, max_deg).flatmap(lambda d: exponents(nvars, d))
    else:
        exps = exponents(nvars, homogeneous)
    return st.lists(st.tuples(exps, small), max_size=max_terms).map(lambda t: Polynomial(dict(t), nvars))


def to_sympy(f):
    xs = sp.symbols(f"x1:{f.nvars + 1}")
    return sum((sp.Rational(c.numerator, c.denominator) * sp.Mul(*[x ** e for x, e in zip(xs, m)])
                for m, c in f.terms.items()), sp.Integer(0)), xs


# -- parsing ------------------------------------------------------------------

def test_parse_single_variable():
    assert parse_polynomial("x2", 2) == Polynomial.variable(1, 2)


def test_parse_like_terms_cancel():
    f = parse_polynomial("2/3*x1 - x1", 1)
    assert f.terms == {(1,): Fraction(-1, 3)}


def test_parse_format_roundtrip_casimir():
    f = parse_polynomial("x1^2 + 4*x2*x3", 3)
    assert format_polynomial(f) == "x1^2 + 4*x2*x3"
    assert parse_polynomial(format_polynomial(f), 3) == f


@pytest.mark.parametrize("text, pos", [("x1 + + x2", 5), ("x1 $ x2", 3), ("3/0*x1", 2), ("x1^", 3)])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(PolynomialSyntaxError) as err:
        parse_polynomial(text, 2)
    assert err.value.position == pos


def test_variable_out_of_range():
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("x3", 2)


def test_format_conventions():
    assert str(P("-x1 + 1/2*x2^2 - 3", 2)) == "1/2*x2^2 - x1 - 3"
    assert str(P("0", 2)) == "0"
    assert str(P("-x1", 1)) == "-x1"


@given(polys(3))
def test_roundtrip_property(f):
    assert parse_polynomial(format_polynomial(f), 3) == f


# -- arithmetic -----------------------------------------------------------------

def test_multiply_examples():
    assert multiply(P("x2", 4), P("x4", 4)) == P("x2*x4", 4)
    assert multiply(P("x2 - 1", 2), P("x2 + 1", 2)) == P("x2^2 - 1", 2)


def test_multiply_nvars_mismatch():
    with pytest.raises(ValueError):
        multiply(P("x1", 1), P("x1", 2))


@settings(max_examples=40)
@given(polys(4, 4), polys(4, 4))
def test_multiply_matches_sympy(f, g):
    fs, xs = to_sympy(f)
    gs, _ = to_sympy(g)
    assert to_sympy(f * g)[0] == sp.expand(fs * gs)
    if f and g:
        assert (f * g).degree() == f.degree() + g.degree()


@given(polys(3), polys(3), polys(3))
def test_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + g == g + f
    assert f - f == Polynomial.zero(3)


def test_partial_derivative_examples():
    assert partial_derivative(P("x2*x4", 4), 1) == P("x4", 4)
    assert partial_derivative(P("x1^2 + 4*x2*x3", 3), 0) == P("2*x1", 3)
    with pytest.raises(IndexError):
        partial_derivative(P("x1", 2), 2)


@given(polys(3, homogeneous=3))
def test_euler_identity(f):
    euler = sum((Polynomial.variable(j, 3) * f.derivative(j) for j in range(3)), Polynomial.zero(3))
    assert euler == f.scale(max(f.degree(), 0))


def test_evaluate_examples():
    assert evaluate(P("x2*x4", 4), [0, 1, 0, 1]) == 1
    assert evaluate(P("x1^2 + 4*x2*x3", 3), [1, 1, -1]) == -3
    with pytest.raises(ValueError):
        evaluate(P("x1", 2), [1])


@given(polys(3), polys(3), st.lists(small, min_size=3, max_size=3))
def test_evaluate_is_homomorphism(f, g, pt):
    assert evaluate(f * g, pt) == evaluate(f, pt) * evaluate(g, pt)
    assert evaluate(f + g, pt) == evaluate(f, pt) + evaluate(g, pt)


# -- shift expansion --------------------------------------------------------------

def test_shift_expand_examples():
    assert shift_expand(P("x1^2", 2), [1, 0]) == [P("1", 2), P("2*x1", 2), P("x1^2", 2)]
    assert shift_expand(P("x2*x4", 4), [0, 1, 0, 1]) == [P("1", 4), P("x2 + x4", 4), P("x2*x4", 4)]


@settings(max_examples=40)
@given(polys(3), st.lists(small, min_size=3, max_size=3))
def test_shift_expand_reconstructs(f, a):
    # lam becomes an extra formal variable x4
    coeffs = shift_expand(f, a)
    lam = Polynomial.variable(3, 4)
    lift = lambda p: Polynomial({m + (0,): c for m, c in p.terms.items()}, 4)
    lhs = sum((lift(c) * lam ** i for i, c in enumerate(coeffs)), Polynomial.zero(4))
    xs = [Polynomial.constant(a[k], 4) + lam * Polynomial.variable(k, 4) for k in range(3)]
    rhs = Polynomial.zero(4)
    for m, c in f.terms.items():
        term = Polynomial.constant(c, 4)
        for k, e in enumerate(m):
            term = term * xs[k] ** e
        rhs = rhs + term
    assert lhs == rhs
    assert coeffs[0] == Polynomial.constant(evaluate(f, a), 3)


@given(polys(3, homogeneous=3), st.lists(small, min_size=3, max_size=3))
def test_shift_expand_homogeneous(f, a):
    coeffs = shift_expand(f, a)
    for i, c in enumerate(coeffs):
        assert c.is_homogeneous() and (c.is_zero() or c.degree() == i)
    assert coeffs[-1] == f or f.is_zero()


@given(polys(3))
def test_shift_at_origin_gives_homogeneous_components(f):
    for i, c in enumerate(shift_expand(f, [0, 0, 0])):
        assert c == f.homogeneous_component(i)


# -- gcd and squarefree part --------------------------------------------------------

def test_gcd_many_examples():
    assert gcd_many([P("x2", 3), P("0", 3), P("0", 3)]) == P("x2", 3)
    assert gcd_many([P("2*x2", 3), P("-2*x3", 3), P("x1", 3)]) == P("1", 3)
    g = gcd_many([P("x2^2*x4", 4), P("x2*x4^2", 4)])
    assert g == P("x2*x4", 4)
    assert g.divides(P("x2^2*x4", 4)) and g.divides(P("x2*x4^2", 4))


def test_gcd_many_all_zero():
    with pytest.raises(ValueError):
        gcd_many([P("0", 2)])


def test_gcd_single_is_primitive_normalization():
    assert gcd_many([P("-6*x1^2 + 4*x2", 2)]) == P("3*x1^2 - 2*x2", 2)


@settings(max_examples=30, deadline=None)
@given(polys(3, 2, 3), polys(3, 2, 3), polys(3, 2, 3))
def test_gcd_against_sympy(f, g, h):
    a, b = f * h, g * h
    if not a or not b:
        return
    ours = gcd(a, b)
    assert ours.divides(a) and ours.divides(b)
    sa, xs = to_sympy(a)
    sb, _ = to_sympy(b)
    ref = sp.Poly(sp.gcd(sa, sb), *xs)
    assert ours.degree() == ref.total_degree()
    lc = ours.leading_coefficient()
    assert lc > 0 and ours.content() == 1


def test_squarefree_examples():
    assert squarefree_part(P("x2^2", 2)) == P("x2", 2)
    assert squarefree_part(P("x2*x4", 4)) == P("x2*x4", 4)
    c = P("x1^2 + 4*x2*x3", 3)
    s = squarefree_part(c * c)
    assert s == c and s * s == c * c


@settings(max_examples=25, deadline=None)
@given(polys(3, 2, 3), polys(3, 2, 3))
def test_squarefree_has_no_repeated_factor(f, g):
    h = f * f * g
    if h.is_constant():
        return
    s = squarefree_part(h)
    assert s.divides(h)
    assert gcd_many([s, *s.gradient()]).is_constant()


# -- univariate roots -------------------------------------------------------------------

def test_rational_roots_with_multiplicity():
    # (t - 2)^2 (t + 1/3) (t^2 + 1)
    f = [Fraction(2, 3), Fraction(-1, 1), Fraction(3, 1), Fraction(-14, 3), Fraction(5, 3), Fraction(-11, 3), Fraction(1)]
    t = sp.Symbol("t")
    expr = sp.expand((t - 2) ** 2 * (t + sp.Rational(1, 3)) * (t ** 2 + 1))
    f = [Fraction(str(c)) for c in reversed(sp.Poly(expr, t).all_coeffs())]
    assert rational_roots(f) == [(Fraction(-1, 3), 1), (Fraction(2), 2)]


@settings(max_examples=40)
@given(st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=7), min_size=1, max_size=5))
def test_rational_roots_recovers_planted_roots(roots):
    coeffs = [Fraction(1)]
    for r in roots:
        coeffs = [Fraction(0)] + coeffs
        for k in range(len(coeffs) - 1):
            coeffs[k] -= r * coeffs[k + 1]
    found = dict(rational_roots(coeffs))
    for r in set(roots):
        assert found[r] == roots.count(r)
    assert all(upoly_eval(coeffs, r) == 0 for r in found)
