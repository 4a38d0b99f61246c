"""Sparse multivariate polynomials with exact rational coefficients.

Variables are written ``x1 .. xn`` in text and addressed by 0-based index
in code. Terms are kept in a dict keyed by exponent tuples; the canonical
term order is graded lexicographic with ``x1 > x2 > ... > xn``.
"""

from __future__ import annotations

import itertools
import math
import re
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence

import numpy as np

Monomial = tuple[int, ...]


def _grlex_key(m: Monomial):
    return (sum(m), m)


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass int, Fraction or a string")
    return Fraction(value)


class Polynomial:
    """Immutable polynomial in ``nvars`` variables over the rationals."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None, nvars: int = 0):
        self.nvars = nvars
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} does not have {nvars} exponents")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = as_fraction(coeff)
            if c:
                clean[mono] = clean.get(mono, 0) + c
                if not clean[mono]:
                    del clean[mono]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction], nvars: int) -> "Polynomial":
        # trusted constructor: terms already nonzero Fractions
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, value, nvars: int) -> "Polynomial":
        c = as_fraction(value)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def variable(cls, index: int, nvars: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise IndexError(f"variable index {index} out of range for {nvars} variables")
        mono = tuple(1 if k == index else 0 for k in range(nvars))
        return cls._raw({mono: Fraction(1)}, nvars)

    @classmethod
    def linear_form(cls, coeffs: Sequence, nvars: int | None = None) -> "Polynomial":
        n = len(coeffs) if nvars is None else nvars
        terms = {}
        for k, c in enumerate(coeffs):
            c = as_fraction(c)
            if c:
                terms[tuple(1 if j == k else 0 for j in range(n))] = c
        return cls._raw(terms, n)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def degree_in(self, var: int) -> int:
        return max((m[var] for m in self._terms), default=-1)

    def variables(self) -> list[int]:
        return [k for k in range(self.nvars) if any(m[k] for m in self._terms)]

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def homogeneous_component(self, d: int) -> "Polynomial":
        return Polynomial._raw({m: c for m, c in self._terms.items() if sum(m) == d}, self.nvars)

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self._terms, key=_grlex_key)

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.leading_monomial()]

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
            return other
        return Polynomial.constant(other, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "Polynomial":
        c = as_fraction(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw({m: v * c for m, v in self._terms.items()}, self.nvars)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial._raw(out, self.nvars)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, Polynomial):
            return self.exact_div(c)
        return self.scale(1 / as_fraction(c))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, nvars={self.nvars})"

    def __str__(self):
        return format_polynomial(self)

    # -- division ---------------------------------------------------------

    def divmod(self, g: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Multivariate division by a single divisor in graded-lex order."""
        g = self._coerce(g)
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lm_g = g.leading_monomial()
        lc_g = g._terms[lm_g]
        rest = dict(self._terms)
        quot: dict[Monomial, Fraction] = {}
        rem: dict[Monomial, Fraction] = {}
        while rest:
            m = max(rest, key=_grlex_key)
            c = rest[m]
            if all(a >= b for a, b in zip(m, lm_g)):
                qm = tuple(a - b for a, b in zip(m, lm_g))
                qc = c / lc_g
                quot[qm] = quot.get(qm, 0) + qc
                for gm, gc in g._terms.items():
                    tm = tuple(a + b for a, b in zip(qm, gm))
                    s = rest.get(tm, 0) - qc * gc
                    if s:
                        rest[tm] = s
                    else:
                        rest.pop(tm, None)
            else:
                rem[m] = c
                del rest[m]
        return Polynomial(quot, self.nvars), Polynomial._raw(rem, self.nvars)

    def exact_div(self, g: "Polynomial") -> "Polynomial":
        q, r = self.divmod(g)
        if r:
            raise ArithmeticError(f"{g} does not divide {self}")
        return q

    def divides(self, f: "Polynomial") -> bool:
        """True iff self divides f."""
        return not f.divmod(self)[1]

    # -- calculus and evaluation -----------------------------------------

    def derivative(self, var: int) -> "Polynomial":
        if not 0 <= var < self.nvars:
            raise IndexError(f"variable index {var} out of range for {self.nvars} variables")
        out = {}
        for m, c in self._terms.items():
            e = m[var]
            if e:
                out[m[:var] + (e - 1,) + m[var + 1:]] = c * e
        return Polynomial._raw(out, self.nvars)

    def gradient(self) -> list["Polynomial"]:
        return [self.derivative(j) for j in range(self.nvars)]

    def __call__(self, point: Sequence) -> Fraction:
        return evaluate(self, point)

    # -- normalization ----------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self / c having coprime integer coefficients."""
        if not self._terms:
            return Fraction(0)
        nums = [c.numerator for c in self._terms.values()]
        dens = [c.denominator for c in self._terms.values()]
        return Fraction(reduce(math.gcd, nums), reduce(_lcm, dens))

    def primitive(self) -> "Polynomial":
        """Integer-coefficient, content-free, positive graded-lex leading coefficient."""
        if not self._terms:
            return self
        c = self.content()
        if self.leading_coefficient() < 0:
            c = -c
        return self.scale(1 / c)


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def multiply(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.nvars != g.nvars:
        raise ValueError(f"nvars mismatch: {f.nvars} vs {g.nvars}")
    return f * g


def partial_derivative(f: Polynomial, j: int) -> Polynomial:
    return f.derivative(j)


def evaluate(f: Polynomial, point: Sequence) -> Fraction:
    if len(point) != f.nvars:
        raise ValueError(f"point has length {len(point)}, expected {f.nvars}")
    pt = [as_fraction(v) for v in point]
    total = Fraction(0)
    for m, c in f._terms.items():
        term = c
        for v, e in zip(pt, m):
            if e:
                term *= v ** e
        total += term
    return total


def shift_expand(f: Polynomial, a: Sequence) -> list[Polynomial]:
    """Coefficients ``[f_0, ..., f_m]`` of ``f(a + lam*x) = sum lam^i f_i(x)``."""
    if len(a) != f.nvars:
        raise ValueError(f"base point has length {len(a)}, expected {f.nvars}")
    a = [as_fraction(v) for v in a]
    deg = max(f.degree(), 0)
    buckets: list[dict[Monomial, Fraction]] = [{} for _ in range(deg + 1)]
    for m, c in f._terms.items():
        for ks in itertools.product(*(range(e + 1) for e in m)):
            coeff = c
            for e, k, av in zip(m, ks, a):
                if k < e:
                    if not av:
                        coeff = 0
                        break
                    coeff *= math.comb(e, k) * av ** (e - k)
            if coeff:
                bucket = buckets[sum(ks)]
                s = bucket.get(ks, 0) + coeff
                if s:
                    bucket[ks] = s
                else:
                    del bucket[ks]
    return [Polynomial._raw(b, f.nvars) for b in buckets]


def restrict_to_line(f: Polynomial, base: Sequence, direction: Sequence) -> list[Fraction]:
    """Coefficients (low to high) of the univariate ``t -> f(base + t*direction)``."""
    return trim([c(direction) for c in shift_expand(f, base)])


# -- parsing and formatting ------------------------------------------------

class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>x(?P<idx>\d+))|(?P<op>[-+*/^]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            skipped = len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialSyntaxError(f"unexpected character {text[pos + skipped]!r}", pos + skipped)
        start = m.start(m.lastgroup if m.lastgroup != "idx" else "var")
        if m.group("num") is not None:
            tokens.append(("num", int(m.group("num")), start))
        elif m.group("var") is not None:
            tokens.append(("var", int(m.group("idx")), start))
        else:
            tokens.append((m.group("op"), None, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


def parse_polynomial(text: str, nvars: int) -> Polynomial:
    """Parse e.g. ``"x1^2 + 4*x2*x3"`` or ``"-2/3*x1 + 1"``."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos]

    def take(kind):
        nonlocal pos
        tok = tokens[pos]
        if tok[0] != kind:
            raise PolynomialSyntaxError(f"expected {kind}, found {tok[0]}", tok[2])
        pos += 1
        return tok

    def parse_power():
        if peek()[0] == "^":
            take("^")
            tok = take("num")
            if tok[1] < 1:
                raise PolynomialSyntaxError("exponent must be positive", tok[2])
            return tok[1]
        return 1

    def parse_var(exps):
        tok = take("var")
        if not 1 <= tok[1] <= nvars:
            raise PolynomialSyntaxError(f"variable x{tok[1]} out of range 1..{nvars}", tok[2])
        exps[tok[1] - 1] += parse_power()

    def parse_term():
        exps = [0] * nvars
        coeff = Fraction(1)
        if peek()[0] == "num":
            num = take("num")[1]
            den = 1
            if peek()[0] == "/":
                take("/")
                tok = take("num")
                if tok[1] == 0:
                    raise PolynomialSyntaxError("zero denominator", tok[2])
                den = tok[1]
            coeff = Fraction(num, den)
            if peek()[0] != "*":
                return tuple(exps), coeff
            take("*")
        parse_var(exps)
        while peek()[0] == "*":
            take("*")
            parse_var(exps)
        return tuple(exps), coeff

    terms: dict[Monomial, Fraction] = {}

    def add(mono, c):
        s = terms.get(mono, 0) + c
        if s:
            terms[mono] = s
        else:
            terms.pop(mono, None)

    sign = 1
    if peek()[0] in ("+", "-"):
        sign = -1 if take(peek()[0])[0] == "-" else 1
    mono, c = parse_term()
    add(mono, sign * c)
    while peek()[0] in ("+", "-"):
        sign = -1 if take(peek()[0])[0] == "-" else 1
        mono, c = parse_term()
        add(mono, sign * c)
    if peek()[0] != "end":
        tok = peek()
        raise PolynomialSyntaxError(f"unexpected {tok[0]}", tok[2])
    return Polynomial._raw(terms, nvars)


def _format_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for i, (m, c) in enumerate(f.items()):
        mono = "*".join(
            f"x{k + 1}" if e == 1 else f"x{k + 1}^{e}" for k, e in enumerate(m) if e
        )
        mag = abs(c)
        if not mono:
            body = _format_fraction(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_fraction(mag)}*{mono}"
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


# -- gcd -----------------------------------------------------------------

def _coeffs_in(f: Polynomial, var: int) -> dict[int, Polynomial]:
    """View f as a univariate polynomial in ``var``; coefficients are free of it."""
    out: dict[int, dict[Monomial, Fraction]] = {}
    for m, c in f._terms.items():
        e = m[var]
        out.setdefault(e, {})[m[:var] + (0,) + m[var + 1:]] = c
    return {e: Polynomial._raw(t, f.nvars) for e, t in out.items()}


def _from_coeffs(coeffs: dict[int, Polynomial], var: int, nvars: int) -> Polynomial:
    out: dict[Monomial, Fraction] = {}
    for e, p in coeffs.items():
        for m, c in p._terms.items():
            out[m[:var] + (e,) + m[var + 1:]] = c
    return Polynomial._raw(out, nvars)


def _content_in(f: Polynomial, var: int) -> Polynomial:
    return reduce(gcd, _coeffs_in(f, var).values())


def _prem(f: Polynomial, g: Polynomial, var: int) -> Polynomial:
    """Pseudo-remainder of f by g as univariate polynomials in ``var``."""
    dg = g.degree_in(var)
    gc = _coeffs_in(g, var)
    lc = gc[dg]
    xv = Polynomial.variable(var, f.nvars)
    r = f
    steps = f.degree_in(var) - dg + 1
    while r and r.degree_in(var) >= dg:
        dr = r.degree_in(var)
        lr = _coeffs_in(r, var)[dr]
        r = r * lc - g * lr * xv ** (dr - dg)
        steps -= 1
    return r * lc ** steps if steps > 0 else r


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Greatest common divisor, primitive with positive leading coefficient.

    Recursive primitive-PRS algorithm, eliminating the highest-index
    variable first and recursing on contents.
    """
    if f.nvars != g.nvars:
        raise ValueError(f"nvars mismatch: {f.nvars} vs {g.nvars}")
    if f.is_zero():
        return g.primitive()
    if g.is_zero():
        return f.primitive()
    vs = sorted(set(f.variables()) | set(g.variables()))
    if not vs:
        return Polynomial.constant(1, f.nvars)
    var = vs[-1]
    cf, cg = _content_in(f, var), _content_in(g, var)
    c = gcd(cf, cg)
    a, b = f.exact_div(cf), g.exact_div(cg)
    if a.degree_in(var) < b.degree_in(var):
        a, b = b, a
    while b and b.degree_in(var) > 0:
        r = _prem(a, b, var)
        a = b
        b = r.exact_div(_content_in(r, var)) if r else r
    if b:
        # nonzero remainder free of var: primitive parts are coprime
        return c
    return (c * a.exact_div(_content_in(a, var))).primitive()


def gcd_many(fs: Iterable[Polynomial]) -> Polynomial:
    nonzero = [f for f in fs if not f.is_zero()]
    if not nonzero:
        raise ValueError("gcd_many needs at least one nonzero polynomial")
    result = nonzero[0].primitive()
    for f in nonzero[1:]:
        if result.is_constant():
            break
        result = gcd(result, f)
    return result


def squarefree_part(f: Polynomial) -> Polynomial:
    """Product of the distinct irreducible factors of f, normalized."""
    if f.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    g = gcd_many([f, *f.gradient()])
    return f.exact_div(g).primitive()


# -- univariate helpers (coefficient lists, low degree first) --------------

def trim(coeffs: Sequence) -> list[Fraction]:
    out = [as_fraction(c) for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return out


def upoly_eval(coeffs: Sequence[Fraction], t) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def upoly_divmod(f: Sequence[Fraction], g: Sequence[Fraction]):
    f, g = trim(f), trim(g)
    if not g:
        raise ZeroDivisionError("univariate division by zero")
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    while len(r) >= len(g) and r:
        shift = len(r) - len(g)
        c = r[-1] / g[-1]
        q[shift] = c
        for k, gc in enumerate(g):
            r[shift + k] -= c * gc
        r = trim(r)
    return q, r


def upoly_gcd(f: Sequence[Fraction], g: Sequence[Fraction]) -> list[Fraction]:
    """Monic gcd."""
    f, g = trim(f), trim(g)
    while g:
        f, g = g, upoly_divmod(f, g)[1]
    if not f:
        return []
    return [c / f[-1] for c in f]


def upoly_derivative(f: Sequence[Fraction]) -> list[Fraction]:
    return trim([k * c for k, c in enumerate(f)][1:])


def upoly_squarefree(f: Sequence[Fraction]) -> list[Fraction]:
    f = trim(f)
    if not f:
        raise ValueError("squarefree part of the zero polynomial")
    g = upoly_gcd(f, upoly_derivative(f))
    q = upoly_divmod(f, g)[0] if len(g) > 1 else f
    return [c / q[-1] for c in q]


def _integer_coeffs(f: Sequence[Fraction]) -> list[int]:
    den = reduce(_lcm, (c.denominator for c in f), 1)
    ints = [int(c * den) for c in f]
    g = reduce(math.gcd, ints, 0) or 1
    return [v // g for v in ints]


def rational_roots(f: Sequence) -> list[tuple[Fraction, int]]:
    """Rational roots of a nonzero univariate polynomial with multiplicities.

    Candidates come from floating-point roots of the squarefree part; each
    candidate is confirmed exactly, so no false root is ever returned.
    """
    f = trim(f)
    if not f:
        raise ValueError("rational roots of the zero polynomial")
    found: list[Fraction] = []
    rest = upoly_squarefree(f)
    if not rest[0]:
        found.append(Fraction(0))
        rest = upoly_divmod(rest, [Fraction(0), Fraction(1)])[0]
    while len(rest) > 1:
        ints = _integer_coeffs(rest)
        lead = abs(ints[-1])
        approx = np.roots([float(c) for c in reversed(ints)])
        new = []
        for z in approx:
            if abs(z.imag) > 1e-6 * max(1.0, abs(z.real)):
                continue
            k = round(z.real * lead)
            for cand in {Fraction(k + d, lead) for d in (-1, 0, 1)}:
                if cand not in new and not upoly_eval(rest, cand):
                    new.append(cand)
        if not new:
            break
        for r in new:
            rest = upoly_divmod(rest, [-r, Fraction(1)])[0]
        found.extend(new)
    out = []
    for r in sorted(found):
        mult, g = 0, f
        while True:
            q, rem = upoly_divmod(g, [-r, Fraction(1)])
            if rem:
                break
            mult, g = mult + 1, q
        out.append((r, mult))
    return out


def real_roots_numeric(f: Sequence) -> list[float]:
    """Floating-point real roots of a univariate polynomial (squarefree part)."""
    sf = upoly_squarefree(f)
    if len(sf) < 2:
        return []
    approx = np.roots([float(c) for c in reversed(sf)])
    return sorted(float(z.real) for z in approx if abs(z.imag) <= 1e-9 * max(1.0, abs(z.real)))
