from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from superelliptic.fields import (
    Poly,
    QuadElem,
    RatFunc,
    irreducible_factors,
    poly_gcd,
    quadratic_roots,
    rational_roots,
    squarefree_part,
)

T = sp.symbols("t")
small = st.integers(-6, 6)
coeffs = st.lists(small, min_size=1, max_size=4)
fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def to_sympy(p: Poly):
    return sum(sp.Rational(c.numerator, c.denominator) * T**k for k, c in enumerate(p.coeffs))


def from_sympy(e) -> Poly:
    cs = sp.Poly(e, T).all_coeffs()[::-1]
    return Poly(Fraction(int(sp.numer(c)), int(sp.denom(c))) for c in cs)


@given(coeffs, coeffs, coeffs)
def test_gcd_matches_sympy(a, b, c):
    A, B, C = Poly(a), Poly(b), Poly(c)
    f, g = A * C, B * C
    if f.is_zero() or g.is_zero():
        return
    ours = poly_gcd(f, g)
    ref = sp.Poly(sp.gcd(to_sympy(f), to_sympy(g)), T).monic()
    assert to_sympy(ours).expand() == ref.as_expr().expand()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=1, max_size=3), min_size=1, max_size=3))
def test_factors_match_sympy(parts):
    f = Poly([1])
    for p in parts:
        f = f * Poly(p)
    if f.degree < 1 or f.degree > 8:
        return
    ours = {to_sympy(g).expand() for g in irreducible_factors(f)}
    ref = set()
    for g, _ in sp.factor_list(to_sympy(f), T)[1]:
        pg = sp.Poly(g, T)
        if pg.degree() > 0:
            if pg.LC() < 0:
                pg = -pg
            ref.add(pg.as_expr().expand())
    assert ours == ref


def test_factorization_limit_is_explicit():
    t = Poly.t()
    with pytest.raises(ValueError):
        irreducible_factors((t**3 + 2) * (t**3 + t + 1))


def test_known_factorizations():
    t = Poly.t()
    f = (t**2 + 1) * (t**2 + 2 * t - 1)
    assert irreducible_factors(f) == sorted([t**2 + 1, t**2 + 2 * t - 1])
    assert irreducible_factors(t * (t**4 - 1)) == sorted([t, t - 1, t + 1, t**2 + 1])
    assert rational_roots(Poly([-6, 11, -6, 1])) == [1, 2, 3]


def test_quadratic_roots():
    roots = quadratic_roots(Poly([-1, -2, 1]))
    assert set(roots) == {QuadElem(1, 1, 2), QuadElem(1, -1, 2)}
    assert set(quadratic_roots(Poly([-4, 0, 1]))) == {Fraction(2), Fraction(-2)}


def test_squarefree_part():
    assert squarefree_part(8) == (2, 2)
    assert squarefree_part(-12) == (2, -3)


def _rat(x: Fraction):
    return sp.Rational(x.numerator, x.denominator)


@settings(max_examples=50, deadline=None)
@given(fracs, fracs, fracs, fracs, st.sampled_from([2, 3, 5, -1, -7]))
def test_quad_field_matches_sympy(p, q, r, s, d):
    x, y = QuadElem(p, q, d), QuadElem(r, s, d)
    sx = _rat(p) + _rat(q) * sp.sqrt(d)
    sy = _rat(r) + _rat(s) * sp.sqrt(d)

    def same(ours, ref):
        return sp.radsimp(_rat(ours.p) + _rat(ours.q) * sp.sqrt(ours.d) - ref).expand() == 0

    assert same(x + y, sx + sy)
    assert same(x * y, sx * sy)
    if not y.is_zero():
        assert same(x / y, sx / sy)


def test_quad_normalizes_d():
    assert QuadElem(0, 1, 8) == QuadElem(0, 2, 2)
    assert QuadElem(1, 1, 2) * QuadElem(-1, 1, 2) == 1


@given(coeffs, st.lists(small, min_size=1, max_size=3).filter(any), coeffs)
def test_ratfunc_arithmetic(a, b, c):
    f = RatFunc(Poly(a), Poly(b))
    g = RatFunc(Poly(c))
    ref = sp.cancel(to_sympy(Poly(a)) / to_sympy(Poly(b)) + to_sympy(Poly(c)))
    h = f + g
    assert sp.cancel(to_sympy(h.num) / to_sympy(h.den) - ref) == 0
    assert h.den.lead == 1
    assert poly_gcd(h.num, h.den).degree <= 0 or h.num.is_zero()


def test_ratfunc_substitute():
    x = RatFunc.t()
    pi2 = x + 1 / x
    T_ = (1 - x) / (1 + x)
    f = pi2.substitute(T_)
    assert f == 2 * (1 + x**2) / (1 - x**2)


def test_poly_division():
    t = Poly.t()
    q, r = (t**3 + 2 * t + 1).divmod(t**2 + 1)
    assert q == t and r == t + 1
    with pytest.raises(ZeroDivisionError):
        RatFunc(Poly([1]), Poly())
