from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import assume, given, settings, strategies as st

from oracles import sympy_exceptional_factors
from superelliptic.conformal_check import (
    INF,
    MobiusMap,
    T1,
    T2,
    descended_map,
    exceptional_base_map,
    mobius_from_three_points,
    obstruction_search,
    quotient_maps_consistency,
    verify_exceptional_automorphism,
)
from superelliptic.fields import Poly, QuadElem, RatFunc

t = Poly.t()
EXPECTED = [t**2 - 2 * t - 1, t**2 + 2 * t - 1]


def test_three_point_examples():
    assert mobius_from_three_points([0, 1, INF], [0, 1, INF]) == MobiusMap.identity()
    R = mobius_from_three_points([0, INF, 1], [2, -2, INF])
    assert R == MobiusMap(2, 2, -1, 1)
    lam = RatFunc.t()
    one, zero = RatFunc(1), RatFunc(0)
    R = mobius_from_three_points([zero, one, INF], [one, zero, INF])
    assert R == MobiusMap(-1, 1, 0, 1)
    assert R(lam) == 1 - lam
    with pytest.raises(ValueError):
        mobius_from_three_points([0, 0, 1], [0, 1, 2])


def test_normalization_is_canonical():
    assert MobiusMap(2, 4, 6, 10) == MobiusMap(1, 2, 3, 5)
    assert MobiusMap(0, 3, 3, 0) == T2
    with pytest.raises(ValueError):
        MobiusMap(1, 2, 2, 4)


points = st.one_of(st.just(INF), st.fractions(min_value=-9, max_value=9, max_denominator=5))


def _distinct(ps):
    return len({str(p) for p in ps}) == len(ps)


@settings(max_examples=150, deadline=None)
@given(st.lists(points, min_size=3, max_size=3), st.lists(points, min_size=3, max_size=3))
def test_three_point_map_hits_targets(ps, qs):
    assume(_distinct(ps) and _distinct(qs))
    R = mobius_from_three_points(ps, qs)
    for p, q in zip(ps, qs):
        assert str(R(p)) == str(q) if q is INF else R(p) == q
    assert (R.inverse() @ R) == MobiusMap.identity()


@given(st.fractions(min_value=-9, max_value=9, max_denominator=5))
def test_fixed_points(x):
    if x != 0:
        assert MobiusMap(1, x, 0, 1).fixed_points() == [INF]
    assert set(map(str, exceptional_base_map().fixed_points())) == {"-1+sqrt(2)", "-1-sqrt(2)"}


@pytest.mark.parametrize("n,a", [(3, 3), (4, 3), (4, 7), (5, 7), (3, 1), (6, 15)])
def test_obstruction_factor_set(n, a):
    rep = obstruction_search(n, a)
    assert rep.assignments_tested == 12
    assert rep.exceptional_factors == sorted(EXPECTED)
    assert not rep.identically_satisfied
    for f in rep.exceptional_factors:
        c0, c1, c2 = f.coeffs
        assert c1 * c1 - 4 * c2 * c0 == 8
    roots = {str(r) for r in rep.exceptional_roots()}
    assert roots == {"1+sqrt(2)", "1-sqrt(2)", "-1+sqrt(2)", "-1-sqrt(2)"}


def test_obstruction_matches_sympy_cross_ratios():
    lam = sp.symbols("lam")
    ours = {sp.Poly([int(c) for c in reversed(f.coeffs)], lam).as_expr() for f in obstruction_search(3, 3).exceptional_factors}
    assert ours == set(sympy_exceptional_factors())


def test_worked_assignment():
    rep = obstruction_search(3, 3)
    first = rep.assignments[0]
    assert first.images == {"0": "2", "inf": "-2", "1": "inf", "lam^2": "mu", "lam^-2": "-mu"}
    assert first.R == MobiusMap(2, 2, -1, 1)
    # 2(l^2+1)/(1-l^2) = (l^2+1)/l clears to l^2 + 2l - 1 once l^2 + 1 is removed
    assert first.factors == [t**2 + 2 * t - 1]
    assert t**2 + 1 in first.discarded
    json = rep.to_json()
    assert set(json) >= {"n", "a", "assignments_tested", "constraint_polynomials", "exceptional_factors", "exceptional_roots_symbolic"}


def test_obstruction_rejects_bad_parameters():
    with pytest.raises(ValueError):
        obstruction_search(4, 1)
    with pytest.raises(ValueError):
        obstruction_search(3, 2)


@pytest.mark.parametrize("n,a", [(3, 3), (4, 7), (3, 1)])
def test_exceptional_automorphism(n, a):
    res = verify_exceptional_automorphism(n, a)
    assert res.ok, res.checks
    assert res.images["lam0"] == "-1/lam0"
    assert {res.images["0"], res.images["inf"]} == {"1", "-1"}


def test_exceptional_value_arithmetic():
    lam0 = QuadElem(1, 1, 2)
    T = exceptional_base_map()
    image = (1 - lam0) / (1 + lam0)
    assert image == QuadElem(1, -1, 2) == -(1 / lam0)
    assert T @ T == MobiusMap.identity()
    assert T @ T1 @ T.inverse() == T2


def test_quotient_maps():
    assert quotient_maps_consistency()
    assert not quotient_maps_consistency(MobiusMap.identity())
    assert descended_map(exceptional_base_map()) == MobiusMap(2, 2, -1, 1)
