from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import valid_pairs
from oracles import orbit_stabilizer_signature, semidirect_mult
from superelliptic.group_algebra import (
    ActionModel,
    GroupElement,
    GroupSpec,
    conjugate_subgroups,
    cyclic_subgroups_with_fixed_points,
    horizontal_exponent,
    sphere_action,
    subgroup_signature,
    verify_presentation,
)
from superelliptic.signature import Signature


def specs(ns=range(3, 6)):
    return [GroupSpec.abelian(n) for n in ns] + [GroupSpec.semidirect(n) for n in ns]


def test_multiply_examples():
    s = GroupSpec.semidirect(3)
    assert s.twist == 9
    assert s.multiply(s.element(1, 1), s.element(1, 0)) == (10, 1)
    assert s.multiply(s.element(9, 0), s.element(1, 1)) == (10, 1)
    assert s.element_order(GroupElement(3, 1)) == 2
    for spec in specs():
        assert all(spec.multiply(spec.identity, g) == g == spec.multiply(g, spec.identity) for g in spec.elements())


@pytest.mark.parametrize("spec", specs(range(3, 5)), ids=str)
def test_group_axioms_exhaustive(spec):
    els = spec.elements()
    mul = spec.multiply
    for g, h, k in itertools.product(els, repeat=3):
        assert mul(mul(g, h), k) == mul(g, mul(h, k))
    for g in els:
        assert mul(g, spec.inverse(g)) == spec.identity


@pytest.mark.parametrize("spec", specs(range(3, 7)), ids=str)
def test_defining_relations(spec):
    assert spec.order == 2 ** (spec.n + 2)
    assert spec.power(spec.tau2, 2) == spec.power(spec.tau1, 2)
    assert len(spec.generated_subgroup([spec.tau1, spec.tau2])) == spec.order
    if not spec.is_abelian:
        lhs = spec.multiply(spec.tau2, spec.tau1)
        assert lhs == spec.multiply(spec.tau1_pow(2**spec.n + 1), spec.tau2)


@pytest.mark.parametrize("spec", specs(range(3, 6)), ids=str)
def test_multiplication_matches_rederived_law(spec):
    mul = semidirect_mult(spec.n, spec.twist)
    for g, h in itertools.product(spec.elements(), repeat=2):
        assert tuple(spec.multiply(g, h)) == mul(tuple(g), tuple(h))


@pytest.mark.parametrize("n", range(3, 7))
def test_order_two_exponents(n):
    ab, sd = GroupSpec.abelian(n), GroupSpec.semidirect(n)
    N = 2 ** (n + 1)
    assert ab.order_two_tau2_exponents() == sorted({(-1) % N, (2**n - 1) % N})
    assert sd.order_two_tau2_exponents() == sorted({2 ** (n - 1) - 1, 2 ** (n - 1) - 1 + 2**n})


def test_presentation_examples():
    assert verify_presentation(GroupSpec.abelian(4), "group2n", 2).ok
    res = verify_presentation(GroupSpec.semidirect(4), "exnon", 1)
    assert res.ok and "D2 D1 = D1^17 D2" in res.relations
    with pytest.raises(ValueError):
        verify_presentation(GroupSpec.abelian(4), "exnon", 1)


@pytest.mark.parametrize("n,a", valid_pairs(range(3, 7)))
def test_presentations_for_every_family(n, a):
    c = (2 * a + 2) // 2 ** (n - 1)
    which = "group2n" if c % 2 == 0 else "exnon"
    spec = GroupSpec.for_c(n, c)
    assert verify_presentation(spec, which, c).ok
    geo = verify_presentation(spec, which, c, a=a, mapping="geometric")
    if which == "group2n" or n > 3:
        assert geo.ok, geo.failing


def test_exnon_at_n3():
    assert horizontal_exponent(3, 1, "exnon") == 2
    s = GroupSpec.semidirect(3)
    assert verify_presentation(s, "exnon", 1).ok
    assert verify_presentation(s, "exnon", 1, a=1, mapping="geometric").ok
    # the n > 3 exponent 3 * 2^(n-1) c - 2 = 10 does not give D3 = tau1^2 here
    assert s.power(s.tau1, 10) != s.tau1_pow(2)


def expected_subgroups(n, c):
    N = 2 ** (n + 1)
    big = Signature(0, [N, N, N // 2, N // 2, N // 2])
    out = {
        "H1": (big, 2),
        "H2": (big, 2),
        "H3": (Signature(0, [N // 2] * 8), 8),
    }
    if c % 2 == 0:
        out["H4"] = (Signature(2**n - 1, [2] * N), N)
    else:
        out["H4"] = (Signature(5 * 2 ** (n - 2) - 1, [2] * (N // 2)), N // 2)
        out["H5"] = out["H4"]
    return out


@pytest.mark.parametrize("n,a", valid_pairs(range(3, 6), cs=(1, 2)))
def test_subgroup_signatures(n, a):
    action = ActionModel.for_curve(n, a)
    assert all(action.check().values())
    assert action.total_genus == 3 * (2**n - 1)
    expected = expected_subgroups(n, action.c)
    named = action.named_subgroups()
    assert set(named) == set(expected)
    for name, g in named.items():
        res = subgroup_signature(action, action.spec.generated_subgroup([g]))
        assert (res.signature, res.fixed_points) == expected[name], name
    full = subgroup_signature(action, action.spec.elements())
    assert full.signature == Signature(0, [2 ** (n + 1), 2 ** (n + 1), 2**n, 2])


def test_subgroup_examples():
    action = ActionModel.for_curve(3, 3)
    s = action.spec
    h1 = subgroup_signature(action, s.generated_subgroup([s.tau1]))
    assert h1.signature == Signature(0, [16, 16, 8, 8, 8])
    h4 = subgroup_signature(action, s.generated_subgroup([GroupElement(7, 1)]))
    assert (h4.signature, h4.fixed_points) == (Signature(7, [2] * 16), 16)
    # tau1^8 tau2 has order 16 when c is even, so it cannot be the H4 generator
    assert s.element_order(GroupElement(8, 1)) != 2
    action = ActionModel.for_curve(3, 1)
    s = action.spec
    h4 = subgroup_signature(action, s.generated_subgroup([GroupElement(11, 1)]))
    assert (h4.signature, h4.fixed_points) == (Signature(9, [2] * 8), 8)


@pytest.mark.parametrize("n,a", valid_pairs(range(3, 5), cs=(1, 2, 3)))
def test_coset_oracle_matches_orbit_stabilizer(n, a):
    action = ActionModel.for_curve(n, a)
    spec = action.spec
    mul = semidirect_mult(n, spec.twist)
    vector = [tuple(g) for g in action.vector]
    seen = set()
    for g in spec.elements():
        H = spec.generated_subgroup([g])
        if H in seen:
            continue
        seen.add(H)
        res = subgroup_signature(action, H)
        gamma, cones, fixed = orbit_stabilizer_signature(n, mul, vector, {tuple(h) for h in H}, action.total_genus)
        assert (res.signature.genus, res.signature.periods) == (gamma, cones)
        assert res.fixed_points == fixed


@pytest.mark.parametrize("n,a", valid_pairs(range(3, 5), cs=(1, 2)))
def test_fixed_point_subgroups_lie_in_named_ones(n, a):
    action = ActionModel.for_curve(n, a)
    spec = action.spec
    named = [spec.generated_subgroup([g]) for g in action.named_subgroups().values()]
    conj = [frozenset(spec.conjugate(x, h) for h in K) for K in named for x in spec.elements()]
    for H in cyclic_subgroups_with_fixed_points(action):
        assert any(H <= K for K in conj)


def test_conjugate_subgroups():
    s = GroupSpec.semidirect(3)
    H4 = s.generated_subgroup([GroupElement(11, 1)])
    H5 = s.generated_subgroup([GroupElement(3, 1)])
    g = conjugate_subgroups(s, H4, H5)
    assert g is not None and g.j == 0 and g.i % 2 == 1
    assert conjugate_subgroups(s, H4, H4) == s.identity
    a = GroupSpec.abelian(3)
    assert conjugate_subgroups(a, a.generated_subgroup([a.element(7, 1)]), a.generated_subgroup([a.element(15, 1)])) is None


@pytest.mark.parametrize("spec", specs(range(3, 6)), ids=str)
def test_sphere_action(spec):
    act = sphere_action(spec)
    assert act.is_homomorphism()
    assert act.kernel() == spec.generated_subgroup([spec.tau1_pow(2)])
    assert set(act.fixed_branch_points(spec.tau1)) == {"0", "inf"}
    assert set(act.fixed_branch_points(spec.tau2)) == {"1", "-1"}
    if spec.is_abelian:
        c = 2
        nu = spec.multiply(spec.tau1_pow(2 ** (spec.n - 1) * c - 1), spec.tau2)
        assert act.fixed_branch_points(nu) == []


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(specs(range(3, 7))), st.data())
def test_power_and_inverse(spec, data):
    i = data.draw(st.integers(0, spec.modulus - 1))
    j = data.draw(st.integers(0, 1))
    k = data.draw(st.integers(-40, 40))
    g = spec.element(i, j)
    assert spec.multiply(spec.power(g, k), spec.power(g, -k)) == spec.identity
    assert spec.power(g, spec.element_order(g)) == spec.identity
    assert spec.order % spec.element_order(g) == 0
