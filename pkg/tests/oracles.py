"""Independent reference computations used only by the tests.

Nothing here imports the package's algorithms; each oracle rebuilds its
answer from first principles (brute force, sympy, orbit-stabilizer).
"""
from __future__ import annotations

import itertools
from collections import deque
from functools import lru_cache
from math import gcd

import sympy as sp


# -- cyclic generating vectors -------------------------------------------------

@lru_cache(maxsize=None)
def naive_vectors(n, periods):
    """All tuples over Z/n with the given entry orders, zero sum and gcd 1."""
    def order(x):
        return n // gcd(x, n)

    out = []
    for v in itertools.product(range(n), repeat=len(periods)):
        if sum(v) % n:
            continue
        if any(order(x) != m for x, m in zip(v, periods)):
            continue
        if gcd(n, *v) != 1:
            continue
        out.append(v)
    return tuple(out)


def orbit_closure_classes(n, periods, with_perms=False):
    """Number of classes by BFS over generator moves (multiply by each unit, swap equal periods)."""
    vecs = set(naive_vectors(n, periods))
    gens = [s for s in range(1, n) if gcd(s, n) == 1] or [1]
    swaps = []
    if with_perms:
        for i, j in itertools.combinations(range(len(periods)), 2):
            if periods[i] == periods[j]:
                swaps.append((i, j))
    seen = set()
    classes = 0
    for v in sorted(vecs):
        if v in seen:
            continue
        classes += 1
        queue = deque([v])
        seen.add(v)
        while queue:
            w = queue.popleft()
            nbrs = [tuple((s * x) % n for x in w) for s in gens]
            for i, j in swaps:
                u = list(w)
                u[i], u[j] = u[j], u[i]
                nbrs.append(tuple(u))
            for u in nbrs:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    return len(vecs), classes


# -- the group and its action ---------------------------------------------------

def semidirect_mult(n, e):
    """Multiplication of pairs (i, j) = t1^i t2^j, rebuilt from t2 t1 = t1^e t2 and t2^2 = t1^2."""
    N = 2 ** (n + 1)

    def mul(g, h):
        i, j = g
        k, l = h
        # t1^i t2^j t1^k t2^l = t1^(i + e^j k) t2^(j + l)
        i2 = (i + (e if j else 1) * k) % N
        j2 = j + l
        if j2 == 2:
            # t2^2 = t1^2, which is central
            return ((i2 + 2) % N, 0)
        return (i2, j2)

    return mul


def orbit_stabilizer_signature(n, mul, vector, H, total_genus):
    """Cone orders of S/H by letting G act on the special fibres G/<g_j>.

    H-orbit sizes are found by BFS and stabilizer orders from |H|/|orbit|.
    """
    N = 2 ** (n + 1)
    G = [(i, j) for j in range(2) for i in range(N)]
    cones = []
    fixed = 0
    for g in vector:
        C = {(0, 0)}
        x = g
        while x != (0, 0):
            C.add(x)
            x = mul(x, g)
        cosets = {frozenset(mul(x, c) for c in C) for x in G}
        seen = set()
        for coset in cosets:
            if coset in seen:
                continue
            orbit = {coset}
            queue = deque([coset])
            while queue:
                cur = queue.popleft()
                for h in H:
                    nxt = frozenset(mul(h, y) for y in cur)
                    if nxt not in orbit:
                        orbit.add(nxt)
                        queue.append(nxt)
            seen |= orbit
            d = len(H) // len(orbit)
            if d > 1:
                cones.append(d)
            if d == len(H) and len(H) > 1:
                fixed += 1
    h = len(H)
    two_gamma_minus_2 = sp.Rational(2 * total_genus - 2, h) - sum(sp.Rational(m - 1, m) for m in cones)
    gamma = (two_gamma_minus_2 + 2) / 2
    assert gamma.is_integer and gamma >= 0
    return int(gamma), tuple(sorted(cones, reverse=True)), fixed


# -- singular-point cases via multiplicities of the projective plane model -------------------

def singular_points_by_multiplicity(n, a):
    """Singular points among [0,0,1], [1,0,1], [-1,0,1], [1,0,0], [0,1,0].

    A point is singular iff the lowest-degree form of the local equation has
    degree >= 2. With N = 2^n and D = 3a + 4 the local lowest degrees are:
    min(N, a) at x = 0 and x = +-1; at infinity the chart x = 1 gives
    y^N - z^(N-D) (for N > D) and the chart y = 1 gives z^(D-N) - x^D (for D > N).
    """
    N, D = 2**n, 3 * a + 4
    out = []
    if min(N, a) >= 2:
        out += ["[0,0,1]", "[1,0,1]", "[-1,0,1]"]
    if N > D and min(N, N - D) >= 2:
        out.append("[1,0,0]")
    if D > N and min(D - N, D) >= 2:
        out.append("[0,1,0]")
    return out


def sympy_multiplicity(n, a, point, lam=3):
    """Multiplicity of the plane model at a point, by expanding with sympy."""
    x, y, z = sp.symbols("x y z")
    N, D = 2**n, 3 * a + 4
    deg = max(N, D)
    F = y**N * z ** (deg - N) - x**a * (x**2 - z**2) ** a * (x**2 - lam**2 * z**2) * (
        x**2 - sp.Rational(1, lam**2) * z**2
    ) * z ** (deg - D)
    u, v = sp.symbols("u v")
    if point == "[1,0,0]":
        f = F.subs({x: 1, y: u, z: v})
    elif point == "[0,1,0]":
        f = F.subs({y: 1, x: u, z: v})
    else:
        x0 = {"[0,0,1]": 0, "[1,0,1]": 1, "[-1,0,1]": -1}[point]
        f = F.subs({z: 1, x: u + x0, y: v})
    poly = sp.Poly(sp.expand(f), u, v)
    if poly.is_zero:
        return None
    if poly.eval({u: 0, v: 0}) != 0:
        return 0
    return min(i + j for (i, j) in poly.monoms())


# -- obstruction search by cross-ratios ----------------------------------------

def _det(p, q):
    return p[0] * q[1] - p[1] * q[0]


def _proj(p):
    return (sp.Integer(1), sp.Integer(0)) if p == sp.oo else (p, sp.Integer(1))


def cross_ratio(p1, p2, p3, p4):
    p1, p2, p3, p4 = map(_proj, (p1, p2, p3, p4))
    return sp.cancel(_det(p1, p3) * _det(p2, p4) / (_det(p1, p4) * _det(p2, p3)))


def sympy_exceptional_factors():
    """Irreducible factors in lam on which some admissible assignment survives."""
    lam = sp.symbols("lam")
    mu = lam + 1 / lam
    sources = [sp.Integer(0), sp.oo, sp.Integer(1), lam**2, lam**-2]
    rest = [sp.oo, mu, -mu]
    degenerate = {sp.Poly(f, lam).monic() for f in (lam, lam - 1, lam + 1, lam**2 + 1)}
    found = set()
    for r0, rinf in ((2, -2), (-2, 2)):
        for perm in itertools.permutations(rest):
            targets = [sp.Integer(r0), sp.Integer(rinf), *perm]
            eqs = []
            for k in (3, 4):
                lhs = cross_ratio(sources[0], sources[1], sources[2], sources[k])
                rhs = cross_ratio(targets[0], targets[1], targets[2], targets[k])
                num, _ = sp.fraction(sp.together(lhs - rhs))
                eqs.append(sp.expand(num))
            g = sp.gcd(eqs[0], eqs[1])
            if g == 0:
                raise AssertionError("identically satisfied assignment")
            if sp.Poly(g, lam).degree() < 1:
                continue
            for f, _ in sp.factor_list(g, lam)[1]:
                pf = sp.Poly(f, lam).monic()
                if pf not in degenerate:
                    found.add(pf)
    return sorted((p.as_expr() for p in found), key=sp.default_sort_key)
