"""Möbius-transformation obstructions to conformal equivalence of H1 and H2.

A conformal equivalence would descend to a Möbius map R between the
quotients S/H1 and S/H2 (both the sphere) sending the branch values
{0, inf, 1, lam^2, lam^-2} onto {inf, 2, -2, +-(lam + 1/lam)} with
R(0), R(inf) in {2, -2}. Working over Q(lam) with lam an indeterminate,
each admissible assignment either fails identically or survives only on
the roots of a polynomial in lam; those roots are the exceptional members.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .curve_family import compute_c
from .fields import Poly, QuadElem, RatFunc, irreducible_factors, poly_gcd, quadratic_roots
from .signature import Signature, riemann_hurwitz_genus


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    __str__ = lambda self: "inf"  # noqa: E731


INF = _Infinity()


def _is_zero(x) -> bool:
    return x == 0


def _vec(p):
    return (1, 0) if p is INF else (p, 1)


class MobiusMap:
    """z -> (a z + b)/(c z + d), scaled so the first nonzero of (a, b, c, d) is 1."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        entries = [Fraction(x) if isinstance(x, int) else x for x in (a, b, c, d)]
        a, b, c, d = entries
        det = a * d - b * c
        if _is_zero(det):
            raise ValueError("singular Möbius matrix")
        lead = next(x for x in entries if not _is_zero(x))
        self.a, self.b, self.c, self.d = (x / lead if not _is_zero(x) else x * 0 for x in entries)

    @classmethod
    def identity(cls) -> "MobiusMap":
        return cls(1, 0, 0, 1)

    def matrix(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def __call__(self, z):
        u, v = _vec(z)
        num = self.a * u + self.b * v
        den = self.c * u + self.d * v
        if _is_zero(den):
            return INF
        return num / den

    def projective(self, z) -> tuple:
        """Image of z as an unnormalised column vector (num, den)."""
        u, v = _vec(z)
        return (self.a * u + self.b * v, self.c * u + self.d * v)

    def __matmul__(self, other: "MobiusMap") -> "MobiusMap":
        a, b, c, d = self.matrix()
        e, f, g, h = other.matrix()
        return MobiusMap(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self) -> "MobiusMap":
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def __eq__(self, other):
        if not isinstance(other, MobiusMap):
            return NotImplemented
        return all(x == y for x, y in zip(self.matrix(), other.matrix()))

    def __hash__(self):
        return hash(tuple(str(x) for x in self.matrix()))

    def fixed_points(self) -> list:
        """Fixed points in Q, Q(sqrt d) or {inf}; entries must be rational."""
        a, b, c, d = self.matrix()
        if _is_zero(c):
            pts = [INF]
            if a != d:
                pts.append(-b / (a - d))
            return pts
        # c z^2 + (d - a) z - b = 0
        poly = Poly((-b, d - a, c))
        if poly.degree == 2:
            return quadratic_roots(poly)
        return [Fraction(-poly.coeffs[0]) / poly.coeffs[1]]

    def __repr__(self):
        return f"MobiusMap({self.a}, {self.b}, {self.c}, {self.d})"

    def to_str(self, var: str = "z") -> str:
        def s(x):
            return x.to_str("lam") if isinstance(x, RatFunc) else str(x)

        return f"({s(self.a)}*{var} + {s(self.b)}) / ({s(self.c)}*{var} + {s(self.d)})"


def _to_standard(p1, p2, p3) -> tuple:
    """Matrix sending p1 -> 0, p2 -> 1, p3 -> inf."""
    if p1 is INF:
        return (0, p2 - p3, 1, -p3)
    if p2 is INF:
        return (1, -p1, 1, -p3)
    if p3 is INF:
        return (1, -p1, 0, p2 - p1)
    return (p2 - p3, -p1 * (p2 - p3), p2 - p1, -p3 * (p2 - p1))


def _distinct(points: Sequence) -> bool:
    for i in range(len(points)):
        for j in range(i):
            x, y = points[i], points[j]
            if (x is INF) != (y is INF):
                continue
            if x is INF or x == y:
                return False
    return True


def mobius_from_three_points(ps: Sequence, qs: Sequence) -> MobiusMap:
    """The unique Möbius map with R(ps[i]) = qs[i]; points may be ``INF``."""
    if len(ps) != 3 or len(qs) != 3:
        raise ValueError("need exactly three points on each side")
    if not _distinct(ps) or not _distinct(qs):
        raise ValueError("points must be pairwise distinct")
    A = MobiusMap(*_to_standard(*ps))
    B = MobiusMap(*_to_standard(*qs))
    return B.inverse() @ A


# ---------------------------------------------------------------------------
# Obstruction search over Q(lam)

LAM_LABEL = "lam"


def _lam():
    return RatFunc.t()


def _degenerate_factors() -> list[Poly]:
    """Factors of lam * (lam^4 - 1): excluded members of the family."""
    t = Poly.t()
    return irreducible_factors(t * (t**4 - 1))


@dataclass
class Assignment:
    images: dict[str, str]
    R: MobiusMap
    constraints: list[Poly]
    common: Poly | None  # gcd of constraints; None when all vanish identically
    factors: list[Poly]
    discarded: list[Poly]

    @property
    def identically_satisfied(self) -> bool:
        return self.common is None

    def to_json(self) -> dict:
        return {
            "images": self.images,
            "R": self.R.to_str(),
            "constraints": [p.to_str(LAM_LABEL) for p in self.constraints],
            "common_factor": None if self.common is None else self.common.to_str(LAM_LABEL),
            "exceptional_factors": [p.to_str(LAM_LABEL) for p in self.factors],
            "discarded_factors": [p.to_str(LAM_LABEL) for p in self.discarded],
        }


@dataclass
class ObstructionReport:
    n: int
    a: int
    assignments: list[Assignment]
    exceptional_factors: list[Poly] = field(default_factory=list)

    @property
    def assignments_tested(self) -> int:
        return len(self.assignments)

    @property
    def constraint_polynomials(self) -> list[Poly]:
        return sorted({p for asg in self.assignments for p in asg.constraints})

    @property
    def identically_satisfied(self) -> bool:
        return any(asg.identically_satisfied for asg in self.assignments)

    def exceptional_roots(self) -> list:
        roots = []
        for f in self.exceptional_factors:
            roots += quadratic_roots(f) if f.degree == 2 else []
        return roots

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "a": self.a,
            "assignments_tested": self.assignments_tested,
            "constraint_polynomials": [p.to_str(LAM_LABEL) for p in self.constraint_polynomials],
            "exceptional_factors": [p.to_str(LAM_LABEL) for p in self.exceptional_factors],
            "exceptional_roots_symbolic": [str(r) for r in self.exceptional_roots()],
            "identically_satisfied": self.identically_satisfied,
            "assignments": [asg.to_json() for asg in self.assignments],
        }


def _constraint(R: MobiusMap, source, target) -> Poly:
    u, v = R.projective(source)
    expr = v if target is INF else u - target * v
    if not isinstance(expr, RatFunc):
        expr = RatFunc(expr)
    return expr.num.primitive() if not expr.is_zero() else Poly()


def obstruction_search(n: int, a: int) -> ObstructionReport:
    """Enumerate all admissible R and collect the exceptional lam as factors.

    For each bijection {0, inf, 1, lam^2, lam^-2} -> {inf, 2, -2, mu, -mu}
    (mu = lam + 1/lam) with R(0), R(inf) in {2, -2}, R is fixed by the first
    three images; the last two become polynomial conditions on lam. Their
    common factor, stripped of factors of lam(lam^4 - 1), is recorded.
    """
    if a < 1 or a % 2 == 0:
        raise ValueError("a must be a positive odd integer")
    if compute_c(n, a) is None:
        raise ValueError(f"(n={n}, a={a}) admits no tau2")
    lam = _lam()
    mu = lam + 1 / lam
    sources = [Fraction(0), INF, Fraction(1), lam**2, lam**-2]
    source_names = ["0", "inf", "1", "lam^2", "lam^-2"]
    rest_targets = [(INF, "inf"), (mu, "mu"), (-mu, "-mu")]
    bad = _degenerate_factors()
    assignments = []
    found: set[Poly] = set()
    for r0, rinf in ((2, -2), (-2, 2)):
        for perm in itertools.permutations(rest_targets):
            targets = [Fraction(r0), Fraction(rinf)] + [p[0] for p in perm]
            names = [str(r0), str(rinf)] + [p[1] for p in perm]
            ps = [RatFunc(x) if isinstance(x, Fraction) else x for x in sources[:3]]
            qs = [RatFunc(x) if isinstance(x, Fraction) else x for x in targets[:3]]
            R = mobius_from_three_points(ps, qs)
            cons = [_constraint(R, s, t) for s, t in zip(sources[3:], targets[3:])]
            nonzero = [p for p in cons if not p.is_zero()]
            if not nonzero:
                common, keep, drop = None, [], []
            else:
                common = nonzero[0]
                for p in nonzero[1:]:
                    common = poly_gcd(common, p)
                common = common.primitive()
                facs = irreducible_factors(common) if common.degree > 0 else []
                keep = [f for f in facs if f not in bad]
                drop = [f for f in facs if f in bad]
            found.update(keep)
            assignments.append(
                Assignment(dict(zip(source_names, names)), R, cons, common, keep, drop)
            )
    return ObstructionReport(n, a, assignments, sorted(found))


# ---------------------------------------------------------------------------
# lam0 = 1 + sqrt 2


def exceptional_lambda() -> QuadElem:
    return QuadElem(1, 1, 2)


def exceptional_base_map() -> MobiusMap:
    """x -> (1 - x)/(1 + x)."""
    return MobiusMap(-1, 1, 1, 1)


T1 = MobiusMap(-1, 0, 0, 1)  # x -> -x
T2 = MobiusMap(0, 1, 1, 0)   # x -> 1/x


@dataclass
class ExceptionalCheck:
    checks: dict[str, bool]
    images: dict[str, str]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": self.checks, "images": self.images}


def verify_exceptional_automorphism(n: int, a: int) -> ExceptionalCheck:
    """Base-level checks for sigma at lam0 = 1 + sqrt 2."""
    if compute_c(n, a) is None:
        raise ValueError(f"(n={n}, a={a}) admits no tau2")
    lam0 = exceptional_lambda()
    T = MobiusMap(*(QuadElem(x, 0, 2) for x in exceptional_base_map().matrix()))
    labels = ["0", "inf", "1", "-1", "lam0", "-lam0", "1/lam0", "-1/lam0"]
    values = [QuadElem(0, 0, 2), INF, QuadElem(1, 0, 2), QuadElem(-1, 0, 2),
              lam0, -lam0, 1 / lam0, -(1 / lam0)]

    def find(z):
        for lbl, v in zip(labels, values):
            if (z is INF) == (v is INF) and (z is INF or z == v):
                return lbl
        return None

    images = {lbl: find(T(v)) for lbl, v in zip(labels, values)}
    identity = MobiusMap(*(QuadElem(x, 0, 2) for x in (1, 0, 0, 1)))
    t1 = MobiusMap(*(QuadElem(x, 0, 2) for x in T1.matrix()))
    t2 = MobiusMap(*(QuadElem(x, 0, 2) for x in T2.matrix()))
    N = 2 ** (n + 1)
    checks = {
        "T is an involution": T @ T == identity,
        "T permutes the branch set": None not in images.values()
        and sorted(images.values()) == sorted(labels),
        "T({0,inf}) = {1,-1}": {images["0"], images["inf"]} == {"1", "-1"},
        "T(lam0) = -1/lam0": images["lam0"] == "-1/lam0",
        "T conjugates x->-x to x->1/x": T @ t1 @ T.inverse() == t2,
        "RH for (0;2^(n+1),2^(n+1),4) with |G| = 2^(n+3)": riemann_hurwitz_genus(
            2 ** (n + 3), Signature(0, (N, N, 4))
        ) == 3 * (2**n - 1),
    }
    return ExceptionalCheck(checks, {k: str(v) for k, v in images.items()})


# ---------------------------------------------------------------------------
# The quotient maps pi1(x) = x^2 and pi2(x) = x + 1/x


def _x() -> RatFunc:
    return RatFunc.t()


def pi1() -> RatFunc:
    return _x() ** 2


def pi2() -> RatFunc:
    x = _x()
    return x + 1 / x


def _as_ratfunc(T: MobiusMap) -> RatFunc:
    x = _x()
    a, b, c, d = T.matrix()
    return (x * a + b) / (x * c + d)


def descended_map(T: MobiusMap) -> MobiusMap | None:
    """R with R(pi1(x)) = pi2(T(x)), or None if pi2 o T is not even in x."""
    f = pi2().substitute(_as_ratfunc(T))
    if f.substitute(-_x()) != f:
        return None

    def halve(p: Poly) -> Poly:
        if any(c for k, c in enumerate(p.coeffs) if k % 2):
            raise ValueError("odd coefficient in an even function")
        return Poly(p.coeffs[::2])

    num, den = halve(f.num), halve(f.den)
    if num.degree > 1 or den.degree > 1:
        return None
    cs = lambda p, k: p.coeffs[k] if k < len(p.coeffs) else Fraction(0)  # noqa: E731
    return MobiusMap(cs(num, 1), cs(num, 0), cs(den, 1), cs(den, 0))


def quotient_maps_consistency(candidate: MobiusMap | None = None) -> bool:
    """pi1, pi2 are invariant under x -> -x and x -> 1/x; a candidate T must descend.

    ``candidate`` defaults to x -> (1 - x)/(1 + x).
    """
    x = _x()
    p1, p2 = pi1(), pi2()
    if p1.substitute(-x) != p1 or p2.substitute(1 / x) != p2:
        return False
    T = exceptional_base_map() if candidate is None else candidate
    return descended_map(T) is not None
