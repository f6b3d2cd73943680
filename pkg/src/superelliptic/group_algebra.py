"""The automorphism groups <tau1, tau2> of the superelliptic families.

Elements are pairs ``(i, j)`` standing for tau1**i * tau2**j with
``i mod 2**(n+1)`` and ``j mod 2``. Multiplication is

    (i, j) * (i', j') = (i + e**j * i' + 2*(j and j'), j xor j')

where the twist ``e`` is 1 (abelian family, c even) or ``2**n + 1``
(semidirect family, c odd). The cocycle term encodes tau2**2 == tau1**2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .curve_family import BRANCH_LABELS, compute_c, genus as family_genus
from .signature import InconsistentDataError, Signature, quotient_genus, riemann_hurwitz_genus


class GroupElement(NamedTuple):
    i: int
    j: int

    def label(self) -> str:
        parts = []
        if self.i:
            parts.append("tau1" if self.i == 1 else f"tau1^{self.i}")
        if self.j:
            parts.append("tau2")
        return "*".join(parts) or "1"


@dataclass(frozen=True)
class GroupSpec:
    n: int
    twist: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.twist % self.modulus not in (1, (2**self.n + 1) % self.modulus):
            raise ValueError(f"twist must be 1 or 2^n+1, got {self.twist}")
        object.__setattr__(self, "twist", self.twist % self.modulus)

    @classmethod
    def abelian(cls, n: int) -> "GroupSpec":
        return cls(n, 1)

    @classmethod
    def semidirect(cls, n: int) -> "GroupSpec":
        return cls(n, 2**n + 1)

    @classmethod
    def for_c(cls, n: int, c: int) -> "GroupSpec":
        return cls.abelian(n) if c % 2 == 0 else cls.semidirect(n)

    @property
    def modulus(self) -> int:
        return 2 ** (self.n + 1)

    @property
    def order(self) -> int:
        return 2 * self.modulus

    @property
    def is_abelian(self) -> bool:
        return self.twist == 1

    @property
    def identity(self) -> GroupElement:
        return GroupElement(0, 0)

    @property
    def tau1(self) -> GroupElement:
        return GroupElement(1, 0)

    @property
    def tau2(self) -> GroupElement:
        return GroupElement(0, 1)

    def element(self, i: int, j: int = 0) -> GroupElement:
        return GroupElement(i % self.modulus, j % 2)

    def elements(self) -> list[GroupElement]:
        return [GroupElement(i, j) for j in (0, 1) for i in range(self.modulus)]

    def multiply(self, g: GroupElement, h: GroupElement) -> GroupElement:
        e = self.twist if g.j else 1
        return GroupElement((g.i + e * h.i + 2 * (g.j & h.j)) % self.modulus, g.j ^ h.j)

    def product(self, elems: Iterable[GroupElement]) -> GroupElement:
        out = self.identity
        for g in elems:
            out = self.multiply(out, g)
        return out

    def inverse(self, g: GroupElement) -> GroupElement:
        if not g.j:
            return GroupElement((-g.i) % self.modulus, 0)
        # (i,1)(x,1) = (i + e x + 2, 0) = 1  =>  x = -e (i + 2), using e*e = 1
        return GroupElement((-self.twist * (g.i + 2)) % self.modulus, 1)

    def power(self, g: GroupElement, k: int) -> GroupElement:
        if k < 0:
            g, k = self.inverse(g), -k
        out, base = self.identity, g
        while k:
            if k & 1:
                out = self.multiply(out, base)
            base = self.multiply(base, base)
            k >>= 1
        return out

    def tau1_pow(self, k: int) -> GroupElement:
        return self.power(self.tau1, k)

    def tau2_pow(self, k: int) -> GroupElement:
        return self.power(self.tau2, k)

    def element_order(self, g: GroupElement) -> int:
        k, h = 1, g
        while h != self.identity:
            h = self.multiply(h, g)
            k += 1
        return k

    def conjugate(self, g: GroupElement, x: GroupElement) -> GroupElement:
        """g x g^-1."""
        return self.multiply(self.multiply(g, x), self.inverse(g))

    def generated_subgroup(self, gens: Iterable[GroupElement]) -> frozenset[GroupElement]:
        gens = [self.element(*g) for g in gens]
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.multiply(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def is_subgroup(self, H: Iterable[GroupElement]) -> bool:
        H = set(H)
        if self.identity not in H:
            return False
        return all(self.multiply(x, self.inverse(y)) in H for x in H for y in H)

    def order_two_tau2_exponents(self) -> list[int]:
        """All k with tau1^k tau2 of order 2."""
        return [
            k for k in range(self.modulus) if self.element_order(GroupElement(k, 1)) == 2
        ]


def conjugate_subgroups(
    spec: GroupSpec, H1: Iterable[GroupElement], H2: Iterable[GroupElement]
) -> GroupElement | None:
    """Least g (in ``spec.elements()`` order) with g H1 g^-1 == H2."""
    H1, H2 = frozenset(H1), frozenset(H2)
    if len(H1) != len(H2):
        return None
    for g in spec.elements():
        if frozenset(spec.conjugate(g, x) for x in H1) == H2:
            return g
    return None


# ---------------------------------------------------------------------------
# Presentations


def horizontal_exponent(n: int, c: int, which: str) -> int:
    """Exponent j of the relation D1^j D3^-1 = 1 read off the polygon."""
    if which == "group2n":
        return c * 2 ** (n - 1) - 2
    if which == "exnon":
        return 2 if n == 3 else 3 * 2 ** (n - 1) * c - 2
    raise ValueError(f"unknown presentation {which!r}")


@dataclass
class PresentationCheck:
    which: str
    mapping: str
    images: dict[str, GroupElement]
    relations: dict[str, bool]
    generates: bool

    @property
    def failing(self) -> list[str]:
        out = [name for name, ok in self.relations.items() if not ok]
        if not self.generates:
            out.append("D1, D2 generate G")
        return out

    @property
    def ok(self) -> bool:
        return not self.failing

    def to_json(self) -> dict:
        return {
            "which": self.which,
            "mapping": self.mapping,
            "images": {k: list(v) for k, v in self.images.items()},
            "relations": self.relations,
            "generates": self.generates,
            "ok": self.ok,
        }


def verify_presentation(
    spec: GroupSpec, which: str, c: int, a: int | None = None, mapping: str = "abstract"
) -> PresentationCheck:
    """Evaluate the relations of ``group2n`` (c even) or ``exnon`` (c odd).

    ``mapping="abstract"`` sends D1 -> tau1, D2 -> tau2 and derives
    D3 = D1^j, D4 = (D1 D2 D3)^-1. ``mapping="geometric"`` uses the
    generating vector (tau1^a, tau2^a, tau1^2, tau1^(2^(n-1)c-1) tau2) instead
    and needs ``a``.
    """
    n = spec.n
    expected = "group2n" if c % 2 == 0 else "exnon"
    if which != expected:
        raise ValueError(f"presentation {which!r} does not match c={c} (use {expected!r})")
    if spec.is_abelian != (c % 2 == 0):
        raise ValueError("group twist does not match the parity of c")
    j = horizontal_exponent(n, c, which)
    mul, pw = spec.multiply, spec.power
    if mapping == "abstract":
        d1, d2 = spec.tau1, spec.tau2
        d3 = pw(d1, j)
        d4 = spec.inverse(spec.product((d1, d2, d3)))
    elif mapping == "geometric":
        if a is None:
            raise ValueError("geometric mapping needs a")
        d1, d2, d3, d4 = ActionModel(spec, a, c).vector
    else:
        raise ValueError(f"unknown mapping {mapping!r}")
    one = spec.identity
    N = spec.modulus
    rel = {
        f"D1^{N} = 1": pw(d1, N) == one,
        f"D2^{N} = 1": pw(d2, N) == one,
        f"D3^{N // 2} = 1": pw(d3, N // 2) == one,
        "D4^2 = 1": pw(d4, 2) == one,
        "D1 D2 D3 D4 = 1": spec.product((d1, d2, d3, d4)) == one,
        "D1^2 D2^-2 = 1": mul(pw(d1, 2), pw(d2, -2)) == one,
        f"D1^{j} D3^-1 = 1": mul(pw(d1, j), spec.inverse(d3)) == one,
    }
    if which == "group2n":
        rel["D1 D2 = D2 D1"] = mul(d1, d2) == mul(d2, d1)
    else:
        rel[f"D2 D1 = D1^{2**n + 1} D2"] = mul(d2, d1) == mul(pw(d1, 2**n + 1), d2)
    generates = len(spec.generated_subgroup((d1, d2))) == spec.order
    return PresentationCheck(which, mapping, {"D1": d1, "D2": d2, "D3": d3, "D4": d4}, rel, generates)


# ---------------------------------------------------------------------------
# The G-action and the coset-orbit oracle


def action_periods(n: int) -> tuple[int, ...]:
    return (2 ** (n + 1), 2 ** (n + 1), 2**n, 2)


@dataclass(frozen=True)
class ActionModel:
    """G acting with signature (0; 2^(n+1), 2^(n+1), 2^n, 2) via its generating vector."""

    spec: GroupSpec
    a: int
    c: int

    @classmethod
    def for_curve(cls, n: int, a: int) -> "ActionModel":
        c = compute_c(n, a)
        if c is None:
            raise ValueError(f"(n={n}, a={a}) admits no tau2: 2^(n-1) does not divide 2a+2")
        return cls(GroupSpec.for_c(n, c), a, c)

    @property
    def n(self) -> int:
        return self.spec.n

    @cached_property
    def vector(self) -> tuple[GroupElement, ...]:
        s, n = self.spec, self.spec.n
        return (
            s.tau1_pow(self.a),
            s.tau2_pow(self.a),
            s.tau1_pow(2),
            s.multiply(s.tau1_pow(2 ** (n - 1) * self.c - 1), s.tau2),
        )

    @property
    def signature(self) -> Signature:
        return Signature(0, action_periods(self.n))

    def check(self) -> dict[str, bool]:
        s = self.spec
        orders = tuple(s.element_order(g) for g in self.vector)
        return {
            "product is identity": s.product(self.vector) == s.identity,
            "orders match signature": orders == action_periods(self.n),
            "entries generate G": len(s.generated_subgroup(self.vector)) == s.order,
        }

    @property
    def total_genus(self) -> int:
        g = riemann_hurwitz_genus(self.spec.order, self.signature)
        if g != family_genus(self.n):
            raise InconsistentDataError(f"RH genus {g} != 3(2^n-1)")
        return g

    def named_subgroups(self) -> dict[str, GroupElement]:
        """Generators of the cyclic subgroups H1..H4 (H5 when c is odd)."""
        s, n, c = self.spec, self.n, self.c
        out = {
            "H1": s.tau1,
            "H2": s.tau2,
            "H3": s.tau1_pow(2),
        }
        if c % 2 == 0:
            out["H4"] = s.multiply(s.tau1_pow(2 ** (n - 1) * c - 1), s.tau2)
        else:
            out["H4"] = s.multiply(s.tau1_pow(3 * 2 ** (n - 1) * c - 1), s.tau2)
            out["H5"] = s.multiply(s.tau1_pow(2 ** (n - 1) * c - 1), s.tau2)
        return out


@dataclass
class SubgroupAction:
    subgroup_order: int
    signature: Signature
    fixed_points: int
    cone_points: list[tuple[int, int]] = field(default_factory=list)  # (vector slot, order)

    @property
    def quotient_genus(self) -> int:
        return self.signature.genus


def _cyclic(spec: GroupSpec, g: GroupElement) -> frozenset[GroupElement]:
    return spec.generated_subgroup([g])


def subgroup_signature(action: ActionModel, H: Iterable[GroupElement]) -> SubgroupAction:
    """Signature of S/H computed from group data alone.

    Points of S over the j-th cone point of S/G are the left cosets
    x<g_j>, with G-stabilizer x<g_j>x^-1. H-orbits on them are the double
    cosets H x <g_j>; an orbit whose H-stabilizer H ∩ x<g_j>x^-1 has order
    d > 1 is a cone point of order d on S/H. The quotient genus then
    follows from Riemann-Hurwitz.
    """
    spec = action.spec
    H = frozenset(spec.element(*h) for h in H)
    if not spec.is_subgroup(H):
        raise ValueError("H is not a subgroup")
    cones: list[tuple[int, int]] = []
    fixed = 0
    for slot, g in enumerate(action.vector):
        C = _cyclic(spec, g)
        seen: set[GroupElement] = set()
        for x in spec.elements():
            if x in seen:
                continue
            orbit = {spec.multiply(spec.multiply(h, x), c) for h in H for c in C}
            seen |= orbit
            stab = H & frozenset(spec.conjugate(x, c) for c in C)
            d = len(stab)
            if d > 1:
                cones.append((slot, d))
            if d == len(H):
                fixed += 1
    periods = [d for _, d in cones]
    gamma = quotient_genus(action.total_genus, len(H), periods)
    sig = Signature(gamma, periods)
    if riemann_hurwitz_genus(len(H), sig) != action.total_genus:
        raise InconsistentDataError("quotient signature fails the Riemann-Hurwitz check")
    return SubgroupAction(len(H), sig, fixed if len(H) > 1 else 0, cones)


def cyclic_subgroups_with_fixed_points(action: ActionModel) -> list[frozenset[GroupElement]]:
    """All nontrivial cyclic subgroups that fix at least one point of S."""
    spec = action.spec
    out = []
    seen = set()
    for g in spec.elements():
        if g == spec.identity:
            continue
        H = _cyclic(spec, g)
        if H in seen:
            continue
        seen.add(H)
        if subgroup_signature(action, H).fixed_points:
            out.append(H)
    return out


# ---------------------------------------------------------------------------
# Action on the base sphere

def _neg(label: str) -> str:
    if label in ("0", "inf"):
        return label
    return label[1:] if label.startswith("-") else "-" + label


def _inv(label: str) -> str:
    sign = "-" if label.startswith("-") else ""
    core = label.lstrip("-")
    swap = {"0": "inf", "inf": "0", "1": "1", "lam": "1/lam", "1/lam": "lam"}
    return sign + swap[core]


@dataclass
class SphereAction:
    spec: GroupSpec
    permutations: dict[GroupElement, dict[str, str]]

    def kernel(self) -> frozenset[GroupElement]:
        return frozenset(
            g for g, p in self.permutations.items() if all(p[x] == x for x in BRANCH_LABELS)
        )

    def fixed_branch_points(self, g: GroupElement) -> list[str]:
        p = self.permutations[self.spec.element(*g)]
        return [x for x in BRANCH_LABELS if p[x] == x]

    def is_homomorphism(self) -> bool:
        s = self.spec
        for g in s.elements():
            for h in s.elements():
                gh = self.permutations[s.multiply(g, h)]
                pg, ph = self.permutations[g], self.permutations[h]
                if any(gh[x] != pg[ph[x]] for x in BRANCH_LABELS):
                    return False
        return True


def sphere_matrix(g: GroupElement) -> tuple[int, int, int, int]:
    """Matrix (a, b, c, d) of the Möbius map x -> (a x + b)/(c x + d) induced by g."""
    sign = -1 if g.i % 2 else 1
    return (0, sign, 1, 0) if g.j else (sign, 0, 0, 1)


def sphere_action(spec: GroupSpec) -> SphereAction:
    """tau1 -> (x -> -x), tau2 -> (x -> 1/x) on the eight branch points."""
    perms = {}
    for g in spec.elements():
        p = {}
        for x in BRANCH_LABELS:
            y = _inv(x) if g.j else x
            p[x] = _neg(y) if g.i % 2 else y
        perms[g] = p
    return SphereAction(spec, perms)
