"""Rotation numbers at fixed points and the reconstruction of cyclic epimorphisms.

A rotation number omega_m^j (omega_m = exp(2 pi i / m)) is stored as the
reduced pair (j, m); no complex numbers are involved.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .curve_family import MINUS_ONE, P0, PLUS_ONE, classify_case, compute_c
from .group_algebra import GroupElement, GroupSpec

LAMBDA_POINTS = ("[lam,0,1]", "[-lam,0,1]", "[1/lam,0,1]", "[-1/lam,0,1]")


@dataclass(frozen=True)
class RotationNumber:
    numerator: int
    order: int

    def __post_init__(self):
        if self.order < 2:
            raise ValueError(f"order must be >= 2, got {self.order}")
        j = self.numerator % self.order
        if gcd(j, self.order) != 1:
            raise ValueError(f"omega_{self.order}^{self.numerator} is not a primitive root")
        object.__setattr__(self, "numerator", j)

    def power(self, k: int) -> "RotationNumber":
        """delta(tau^k) = delta(tau)^k, re-expressed as a primitive root."""
        e = (self.numerator * k) % self.order
        g = gcd(e, self.order)
        if self.order // g == 1:
            raise ValueError("power is trivial")
        return RotationNumber(e // g, self.order // g)

    def to_json(self) -> list[int]:
        return [self.numerator, self.order]

    def __str__(self):
        return f"w{self.order}" if self.numerator == 1 else f"w{self.order}^{self.numerator}"


def harvey_xi(eta: int, m: int) -> int:
    """The xi in [1, m) with eta * xi = 1 mod m."""
    if m < 2:
        raise ValueError("m must be >= 2")
    if gcd(eta, m) != 1:
        raise ValueError(f"{eta} is not a unit mod {m}")
    return pow(eta, -1, m)


@dataclass(frozen=True)
class FixedPointDatum:
    """A cone point of the quotient seen from one of its preimages.

    ``generator`` is the stabilizer generator tau_j written as a residue of
    the cyclic group acting (1 for the whole group, 2 for its index-2
    subgroup, ...).
    """

    point_label: str
    stabilizer_order: int
    eta: int
    generator: int = 1


def theta_from_fixed_points(data: Sequence[FixedPointDatum]) -> tuple[int, ...]:
    """Exponents xi_j with theta(x_j) = tau_j^xi_j."""
    return tuple(harvey_xi(d.eta, d.stabilizer_order) for d in data)


def generating_vector_from_fixed_points(data: Sequence[FixedPointDatum], modulus: int) -> tuple[int, ...]:
    """Residues of theta(x_j) in Z/modulus, given each tau_j as a residue."""
    xis = theta_from_fixed_points(data)
    return tuple((d.generator * xi) % modulus for d, xi in zip(data, xis))


def generator_change_consistency(eta: int, m: int, t: int) -> bool:
    """Replacing tau by tau^t must not change the reconstructed element."""
    if gcd(t, m) != 1:
        raise ValueError(f"{t} is not a unit mod {m}")
    xi = harvey_xi(eta, m)
    xi_hat = harvey_xi((t * eta) % m, m)
    return (xi - t * xi_hat) % m == 0


# ---------------------------------------------------------------------------
# delta_P tables


@dataclass(frozen=True)
class DeltaRow:
    generator: str  # "tau1" or "tau2"
    power: int
    element: GroupElement
    point: str
    rotation: RotationNumber
    condition: str | None = None

    def to_json(self) -> dict:
        out = {
            "element": list(self.element),
            "word": f"{self.generator}^{self.power}" if self.power != 1 else self.generator,
            "point": self.point,
            "rotation": self.rotation.to_json(),
        }
        if self.condition:
            out["condition"] = self.condition
        return out


# Golden copy of the case (1) table: n = 3, a = 1, c = 1.
CASE1_TABLE = (
    ("tau1", 1, P0, (1, 16)),
    ("tau1", 1, "[1,0,0]", (9, 16)),
    ("tau1", 9, "[1,0,0]", (1, 16)),
    ("tau2", 1, PLUS_ONE, (1, 16)),
    ("tau2", 1, MINUS_ONE, (9, 16)),
    ("tau2", 9, MINUS_ONE, (1, 16)),
    ("tau1", 2, "[lam,0,1]", (1, 8)),
    ("tau1", 2, "[-lam,0,1]", (1, 8)),
    ("tau1", 2, "[1/lam,0,1]", (1, 8)),
    ("tau1", 2, "[-1/lam,0,1]", (1, 8)),
)


@dataclass(frozen=True)
class LocalExponents:
    """j_0, j_inf, j_1, j_-1 from their defining congruences mod 2^(n+1)."""

    j0: int
    j_inf: int
    j1: int
    j_minus1: int

    @classmethod
    def compute(cls, n: int, a: int, c: int) -> "LocalExponents":
        M = 2 ** (n + 1)
        inv_a = pow(a, -1, M)
        j_minus1 = inv_a if c % 2 == 0 else ((2**n + 1) * inv_a) % M
        return cls(inv_a, pow(-3 * a - 4, -1, M), inv_a, j_minus1)


def _row(spec: GroupSpec, gen: str, k: int, point: str, rot: tuple[int, int], cond=None) -> DeltaRow:
    elem = spec.tau1_pow(k) if gen == "tau1" else spec.tau2_pow(k)
    return DeltaRow(gen, k, elem, point, RotationNumber(*rot), cond)


def delta_table(n: int, case_tag: int, a: int | None = None) -> list[DeltaRow]:
    """delta_P(tau) at every fixed point, for cases 1, 4 and 5 of the singular-point classification.

    Case 1 is returned verbatim. For cases 4 and 5 ``a`` is required; only
    the rows for the actual parity of c are emitted.
    """
    if case_tag in (2, 3, 6):
        raise ValueError(f"case {case_tag} has no delta table (no tau-automorphisms or prior work)")
    if case_tag == 1:
        if n != 3 or a not in (None, 1):
            raise ValueError("case 1 is n = 3, a = 1")
        spec = GroupSpec.semidirect(3)
        return [_row(spec, g, k, p, r) for g, k, p, r in CASE1_TABLE]
    if case_tag not in (4, 5):
        raise ValueError(f"unknown case {case_tag}")
    if a is None:
        raise ValueError(f"case {case_tag} needs a")
    info = classify_case(n, a)
    if info.case != case_tag:
        raise ValueError(f"(n={n}, a={a}) is case {info.case}")
    c = compute_c(n, a)
    if c is None:
        raise ValueError(f"(n={n}, a={a}) admits no tau2")
    return formula_table(n, a)


def formula_table(n: int, a: int) -> list[DeltaRow]:
    """The case (4)/(5) rows evaluated at (n, a); also valid for a = 1, n = 3."""
    c = compute_c(n, a)
    if c is None:
        raise ValueError(f"(n={n}, a={a}) admits no tau2")
    spec = GroupSpec.for_c(n, c)
    M = 2 ** (n + 1)
    q0 = classify_case(n, a).infinity_point
    js = LocalExponents.compute(n, a, c)
    rows = [
        _row(spec, "tau1", 1, P0, (js.j0, M)),
        _row(spec, "tau1", a, P0, (1, M)),
        _row(spec, "tau1", 1, q0, (js.j_inf, M)),
        _row(spec, "tau1", -3 * a - 4, q0, (1, M)),
        _row(spec, "tau2", 1, PLUS_ONE, (js.j1, M)),
        _row(spec, "tau2", a, PLUS_ONE, (1, M)),
    ]
    if c % 2 == 0:
        rows += [
            _row(spec, "tau2", 1, MINUS_ONE, (js.j_minus1, M), "c even"),
            _row(spec, "tau2", a, MINUS_ONE, (1, M), "c even"),
        ]
    else:
        rows += [
            _row(spec, "tau2", 1, MINUS_ONE, (js.j_minus1, M), "c odd"),
            _row(spec, "tau2", a, MINUS_ONE, (2**n + 1, M), "c odd"),
            _row(spec, "tau2", a * (2**n + 1), MINUS_ONE, (1, M), "c odd"),
        ]
    rows += [_row(spec, "tau1", 2, p, (1, M // 2)) for p in LAMBDA_POINTS]
    return rows


def _base(rows: Iterable[DeltaRow], gen: str, point: str) -> DeltaRow:
    for r in rows:
        if r.generator == gen and r.point == point and r.power == 1:
            return r
    raise KeyError((gen, point))


def table_multiplicativity(rows: Sequence[DeltaRow]) -> list[tuple[DeltaRow, bool]]:
    """For each row tau^k at P with a row tau at P, check delta(tau^k) = delta(tau)^k."""
    out = []
    for r in rows:
        if r.power == 1:
            continue
        try:
            base = _base(rows, r.generator, r.point)
        except KeyError:
            continue
        out.append((r, base.rotation.power(r.power) == r.rotation))
    return out


# ---------------------------------------------------------------------------
# Fixed-point data for H1 = <tau1> and H2 = <tau2>


def h1_fixed_point_data(n: int, a: int) -> list[FixedPointDatum]:
    """Cone points of S/<tau1> seen at [0,0,1], tau2([0,0,1]), [1,0,1], [lam,0,1], [1/lam,0,1].

    tau1^2 = tau2^2 generates the stabilizer of [1,0,1] in <tau1>, so its
    rotation there is the square of delta(tau2).
    """
    rows = formula_table(n, a)
    q0 = classify_case(n, a).infinity_point
    at_one = _base(rows, "tau2", PLUS_ONE).rotation.power(2)
    lam = _base_power(rows, "tau1", 2, LAMBDA_POINTS[0])
    lam_inv = _base_power(rows, "tau1", 2, LAMBDA_POINTS[2])
    return [
        _datum(P0, _base(rows, "tau1", P0).rotation, 1),
        _datum(q0, _base(rows, "tau1", q0).rotation, 1),
        _datum(PLUS_ONE, at_one, 2),
        _datum(LAMBDA_POINTS[0], lam, 2),
        _datum(LAMBDA_POINTS[2], lam_inv, 2),
    ]


def h2_fixed_point_data(n: int, a: int) -> list[FixedPointDatum]:
    """Cone points of S/<tau2> seen at [1,0,1], [-1,0,1], [0,0,1], [lam,0,1], [1/lam,0,1]."""
    rows = formula_table(n, a)
    at_zero = _base(rows, "tau1", P0).rotation.power(2)
    return [
        _datum(PLUS_ONE, _base(rows, "tau2", PLUS_ONE).rotation, 1),
        _datum(MINUS_ONE, _base(rows, "tau2", MINUS_ONE).rotation, 1),
        _datum(P0, at_zero, 2),
        _datum(LAMBDA_POINTS[0], _base_power(rows, "tau1", 2, LAMBDA_POINTS[0]), 2),
        _datum(LAMBDA_POINTS[2], _base_power(rows, "tau1", 2, LAMBDA_POINTS[2]), 2),
    ]


def _base_power(rows, gen, k, point) -> RotationNumber:
    for r in rows:
        if r.generator == gen and r.power == k and r.point == point:
            return r.rotation
    raise KeyError((gen, k, point))


def _datum(point: str, rot: RotationNumber, generator: int) -> FixedPointDatum:
    return FixedPointDatum(point, rot.order, rot.numerator, generator)


def closed_form_h1_vector(n: int, a: int) -> tuple[int, ...]:
    M = 2 ** (n + 1)
    return tuple(x % M for x in (a, -3 * a - 4, 2 * a, 2, 2))


def closed_form_h2_vector(n: int, a: int) -> tuple[int, ...]:
    M = 2 ** (n + 1)
    c = compute_c(n, a)
    if c is None:
        raise ValueError(f"(n={n}, a={a}) admits no tau2")
    second = a if c % 2 == 0 else a * (2**n + 1)
    return tuple(x % M for x in (a, second, 2 * a, 2, 2))
