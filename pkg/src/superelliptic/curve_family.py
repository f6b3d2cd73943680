"""The curves y^(2^n) = x^a (x^2-1)^a (x^2-lam^2)(x^2-lam^-2) as covering data.

Only the combinatorics of the degree-2^n map (x, y) -> x is modelled:
parameters, singular points of the plane model, chart exponents, the
branch set and the genus.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .fields import QuadElem
from .signature import InconsistentDataError, Signature, riemann_hurwitz_genus

P0 = "[0,0,1]"
Q0_PLUS = "[1,0,0]"   # Q0 when 2^n - 3a - 4 > 0
Q0_MINUS = "[0,1,0]"  # Q0 when 2^n - 3a - 4 < 0
PLUS_ONE = "[1,0,1]"
MINUS_ONE = "[-1,0,1]"

SINGULAR_POINTS = {
    1: (),
    2: (P0, PLUS_ONE, MINUS_ONE),
    3: (Q0_PLUS,),
    4: (P0, Q0_PLUS, PLUS_ONE, MINUS_ONE),
    5: (P0, Q0_MINUS, PLUS_ONE, MINUS_ONE),
    6: (Q0_MINUS,),
}

# cases with no tau-automorphisms (2, 3) or treated in earlier work (6)
EXTERNAL_CASES = {2: "no tau-automorphisms", 3: "no tau-automorphisms", 6: "prior work (n <= 2)"}


def compute_c(n: int, a: int) -> int | None:
    """c with c * 2^(n-1) = 2a + 2, or None when that is not integral."""
    if n < 1 or a < 1 or a % 2 == 0:
        raise ValueError(f"need n >= 1 and odd a >= 1, got n={n}, a={a}")
    q, r = divmod(2 * a + 2, 2 ** (n - 1))
    return q if r == 0 else None


@dataclass(frozen=True)
class CaseInfo:
    case: int
    singular_points: tuple[str, ...]
    infinity_point: str

    @property
    def external(self) -> str | None:
        return EXTERNAL_CASES.get(self.case)


def classify_case(n: int, a: int) -> CaseInfo:
    """Singular-point classification of (n, a): case tag and singular points of the plane model."""
    if a < 1 or a % 2 == 0:
        raise ValueError(f"a must be a positive odd integer, got {a}")
    s = 2**n - 3 * a - 4
    # 2^n - 3a - 4 = 0 forces a even
    assert s != 0, (n, a)
    if s > 0:
        on_line = 2**n - 3 * a - 5 == 0
        if a == 1:
            case = 1 if on_line else 3
        else:
            case = 2 if on_line else 4
        infinity = Q0_PLUS
    else:
        case = 6 if a == 1 else 5
        infinity = Q0_MINUS
    return CaseInfo(case, SINGULAR_POINTS[case], infinity)


def genus(n: int) -> int:
    """3(2^n - 1), cross-checked by Riemann-Hurwitz over 8 branch points."""
    if n < 1:
        raise ValueError("n must be >= 1")
    g = 3 * (2**n - 1)
    rh = riemann_hurwitz_genus(2**n, Signature(0, [2**n] * 8))
    if rh != g:
        raise InconsistentDataError(f"genus formula {g} != Riemann-Hurwitz {rh}")
    return g


def chart_exponents(point: str, case: int, n: int, a: int) -> tuple[int, int, int]:
    """Exponents of the normalization chart at a singular point.

    [0,0,1]  : s -> [s^(2^n), s^a h(s), 1]          -> (2^n, a, 0)
    [+-1,0,1]: s -> [s^(2^n) +- 1, s^a h(s), 1]     -> (2^n, a, 0)
    [1,0,0]  : t -> [1, t^(2^n-3a-4) h(t), t^(2^n)]  -> (0, 2^n-3a-4, 2^n)
    [0,1,0]  : t -> [t^(3a+4-2^n) g(t), 1, t^(3a+4)] -> (3a+4-2^n, 0, 3a+4)

    For [+-1,0,1] the first exponent is that of the deviation from +-1.
    """
    info = classify_case(n, a)
    if info.case != case:
        raise ValueError(f"(n={n}, a={a}) is case {info.case}, not {case}")
    if point not in info.singular_points:
        raise ValueError(f"{point} is not singular in case {case}")
    N = 2**n
    if point in (P0, PLUS_ONE, MINUS_ONE):
        return (N, a, 0)
    if point == Q0_PLUS:
        return (0, N - 3 * a - 4, N)
    return (3 * a + 4 - N, 0, 3 * a + 4)


# ---------------------------------------------------------------------------
# lambda and the branch set

LambdaValue = Union[None, Fraction, QuadElem]


def parse_lambda(value) -> LambdaValue:
    if value is None or isinstance(value, (Fraction, QuadElem)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"unsupported lambda value {value!r}")


def lambda_to_str(lam: LambdaValue) -> str:
    return "symbolic" if lam is None else str(lam)


def check_lambda(lam: LambdaValue) -> None:
    if lam is None:
        return
    l4 = lam * lam * lam * lam
    if l4 == 0 or l4 == 1:
        raise ValueError(f"lambda^4 must avoid 0 and 1 (lambda = {lam})")


@dataclass(frozen=True)
class CurveParams:
    n: int
    a: int
    lam: LambdaValue = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.a < 1 or self.a % 2 == 0:
            raise ValueError(f"a must be a positive odd integer, got {self.a}")
        object.__setattr__(self, "lam", parse_lambda(self.lam))
        check_lambda(self.lam)

    @property
    def c(self) -> int | None:
        return compute_c(self.n, self.a)

    @property
    def case(self) -> CaseInfo:
        return classify_case(self.n, self.a)

    @property
    def case_tag(self) -> int:
        return self.case.case

    @property
    def genus(self) -> int:
        return genus(self.n)


INF = "inf"
BRANCH_LABELS = ("0", "inf", "1", "-1", "lam", "-lam", "1/lam", "-1/lam")


@dataclass(frozen=True)
class BranchSet:
    labels: tuple[str, ...]
    values: tuple | None  # exact values when lambda is concrete
    multiplicity: int
    distinct: bool

    def to_json(self) -> dict:
        return {
            "labels": list(self.labels),
            "values": None if self.values is None else [str(v) for v in self.values],
            "multiplicity": self.multiplicity,
            "distinct": self.distinct,
        }


def branch_values(lam: Fraction | QuadElem) -> tuple:
    inv = 1 / lam
    return (Fraction(0), INF, Fraction(1), Fraction(-1), lam, -lam, inv, -inv)


def branch_set(params: CurveParams) -> BranchSet:
    """The eight branch points of (x, y) -> x, each of multiplicity 2^n."""
    mult = 2**params.n
    if params.lam is None:
        return BranchSet(BRANCH_LABELS, None, mult, True)
    values = branch_values(params.lam)
    for i in range(len(values)):
        for j in range(i):
            if values[i] == values[j]:
                raise ValueError(
                    f"branch points {BRANCH_LABELS[j]} and {BRANCH_LABELS[i]} coincide "
                    f"for lambda = {params.lam}"
                )
    return BranchSet(BRANCH_LABELS, values, mult, True)
