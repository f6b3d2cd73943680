"""Exact scalars: Q, Q(sqrt d) and the rational function field Q(t).

Only what the Möbius and branch-set computations need. Polynomials are
dense tuples of ``Fraction`` coefficients, lowest degree first.
"""
from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from itertools import product
from math import gcd, isqrt, lcm
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction, "QuadElem"]


def squarefree_part(d: int) -> tuple[int, int]:
    """Write d = k^2 * f with f squarefree; return (k, f)."""
    if d == 0:
        return 0, 0
    sign = -1 if d < 0 else 1
    d = abs(d)
    k, f, p = 1, 1, 2
    while p * p <= d:
        while d % (p * p) == 0:
            d //= p * p
            k *= p
        if d % p == 0:
            d //= p
            f *= p
        p += 1
    return k, sign * f * d


def rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    p, q = isqrt(x.numerator), isqrt(x.denominator)
    if p * p == x.numerator and q * q == x.denominator:
        return Fraction(p, q)
    return None


class QuadElem:
    """p + q*sqrt(d) with rational p, q and squarefree d != 0, 1."""

    __slots__ = ("p", "q", "d")

    def __init__(self, p, q, d: int):
        k, f = squarefree_part(d)
        if f in (0, 1):
            raise ValueError(f"sqrt({d}) is rational; use Fraction instead")
        self.p = Fraction(p)
        self.q = Fraction(q) * k
        self.d = f

    @classmethod
    def sqrt(cls, d: int) -> "QuadElem":
        return cls(0, 1, d)

    def _coerce(self, other) -> "QuadElem | None":
        if isinstance(other, QuadElem):
            if other.d != self.d:
                raise ValueError(f"cannot mix Q(sqrt {self.d}) and Q(sqrt {other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(other, 0, self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.p + o.p, self.q + o.q, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.p, -self.q, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.p * o.p + self.d * self.q * o.q, self.p * o.q + self.q * o.p, self.d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.p * self.p - self.d * self.q * self.q

    def conjugate(self) -> "QuadElem":
        return QuadElem(self.p, -self.q, self.d)

    def inverse(self) -> "QuadElem":
        nm = self.norm()
        if nm == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return QuadElem(self.p / nm, -self.q / nm, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadElem(1, 0, self.d)
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, QuadElem):
            return (self.p, self.q, self.d) == (other.p, other.q, other.d)
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and self.p == other
        return NotImplemented

    def __hash__(self):
        if self.q == 0:
            return hash(self.p)
        return hash((self.p, self.q, self.d))

    def __repr__(self):
        return f"QuadElem({self.p}, {self.q}, {self.d})"

    def __str__(self):
        if self.q == 0:
            return str(self.p)
        root = f"sqrt({self.d})"
        q = "" if self.q == 1 else "-" if self.q == -1 else f"{self.q}*"
        if self.p == 0:
            return f"{q}{root}"
        sign = "+" if self.q > 0 else "-"
        qa = abs(self.q)
        qs = "" if qa == 1 else f"{qa}*"
        return f"{self.p}{sign}{qs}{root}"


def as_scalar(x) -> Scalar:
    if isinstance(x, (QuadElem, Fraction)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


# ---------------------------------------------------------------------------
# Polynomials over Q


@total_ordering
class Poly:
    """Univariate polynomial over Q; ``coeffs[k]`` multiplies t**k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def t(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(o.coeffs):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly((1,))
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        while len(rem) - 1 >= dq and rem:
            k = len(rem) - 1 - dq
            c = rem[-1] / other.lead
            quot[k] = c
            for i, y in enumerate(other.coeffs):
                rem[i + k] -= c * y
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return Poly(c / self.lead for c in self.coeffs)

    def primitive(self) -> "Poly":
        """Integer coefficients, content 1, positive leading coefficient."""
        if self.is_zero():
            return self
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = gcd(*ints)
        if ints[-1] < 0:
            g = -g
        return Poly(Fraction(x, g) for x in ints)

    def int_coeffs(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.primitive().coeffs)

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: "Poly") -> "Poly":
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __lt__(self, other):
        return (self.degree, self.coeffs) < (other.degree, other.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def to_str(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = to_str


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_factorization(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm; factors are monic and pairwise coprime."""
    if f.degree < 1:
        return []
    f = f.monic()
    out = []
    d = f.derivative()
    a = poly_gcd(f, d)
    b = f // a
    c = d // a
    i = 1
    while b.degree > 0:
        dd = c - b.derivative()
        g = poly_gcd(b, dd)
        if g.degree > 0:
            out.append((g, i))
        b = b // g
        c = dd // g
        i += 1
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [k for k in range(1, isqrt(n) + 1) if n % k == 0]
    return sorted(set(small + [n // k for k in small]))


def rational_roots(f: Poly) -> list[Fraction]:
    """All rational roots of f (rational root test)."""
    if f.is_zero():
        raise ValueError("zero polynomial has every root")
    cs = list(f.primitive().int_coeffs())
    roots = []
    if cs[0] == 0:
        roots.append(Fraction(0))
        while cs and cs[0] == 0:
            cs.pop(0)
    if len(cs) <= 1:
        return roots
    for p in _divisors(cs[0]):
        for q in _divisors(cs[-1]):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if Poly(cs)(cand) == 0 and cand not in roots:
                    roots.append(cand)
    return sorted(roots)


def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> Poly:
    out = Poly()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        term = Poly((yi,))
        for j, xj in enumerate(xs):
            if j != i:
                term = term * Poly((Fraction(-xj, xi - xj), Fraction(1, xi - xj)))
        out = out + term
    return out


def _quadratic_factor(f: Poly) -> Poly | None:
    """Find a degree-2 factor of an integer polynomial by Kronecker's method."""
    xs = [0, 1, -1]
    vals = [int(f(x)) for x in xs]
    if any(v == 0 for v in vals):
        return None
    choices = [[s * d for d in _divisors(v) for s in (1, -1)] for v in vals]
    for ys in product(*choices):
        g = _interpolate(xs, ys)
        if g.degree != 2:
            continue
        if (f % g).is_zero():
            return g.primitive()
    return None


def irreducible_factors(f: Poly, max_degree: int = 5) -> list[Poly]:
    """Distinct irreducible factors over Q, as primitive integer polynomials.

    Complete for squarefree parts of degree <= 5: linear factors by the
    rational root test, then quadratic factors by Kronecker's method; what is
    left has no factor of degree <= 2 and is therefore irreducible.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    out: list[Poly] = []
    for part, _mult in squarefree_factorization(f):
        rest = part.primitive()
        for r in rational_roots(rest):
            lin = Poly((-r, 1)).primitive()
            out.append(lin)
            rest = (rest // lin).primitive()
        while rest.degree >= 4:
            g = _quadratic_factor(rest)
            if g is None:
                break
            out.append(g)
            rest = (rest // g).primitive()
        if rest.degree >= 1:
            if rest.degree > max_degree:
                raise ValueError(f"factorization beyond degree {max_degree} is not supported")
            out.append(rest)
    return sorted(set(out))


def quadratic_roots(f: Poly) -> list[Scalar]:
    """Roots of a degree-2 polynomial in Q or Q(sqrt d)."""
    if f.degree != 2:
        raise ValueError("need a quadratic")
    c0, c1, c2 = f.coeffs
    disc = c1 * c1 - 4 * c2 * c0
    root = rational_sqrt(disc)
    if root is not None:
        return sorted({(-c1 + root) / (2 * c2), (-c1 - root) / (2 * c2)})
    # disc = num/den = num*den / den^2
    k, d = squarefree_part(disc.numerator * disc.denominator)
    s = Fraction(k, disc.denominator)
    return [QuadElem(-c1 / (2 * c2), sgn * s / (2 * c2), d) for sgn in (1, -1)]


# ---------------------------------------------------------------------------
# Rational functions over Q


class RatFunc:
    """num/den with gcd 1 and monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly((num,))
        den = Poly((1,)) if den is None else den if isinstance(den, Poly) else Poly((den,))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lc = den.lead
        self.num = Poly(c / lc for c in num.coeffs)
        self.den = Poly(c / lc for c in den.coeffs)

    @classmethod
    def t(cls) -> "RatFunc":
        return cls(Poly.t())

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc(Poly((other,)))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num**k, self.den**k)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        """Evaluate at a scalar; the denominator must not vanish there."""
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def substitute(self, inner: "RatFunc") -> "RatFunc":
        """self(inner(t))."""
        def ev(p: Poly) -> RatFunc:
            acc = RatFunc(0)
            for c in reversed(p.coeffs):
                acc = acc * inner + c
            return acc

        return ev(self.num) / ev(self.den)

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def to_str(self, var: str = "t") -> str:
        if self.den == 1:
            return self.num.to_str(var)
        return f"({self.num.to_str(var)})/({self.den.to_str(var)})"

    __str__ = to_str
