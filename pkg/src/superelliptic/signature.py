"""Fuchsian signatures and Riemann-Hurwitz bookkeeping.

All arithmetic is exact (``fractions.Fraction`` / ``int``).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class InconsistentDataError(ValueError):
    """Raised when a cross-check between two exact computations fails."""


@dataclass(frozen=True, init=False)
class Signature:
    """Quotient genus plus cone periods, periods kept non-increasing."""

    genus: int
    periods: tuple[int, ...]

    def __init__(self, genus: int, periods: Iterable[int] = ()):
        periods = tuple(int(m) for m in periods)
        if int(genus) != genus or genus < 0:
            raise ValueError(f"genus must be a nonnegative integer, got {genus!r}")
        for m in periods:
            if m < 2:
                raise ValueError(f"every period must be >= 2, got {m}")
        object.__setattr__(self, "genus", int(genus))
        object.__setattr__(self, "periods", tuple(sorted(periods, reverse=True)))

    @property
    def r(self) -> int:
        return len(self.periods)

    @property
    def area(self) -> Fraction:
        return 2 * self.genus - 2 + sum((1 - Fraction(1, m) for m in self.periods), Fraction(0))

    @property
    def is_hyperbolic(self) -> bool:
        return self.area > 0

    def to_text(self) -> str:
        return ",".join(str(x) for x in (self.genus, *self.periods))

    @classmethod
    def from_text(cls, text: str) -> "Signature":
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if not parts:
            raise ValueError("empty signature")
        values = [int(p) for p in parts]
        return cls(values[0], values[1:])

    def to_json(self) -> list:
        return [self.genus, list(self.periods)]

    @classmethod
    def from_json(cls, data: str | Sequence) -> "Signature":
        if isinstance(data, str):
            data = json.loads(data)
        genus, periods = data
        return cls(genus, periods)

    def __str__(self) -> str:
        if not self.periods:
            return f"({self.genus};)"
        return f"({self.genus};{','.join(map(str, self.periods))})"


def validate_signature(sig: Signature) -> Fraction:
    """Return 2g - 2 + sum(1 - 1/m_j); positive means a Fuchsian group exists."""
    for m in sig.periods:
        if m < 2:
            raise ValueError(f"period {m} < 2")
    return sig.area


def riemann_hurwitz_genus(group_order: int, quotient_sig: Signature) -> int:
    """Genus of a surface carrying a group of the given order with quotient ``quotient_sig``."""
    if group_order < 1:
        raise ValueError("group order must be positive")
    for m in quotient_sig.periods:
        if group_order % m:
            raise ValueError(f"period {m} does not divide group order {group_order}")
    twice_g_minus_2 = group_order * (2 * quotient_sig.genus - 2) + sum(
        (group_order // m) * (m - 1) for m in quotient_sig.periods
    )
    if twice_g_minus_2 % 2:
        raise InconsistentDataError(f"2g-2 = {twice_g_minus_2} is odd")
    g = twice_g_minus_2 // 2 + 1
    if g < 0:
        raise InconsistentDataError(f"negative genus {g}")
    return g


def quotient_genus(total_genus: int, group_order: int, periods: Iterable[int]) -> int:
    """Solve Riemann-Hurwitz for the quotient genus given the covering genus."""
    periods = list(periods)
    branch = sum(Fraction(group_order, m) * (m - 1) for m in periods)
    rhs = Fraction(2 * total_genus - 2) - branch
    gamma = (rhs / group_order + 2) / 2
    if gamma.denominator != 1 or gamma < 0:
        raise InconsistentDataError(
            f"quotient genus {gamma} is not a nonnegative integer "
            f"(g={total_genus}, |H|={group_order}, periods={periods})"
        )
    return int(gamma)
