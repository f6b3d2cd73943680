"""Generating vectors for cyclic groups Z/nZ.

An epimorphism from a Fuchsian group onto Z/nZ is stored additively: the
cone generator ``x_j`` goes to the residue ``entries[j]`` and, for positive
genus, the handle generators go to ``handle_images`` (all 1 in normal form).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd, prod
from typing import Iterable, Iterator, Sequence

from .signature import Signature

MOVE_SETS = ("scalar", "scalar-perm", "full")
DEFAULT_ENUMERATION_BOUND = 10**7


class EnumerationBoundExceeded(RuntimeError):
    pass


def element_order(x: int, n: int) -> int:
    return n // gcd(x % n, n)


def units(n: int) -> list[int]:
    return [s for s in range(1, n) if gcd(s, n) == 1] if n > 1 else [0]


@dataclass(frozen=True)
class CyclicGenVec:
    modulus: int
    entries: tuple[int, ...]
    handle_images: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "entries", tuple(x % self.modulus for x in self.entries))
        object.__setattr__(
            self, "handle_images", tuple(x % self.modulus for x in self.handle_images)
        )
        if len(self.handle_images) % 2:
            raise ValueError("handle images come in (a_i, b_i) pairs")

    @property
    def genus(self) -> int:
        return len(self.handle_images) // 2

    @property
    def periods(self) -> tuple[int, ...]:
        """Orders of the entries, in entry order (not re-sorted)."""
        return tuple(element_order(x, self.modulus) for x in self.entries)

    @property
    def signature(self) -> Signature:
        return Signature(self.genus, self.periods)

    def scaled(self, s: int) -> "CyclicGenVec":
        return CyclicGenVec(
            self.modulus,
            tuple(s * x for x in self.entries),
            tuple(s * x for x in self.handle_images),
        )

    def permuted(self, perm: Sequence[int]) -> "CyclicGenVec":
        """Entry j of the result is entry ``perm[j]`` of self."""
        return CyclicGenVec(self.modulus, tuple(self.entries[p] for p in perm), self.handle_images)

    def to_text(self) -> str:
        return ",".join(map(str, self.entries))

    @classmethod
    def from_text(cls, modulus: int, text: str) -> "CyclicGenVec":
        return cls(modulus, tuple(int(p) for p in text.split(",") if p.strip()))


def _check_shape(sig: Signature, v: Sequence[int]) -> None:
    if len(v) != sig.r:
        raise ValueError(f"vector has {len(v)} entries but signature has {sig.r} periods")


def is_generating_vector(
    n: int, sig: Signature, v: Sequence[int], handle_images: Sequence[int] | None = None
) -> bool:
    """Check the three generating-vector axioms for Z/nZ.

    Handle images default to the Kuribayashi normal form (all 1). In an
    abelian target the commutators vanish, so the long relation reduces to
    ``sum(v) == 0 mod n``.
    """
    _check_shape(sig, v)
    if handle_images is None:
        handle_images = (1,) * (2 * sig.genus)
    if len(handle_images) != 2 * sig.genus:
        raise ValueError("need 2*genus handle images")
    if sum(v) % n:
        return False
    if any(element_order(x, n) != m for x, m in zip(v, sig.periods)):
        return False
    return gcd(n, *v, *handle_images) == 1


def period_preserving_permutations(periods: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All permutations mu of positions with periods[mu(j)] == periods[j]."""
    blocks: dict[int, list[int]] = {}
    for j, m in enumerate(periods):
        blocks.setdefault(m, []).append(j)
    groups = list(blocks.values())
    for choice in itertools.product(*(itertools.permutations(b) for b in groups)):
        perm = [0] * len(periods)
        for block, image in zip(groups, choice):
            for src, dst in zip(block, image):
                perm[src] = dst
        yield tuple(perm)


def kuribayashi_normalize(
    n: int,
    sig: Signature,
    entries: Sequence[int],
    handle_images: Sequence[int] = (),
    perm: Sequence[int] | None = None,
) -> CyclicGenVec:
    """Normal form of an epimorphism onto Z/nZ: all handle images set to 1.

    For a cyclic target the conjugations in Kuribayashi's lemma are trivial, so
    the cone entries only undergo the (period-preserving) permutation ``perm``.
    """
    _check_shape(sig, entries)
    if len(handle_images) != 2 * sig.genus:
        raise ValueError("need 2*genus handle images")
    if gcd(n, *entries, *handle_images) != 1:
        raise ValueError("input does not define a surjection onto Z/nZ")
    if sum(entries) % n:
        raise ValueError("cone entries violate the long relation")
    if any(element_order(x, n) != m for x, m in zip(entries, sig.periods)):
        raise ValueError("entry orders differ from the periods (kernel has torsion)")
    if perm is None:
        perm = tuple(range(sig.r))
    if sorted(perm) != list(range(sig.r)) or any(
        sig.periods[p] != sig.periods[j] for j, p in enumerate(perm)
    ):
        raise ValueError(f"{perm} is not a period-preserving permutation")
    return CyclicGenVec(n, tuple(entries[p] for p in perm), (1,) * (2 * sig.genus))


def _same_type(v1: CyclicGenVec, v2: CyclicGenVec) -> None:
    if v1.modulus != v2.modulus:
        raise ValueError(f"modulus mismatch: {v1.modulus} vs {v2.modulus}")
    if v1.genus != v2.genus or v1.periods != v2.periods:
        raise ValueError(
            f"signature mismatch: {v1.genus};{v1.periods} vs {v2.genus};{v2.periods}"
        )


def scalar_equivalent(v1: CyclicGenVec, v2: CyclicGenVec) -> int | None:
    """Least unit s with v2 == s * v1 entrywise, or None.

    Existence of such an s makes the two actions directly topologically
    equivalent.
    """
    _same_type(v1, v2)
    n = v1.modulus
    for s in units(n):
        if all((s * x - y) % n == 0 for x, y in zip(v1.entries, v2.entries)):
            return s if n > 1 else 1
    return None


def gilman_necessity_check(
    v1: CyclicGenVec, v2: CyclicGenVec, s: int, perm: Sequence[int] | None = None
) -> bool:
    """Necessary condition on an equivalence witness: v2[perm[j]] == s * v1[j]."""
    if len(v1.entries) != len(v2.entries) or v1.modulus != v2.modulus:
        raise ValueError("shape mismatch")
    n = v1.modulus
    if perm is None:
        perm = range(len(v1.entries))
    perm = tuple(perm)
    if sorted(perm) != list(range(len(v1.entries))):
        raise ValueError(f"{perm} is not a permutation")
    if n > 1 and gcd(s, n) != 1:
        return False
    return all((v2.entries[p] - s * x) % n == 0 for x, p in zip(v1.entries, perm))


def candidate_count(n: int, sig: Signature) -> int:
    """Number of tuples tried by :func:`enumerate_generating_vectors`."""
    counts = [sum(1 for x in range(n) if element_order(x, n) == m) for m in sig.periods[:-1]]
    return prod(counts)


def enumerate_generating_vectors(
    n: int, sig: Signature, bound: int = DEFAULT_ENUMERATION_BOUND
) -> Iterator[tuple[int, ...]]:
    """All generating vectors of type ``sig`` (genus 0) in lexicographic order."""
    if sig.genus != 0:
        raise ValueError("enumeration is implemented for genus-0 signatures")
    if sig.r == 0:
        return
    if any(n % m for m in sig.periods):
        return
    total = candidate_count(n, sig)
    if total > bound:
        raise EnumerationBoundExceeded(f"{total} candidate tuples exceed bound {bound}")
    pools = [[x for x in range(n) if element_order(x, n) == m] for m in sig.periods[:-1]]
    last = sig.periods[-1]
    for head in itertools.product(*pools):
        tail = (-sum(head)) % n
        if element_order(tail, n) != last:
            continue
        v = (*head, tail)
        if gcd(n, *v) == 1:
            yield v


@dataclass
class Classification:
    modulus: int
    signature: Signature
    move_set: str
    classes: list[tuple[tuple[int, ...], int]]
    vector_count: int

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "signature": self.signature.to_json(),
            "move_set": self.move_set,
            "vector_count": self.vector_count,
            "class_count": self.class_count,
            "classes": [{"representative": list(rep), "size": size} for rep, size in self.classes],
        }


def _orbit(v: tuple[int, ...], n: int, scalars: Iterable[int], perms: list[tuple[int, ...]]):
    out = set()
    for s in scalars:
        w = tuple((s * x) % n for x in v)
        for p in perms:
            out.add(tuple(w[i] for i in p))
    return out


def classify_orbits(
    n: int, sig: Signature, moves: str = "scalar", bound: int = DEFAULT_ENUMERATION_BOUND
) -> Classification:
    """Partition all generating vectors of type ``sig`` under a move set.

    ``scalar`` uses v -> s*v for units s; ``scalar-perm`` adds
    period-preserving permutations of the entries; ``full`` adds global
    negation. Negation is the unit s = -1, so for cyclic groups ``full`` and
    ``scalar-perm`` give the same partition.
    """
    if moves not in MOVE_SETS:
        raise ValueError(f"unknown move set {moves!r}; choose from {MOVE_SETS}")
    vectors = list(enumerate_generating_vectors(n, sig, bound))
    scalars = units(n)
    if moves == "full":
        scalars = sorted(set(scalars) | {(-s) % n for s in scalars})
    if moves == "scalar":
        perms = [tuple(range(sig.r))]
    else:
        perms = list(period_preserving_permutations(sig.periods))
    label: dict[tuple[int, ...], tuple[int, ...]] = {}
    sizes: dict[tuple[int, ...], int] = {}
    for v in vectors:
        if v in label:
            continue
        orbit = _orbit(v, n, scalars, perms)
        rep = min(orbit)
        for w in orbit:
            label[w] = rep
        sizes[rep] = len(orbit)
    classes = sorted(sizes.items())
    return Classification(n, sig, moves, classes, len(vectors))
