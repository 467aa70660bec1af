"""Cube-cutting operads: iterated equal subdivisions of the unit k-cube.

A :class:`CutTree` node cuts its box along one axis into ``len(parts)``
equal slabs; the allowed slab counts on axis j form the set ``cuts[j]``,
which must be multiplicatively independent.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .errors import OperadError
from .forest import LEAF, Tree


def prime_exponents(m: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [r[:] for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


@lru_cache(maxsize=None)
def _independent(ns: frozenset[int]) -> bool:
    factored = [prime_exponents(m) for m in sorted(ns)]
    primes = sorted({p for f in factored for p in f})
    rows = [[Fraction(f.get(p, 0)) for p in primes] for f in factored]
    return _rank(rows) == len(rows)


def independence_check(ns: Iterable[int]) -> bool:
    """True iff no nontrivial product of powers of the numbers equals 1."""
    ns = frozenset(ns)
    if any(m < 2 for m in ns):
        raise OperadError("cut counts must be at least 2")
    return _independent(ns)


Cuts = tuple[frozenset[int], ...]


@dataclass(frozen=True)
class CutTree:
    cuts: Cuts
    axis: int | None = None
    parts: tuple[CutTree, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "cuts", tuple(frozenset(c) for c in self.cuts))
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.cuts:
            raise OperadError("dimension must be at least 1")
        for c in self.cuts:
            if not independence_check(c):
                raise OperadError(f"cut counts {sorted(c)} are not independent")
        if self.axis is None:
            if self.parts:
                raise OperadError("a leaf has no parts")
            return
        if not 0 <= self.axis < len(self.cuts):
            raise OperadError(f"axis {self.axis} out of range for dimension {self.k}")
        if len(self.parts) not in self.cuts[self.axis]:
            raise OperadError(f"cutting axis {self.axis + 1} into {len(self.parts)} is not allowed")
        for p in self.parts:
            if p.cuts != self.cuts:
                raise OperadError("parts carry different cut data")

    @classmethod
    def leaf(cls, cuts) -> CutTree:
        return cls(cuts)

    @classmethod
    def split(cls, cuts, axis: int, parts) -> CutTree:
        return cls(cuts, axis, tuple(parts))

    @property
    def k(self) -> int:
        return len(self.cuts)

    @property
    def is_leaf(self) -> bool:
        return self.axis is None

    @property
    def arity(self) -> int:
        """Number of input slots, i.e. leaves."""
        if self.is_leaf:
            return 1
        return sum(p.arity for p in self.parts)

    def __str__(self) -> str:
        if self.is_leaf:
            return "*"
        inner = ",".join(str(p) for p in self.parts)
        return f"({self.axis + 1},{len(self.parts)}:{inner})"


@dataclass(frozen=True)
class Box:
    sides: tuple[tuple[Fraction, Fraction], ...]

    @classmethod
    def unit(cls, k: int) -> Box:
        return cls(tuple((Fraction(0), Fraction(1)) for _ in range(k)))

    @property
    def volume(self) -> Fraction:
        v = Fraction(1)
        for a, b in self.sides:
            v *= b - a
        return v

    def rescale(self, inner: Box) -> Box:
        """Image of ``inner`` (a box in the unit cube) under the affine map onto ``self``."""
        return Box(tuple(
            (a + (b - a) * c, a + (b - a) * d)
            for (a, b), (c, d) in zip(self.sides, inner.sides)
        ))

    def interiors_meet(self, other: Box) -> bool:
        return all(a < d and c < b for (a, b), (c, d) in zip(self.sides, other.sides))

    def __str__(self) -> str:
        return "x".join(
            f"[{a.numerator}/{a.denominator},{b.numerator}/{b.denominator}]" for a, b in self.sides
        )


def boxes_of(ct: CutTree) -> list[Box]:
    out: list[Box] = []

    def walk(t: CutTree, box: Box) -> None:
        if t.is_leaf:
            out.append(box)
            return
        a, b = box.sides[t.axis]
        step = (b - a) / len(t.parts)
        for i, part in enumerate(t.parts):
            sides = list(box.sides)
            sides[t.axis] = (a + i * step, a + (i + 1) * step)
            walk(part, Box(tuple(sides)))

    walk(ct, Box.unit(ct.k))
    return out


def operad_compose(outer: CutTree, slot: int, inner: CutTree) -> CutTree:
    """Graft ``inner`` into the input ``slot`` (0-based leaf index) of ``outer``."""
    if outer.cuts != inner.cuts:
        raise OperadError("operations live in different cube-cutting operads")
    if not 0 <= slot < outer.arity:
        raise OperadError(f"slot {slot} out of range for arity {outer.arity}")
    count = 0

    def walk(t: CutTree) -> CutTree:
        nonlocal count
        if t.is_leaf:
            count += 1
            return inner if count - 1 == slot else t
        return CutTree(t.cuts, t.axis, tuple(walk(p) for p in t.parts))

    return walk(outer)


def from_tree(t: Tree, n: int) -> CutTree:
    """The one-dimensional cut tree with the shape of an n-ary tree."""
    cuts = (frozenset({n}),)
    if not t:
        return CutTree(cuts)
    return CutTree(cuts, 0, tuple(from_tree(c, n) for c in t))


def to_tree(ct: CutTree) -> Tree:
    if ct.k != 1:
        raise OperadError("only one-dimensional cut trees are forest trees")
    if ct.is_leaf:
        return LEAF
    return tuple(to_tree(p) for p in ct.parts)
