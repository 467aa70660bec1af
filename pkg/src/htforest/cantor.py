"""Prefix-substitution semantics on r copies of the n-ary Cantor set.

This module is an independent model of the group: elements become finite
tables of cylinder substitutions ``u.w -> v.w`` and exact piecewise-linear
maps of r unit intervals.  Composition and equality here never touch the
diagram reduction or product code, which lets them act as a check on it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .diagram import PairedDiagram
from .errors import InsufficientDepth, PrefixMapError
from .forest import LEAF, Forest, LeafAddress, Tree

Rule = tuple[LeafAddress, LeafAddress]


def _cover_tree(words: list[tuple[int, ...]], n: int, depth: int = 0) -> Tree:
    if len(words) == 1 and len(words[0]) == depth:
        return LEAF
    if not words or any(len(w) == depth for w in words):
        raise PrefixMapError("address set is not prefix-free")
    groups: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for w in words:
        if not 0 <= w[depth] < n:
            raise PrefixMapError(f"digit {w[depth]} outside 0..{n - 1}")
        groups[w[depth]].append(w)
    if any(not g for g in groups):
        raise PrefixMapError("address set does not cover the Cantor set")
    return tuple(_cover_tree(g, n, depth + 1) for g in groups)


def cover_forest(addresses: Iterable[LeafAddress], n: int, r: int) -> Forest:
    """The forest whose leaves are exactly ``addresses``; raises unless they form a cover."""
    per_root: list[list[tuple[int, ...]]] = [[] for _ in range(r)]
    for a in addresses:
        if not 0 <= a.root < r:
            raise PrefixMapError(f"root {a.root} out of range for {r} roots")
        per_root[a.root].append(tuple(a.word))
    trees = []
    for words in per_root:
        if not words:
            raise PrefixMapError("address set misses a root")
        if len(set(words)) != len(words):
            raise PrefixMapError("address set has repeated words")
        trees.append(_cover_tree(words, n))
    return Forest(n, tuple(trees))


@dataclass(frozen=True)
class PrefixMap:
    n: int
    r: int
    rules: tuple[Rule, ...]

    def __post_init__(self) -> None:
        rules = tuple(sorted((LeafAddress(*u), LeafAddress(*v)) for u, v in self.rules))
        object.__setattr__(self, "rules", rules)
        cover_forest((u for u, _ in rules), self.n, self.r)
        cover_forest((v for _, v in rules), self.n, self.r)

    def depth(self) -> int:
        return max(max(len(u.word), len(v.word)) for u, v in self.rules)

    def __str__(self) -> str:
        return " ".join(f"{u}->{v}" for u, v in self.rules)


def identity_map(n: int, r: int) -> PrefixMap:
    return PrefixMap(n, r, tuple((LeafAddress(j, ()), LeafAddress(j, ())) for j in range(r)))


def to_prefix_map(d: PairedDiagram) -> PrefixMap:
    dom = d.domain.leaf_addresses
    cod = d.codomain.leaf_addresses
    return PrefixMap(d.n, d.r, tuple((dom[i], cod[s]) for i, s in enumerate(d.perm)))


def _check_same(a: PrefixMap, b: PrefixMap) -> None:
    if (a.n, a.r) != (b.n, b.r):
        raise PrefixMapError(f"maps on ({a.n},{a.r}) and ({b.n},{b.r}) are incompatible")


def compose(a: PrefixMap, b: PrefixMap) -> PrefixMap:
    """The map "b, then a"."""
    _check_same(a, b)
    table = dict(a.rules)
    out: list[Rule] = []
    for u, v in b.rules:
        for k in range(len(v.word), -1, -1):
            hit = table.get(LeafAddress(v.root, v.word[:k]))
            if hit is not None:
                out.append((u, LeafAddress(hit.root, hit.word + v.word[k:])))
                break
        else:
            # v is cut finer by a's domain cover
            k = len(v.word)
            for ad, av in a.rules:
                if ad.root == v.root and ad.word[:k] == v.word:
                    out.append((LeafAddress(u.root, u.word + ad.word[k:]), av))
    return PrefixMap(a.n, a.r, tuple(out))


def inverse_map(a: PrefixMap) -> PrefixMap:
    return PrefixMap(a.n, a.r, tuple((v, u) for u, v in a.rules))


def canonical(a: PrefixMap) -> PrefixMap:
    """Merge n sibling rules ``w.k -> z.k`` into ``w -> z`` until none remain."""
    n = a.n
    table = dict(a.rules)
    changed = True
    while changed:
        changed = False
        parents: dict[LeafAddress, int] = {}
        for u in table:
            if u.word:
                key = LeafAddress(u.root, u.word[:-1])
                parents[key] = parents.get(key, 0) + 1
        for p, count in parents.items():
            if count != n:
                continue
            kids = [LeafAddress(p.root, p.word + (k,)) for k in range(n)]
            if not all(k in table for k in kids):
                continue
            images = [table[k] for k in kids]
            z = images[0]
            if not z.word:
                continue
            head = LeafAddress(z.root, z.word[:-1])
            if all(im == LeafAddress(head.root, head.word + (k,)) for k, im in enumerate(images)):
                for k in kids:
                    del table[k]
                table[p] = head
                changed = True
    return PrefixMap(a.n, a.r, tuple(table.items()))


def pm_equal(a: PrefixMap, b: PrefixMap) -> bool:
    _check_same(a, b)
    return canonical(a).rules == canonical(b).rules


def from_prefix_map(pm: PrefixMap) -> PairedDiagram:
    from .diagram import reduce

    dom = cover_forest((u for u, _ in pm.rules), pm.n, pm.r)
    cod = cover_forest((v for _, v in pm.rules), pm.n, pm.r)
    position = {a: k for k, a in enumerate(cod.leaf_addresses)}
    image = dict(pm.rules)
    perm = tuple(position[image[u]] for u in dom.leaf_addresses)
    return reduce(PairedDiagram(dom, perm, cod))


def apply_word(pm: PrefixMap, a: LeafAddress) -> LeafAddress:
    if not 0 <= a.root < pm.r:
        raise PrefixMapError(f"component {a.root} out of range for {pm.r} roots")
    word = tuple(a.word)
    for u, v in pm.rules:
        if u.root == a.root and word[: len(u.word)] == u.word:
            return LeafAddress(v.root, v.word + word[len(u.word) :])
    raise InsufficientDepth(f"word {''.join(map(str, word))!r} is shorter than the rules need")


def words_of_length(n: int, r: int, length: int) -> list[LeafAddress]:
    from itertools import product

    return [LeafAddress(j, w) for j in range(r) for w in product(range(n), repeat=length)]


# -- piecewise-linear picture ------------------------------------------------


@dataclass(frozen=True)
class NAdic:
    """The point p / n**e of component ``component`` (0-based)."""

    n: int
    component: int
    p: int
    e: int

    def __post_init__(self) -> None:
        if self.e < 0 or not 0 <= self.p <= self.n**self.e:
            raise PrefixMapError(f"{self.p}/{self.n}^{self.e} is not in [0, 1]")
        if self.e > 0 and self.p % self.n == 0:
            raise PrefixMapError(f"{self.p}/{self.n}^{self.e} is not normalized")

    @classmethod
    def of(cls, n: int, component: int, value: Fraction) -> NAdic:
        value = Fraction(value)
        e, den = 0, 1
        while den < value.denominator:
            den *= n
            e += 1
        if den % value.denominator:
            raise PrefixMapError(f"{value} is not {n}-adic")
        p = value.numerator * (den // value.denominator)
        while e > 0 and p % n == 0:
            p //= n
            e -= 1
        return cls(n, component, p, e)

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.n**self.e)

    def __str__(self) -> str:
        return f"{self.p}/{self.n}^{self.e}"


def cylinder(word: tuple[int, ...], n: int) -> tuple[Fraction, Fraction]:
    """Left end and width of the interval of numbers with n-ary expansion starting ``word``."""
    left = Fraction(0)
    width = Fraction(1)
    for digit in word:
        width /= n
        left += digit * width
    return left, width


@dataclass(frozen=True)
class Piece:
    component: int
    left: Fraction
    width: Fraction
    target: int
    target_left: Fraction
    target_width: Fraction

    @property
    def slope(self) -> Fraction:
        return self.target_width / self.width


def pl_pieces(d: PairedDiagram) -> list[Piece]:
    dom = d.domain.leaf_addresses
    cod = d.codomain.leaf_addresses
    pieces = []
    for i, s in enumerate(d.perm):
        a, b = dom[i], cod[s]
        pieces.append(Piece(a.root, *cylinder(a.word, d.n), b.root, *cylinder(b.word, d.n)))
    return pieces


def eval_pl(d: PairedDiagram, x: NAdic) -> NAdic:
    """Exact image of ``x``; pieces are left-closed, the point 1 uses the last piece."""
    if x.n != d.n:
        raise PrefixMapError(f"{x} is not a {d.n}-adic point")
    if not 0 <= x.component < d.r:
        raise PrefixMapError(f"component {x.component} out of range for {d.r} roots")
    v = x.value
    pieces = [p for p in pl_pieces(d) if p.component == x.component]
    for k, p in enumerate(pieces):
        if p.left <= v < p.left + p.width or (v == 1 and k == len(pieces) - 1):
            y = p.target_left + (v - p.left) * p.slope
            return NAdic.of(d.n, p.target, y)
    raise AssertionError("pieces do not cover the interval")
