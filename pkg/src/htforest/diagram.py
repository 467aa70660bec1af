"""Paired forest diagrams and the Higman-Thompson groups V(n, r).

A diagram ``(domain, perm, codomain)`` matches leaf ``i`` of the domain forest
with leaf ``perm[i]`` of the codomain forest (both 0-based).  Every public
operation returns the fully reduced representative, so literal equality of
returned diagrams is equality of group elements.

Multiplication is composition of maps: ``multiply(x, y)`` applies ``y`` first.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from . import forest as fc
from .errors import DiagramError
from .forest import LEAF, Forest, Tree, caret, tree_leaves

Perm = tuple[int, ...]


def _check_perm(perm: Sequence[int], size: int) -> None:
    if len(perm) != size:
        raise DiagramError(f"permutation of size {len(perm)} but forests have {size} leaves")
    if sorted(perm) != list(range(size)):
        raise DiagramError(f"{list(perm)} is not a permutation of {size} leaves")


def invert_perm(perm: Sequence[int]) -> Perm:
    inv = [0] * len(perm)
    for i, s in enumerate(perm):
        inv[s] = i
    return tuple(inv)


@dataclass(frozen=True)
class PairedDiagram:
    domain: Forest
    perm: Perm
    codomain: Forest

    def __post_init__(self) -> None:
        object.__setattr__(self, "perm", tuple(self.perm))
        d, c = self.domain, self.codomain
        if d.n != c.n or d.r != c.r:
            raise DiagramError(f"forests have shapes ({d.n},{d.r}) and ({c.n},{c.r})")
        if d.leaf_count != c.leaf_count:
            raise DiagramError(f"leaf counts differ: {d.leaf_count} vs {c.leaf_count}")
        _check_perm(self.perm, d.leaf_count)

    @property
    def n(self) -> int:
        return self.domain.n

    @property
    def r(self) -> int:
        return self.domain.r

    @property
    def leaf_count(self) -> int:
        return len(self.perm)

    def __str__(self) -> str:
        perm = ",".join(str(s + 1) for s in self.perm)
        return f"{self.domain};[{perm}];{self.codomain}"

    def __mul__(self, other: PairedDiagram) -> PairedDiagram:
        return multiply(self, other)

    def __invert__(self) -> PairedDiagram:
        return invert(self)


def identity(n: int, r: int) -> PairedDiagram:
    return PairedDiagram(Forest.trivial(n, r), tuple(range(r)), Forest.trivial(n, r))


def _blow_up(perm: Perm, dom_sizes: Sequence[int], cod_sizes: Sequence[int]) -> Perm:
    offsets = [0]
    for s in cod_sizes:
        offsets.append(offsets[-1] + s)
    out: list[int] = []
    for i, s in enumerate(perm):
        out.extend(range(offsets[s], offsets[s] + dom_sizes[i]))
    return tuple(out)


def expand_codomain(d: PairedDiagram, trees: Sequence[Tree]) -> PairedDiagram:
    """Graft ``trees[k]`` below codomain leaf k and the same tree below its partner."""
    dom_trees = [trees[s] for s in d.perm]
    sizes = [tree_leaves(t) for t in trees]
    perm = _blow_up(d.perm, [sizes[s] for s in d.perm], sizes)
    return PairedDiagram(fc.graft_all(d.domain, dom_trees), perm, fc.graft_all(d.codomain, trees))


def expand_domain(d: PairedDiagram, trees: Sequence[Tree]) -> PairedDiagram:
    """Graft ``trees[i]`` below domain leaf i and the same tree below its partner."""
    cod_trees = [LEAF] * d.leaf_count
    for i, s in enumerate(d.perm):
        cod_trees[s] = trees[i]
    return expand_codomain(d, cod_trees)


def expand(d: PairedDiagram, i: int, t: Tree) -> PairedDiagram:
    """Single expansion at matched pair ``i`` (indexed by the domain leaf)."""
    if not 0 <= i < d.leaf_count:
        raise DiagramError(f"pair index {i} out of range for {d.leaf_count} leaves")
    fc._check_tree(t, d.n)
    trees = [LEAF] * d.leaf_count
    trees[i] = t
    return expand_domain(d, trees)


def _reducible_pair(dom: Forest, perm: Sequence[int], cod: Forest) -> int | None:
    n = dom.n
    targets = set(cod.elementary_carets)
    for i in dom.elementary_carets:
        s = perm[i]
        if s in targets and all(perm[i + j] == s + j for j in range(1, n)):
            return i
    return None


def reduce(d: PairedDiagram) -> PairedDiagram:
    dom, perm, cod = d.domain, list(d.perm), d.codomain
    shrink = d.n - 1
    while (i := _reducible_pair(dom, perm, cod)) is not None:
        s = perm[i]
        dom, cod = fc.collapse(dom, i), fc.collapse(cod, s)
        del perm[i + 1 : i + d.n]
        perm = [t - shrink if t > s else t for t in perm]
    if dom is d.domain:
        return d
    return PairedDiagram(dom, tuple(perm), cod)


def is_reduced(d: PairedDiagram) -> bool:
    return _reducible_pair(d.domain, d.perm, d.codomain) is None


def _check_compatible(x: PairedDiagram, y: PairedDiagram) -> None:
    if (x.n, x.r) != (y.n, y.r):
        raise DiagramError(f"elements of V({x.n},{x.r}) and V({y.n},{y.r}) do not compose")


def multiply(x: PairedDiagram, y: PairedDiagram) -> PairedDiagram:
    """The composite map "y, then x"."""
    _check_compatible(x, y)
    middle = fc.join(y.codomain, x.domain)
    y2 = expand_codomain(y, fc.residual(y.codomain, middle))
    x2 = expand_domain(x, fc.residual(x.domain, middle))
    perm = tuple(x2.perm[s] for s in y2.perm)
    return reduce(PairedDiagram(y2.domain, perm, x2.codomain))


def invert(x: PairedDiagram) -> PairedDiagram:
    return reduce(PairedDiagram(x.codomain, invert_perm(x.perm), x.domain))


def equal(x: PairedDiagram, y: PairedDiagram) -> bool:
    _check_compatible(x, y)
    return reduce(x) == reduce(y)


def is_in_F(x: PairedDiagram) -> bool:
    d = reduce(x)
    return d.perm == tuple(range(d.leaf_count))


def is_in_T(x: PairedDiagram) -> bool:
    d = reduce(x)
    size = d.leaf_count
    shift = d.perm[0]
    return all(s == (i + shift) % size for i, s in enumerate(d.perm))


def stabilize(x: PairedDiagram) -> PairedDiagram:
    """Image in V(n, r+1): an extra root, fixed by the element."""
    dom = Forest(x.n, x.domain.trees + (LEAF,))
    cod = Forest(x.n, x.codomain.trees + (LEAF,))
    return PairedDiagram(dom, x.perm + (x.leaf_count,), cod)


def periodicity_iso(x: PairedDiagram) -> PairedDiagram:
    """Isomorphism V(n, r) -> V(n, r+n-1) splitting the last root open."""
    n, r = x.n, x.r
    split = Forest(n, (LEAF,) * (r - 1) + (caret(n),))
    x = expand_domain(x, fc.residual(x.domain, fc.join(x.domain, split)))
    x = expand_codomain(x, fc.residual(x.codomain, fc.join(x.codomain, split)))

    def open_last(f: Forest) -> Forest:
        return Forest(n, f.trees[:-1] + f.trees[-1])

    return reduce(PairedDiagram(open_last(x.domain), x.perm, open_last(x.codomain)))


def periodicity_inverse(y: PairedDiagram) -> PairedDiagram:
    """Inverse of :func:`periodicity_iso`: the last n roots are joined under one caret."""
    n, r = y.n, y.r
    if r < n:
        raise DiagramError(f"V({n},{r}) is not the target of the periodicity isomorphism")

    def close_last(f: Forest) -> Forest:
        return Forest(n, f.trees[: r - n] + (f.trees[r - n :],))

    return reduce(PairedDiagram(close_last(y.domain), y.perm, close_last(y.codomain)))


def random_element(n: int, r: int, c: int, seed: int | str) -> PairedDiagram:
    """Reduced element built from two uniform c-caret forests and a uniform matching."""
    return random_element_from(n, r, c, random.Random(seed))


def random_element_from(n: int, r: int, c: int, rng: random.Random) -> PairedDiagram:
    if c < 0:
        raise DiagramError("caret budget must be non-negative")
    dom = fc.random_forest(n, r, c, rng)
    cod = fc.random_forest(n, r, c, rng)
    perm = list(range(dom.leaf_count))
    rng.shuffle(perm)
    return reduce(PairedDiagram(dom, tuple(perm), cod))
