"""The PROP of the one-dimensional cube-cutting operad and its fractions.

A morphism ``m -> r`` is a forest with r roots and m leaves together with a
bijection from the m inputs to the leaves: input i feeds leaf ``perm[i]``.
Composition ``g . f`` grafts the trees of f (one per root) into the leaves of
g that receive those roots.

A :class:`PropFraction` ``(p, q)`` with common source m stands for the
groupoid morphism ``q . p^-1``.  For endomorphisms of an object r these are
exactly the elements of V(n, r).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable

from . import forest as fc
from .diagram import PairedDiagram, invert_perm, reduce
from .errors import OperadError
from .forest import Forest, tree_leaves


@dataclass(frozen=True)
class PropMorphism:
    perm: tuple[int, ...]
    forest: Forest

    def __post_init__(self) -> None:
        object.__setattr__(self, "perm", tuple(self.perm))
        if sorted(self.perm) != list(range(self.forest.leaf_count)):
            raise OperadError(
                f"{list(self.perm)} does not biject inputs onto {self.forest.leaf_count} leaves"
            )

    @property
    def n(self) -> int:
        return self.forest.n

    @property
    def source(self) -> int:
        return len(self.perm)

    @property
    def target(self) -> int:
        return self.forest.r

    def __str__(self) -> str:
        return "[" + ",".join(str(s + 1) for s in self.perm) + "];" + str(self.forest)


def prop_identity(n: int, m: int) -> PropMorphism:
    return PropMorphism(tuple(range(m)), Forest.trivial(n, m))


def _graft_layout(g: PropMorphism, f: PropMorphism) -> tuple[Forest, list[int]]:
    """Forest of ``g . f`` and, for each leaf of f, its position in that forest."""
    slot_of_root = g.perm
    trees = [fc.LEAF] * g.forest.leaf_count
    for j, t in enumerate(f.forest.trees):
        trees[slot_of_root[j]] = t
    grafted = fc.graft_all(g.forest, trees)
    offsets = [0]
    for t in trees:
        offsets.append(offsets[-1] + tree_leaves(t))
    where = []
    for j, t in enumerate(f.forest.trees):
        start = offsets[slot_of_root[j]]
        where.extend(range(start, start + tree_leaves(t)))
    return grafted, where


def prop_compose(g: PropMorphism, f: PropMorphism) -> PropMorphism:
    """``g . f``: first f, then g."""
    if f.target != g.source or f.n != g.n:
        raise OperadError(f"cannot compose {f.source}->{f.target} with {g.source}->{g.target}")
    grafted, where = _graft_layout(g, f)
    return PropMorphism(tuple(where[s] for s in f.perm), grafted)


def square_fill(f: PropMorphism, g: PropMorphism) -> tuple[PropMorphism, PropMorphism]:
    """Legs ``u, v`` with ``f . u == g . v``, built on the join of the two forests."""
    if f.target != g.target or f.n != g.n:
        raise OperadError("square filling needs a common target")
    top = fc.join(f.forest, g.forest)
    rest_f = fc.residual(f.forest, top)
    rest_g = fc.residual(g.forest, top)
    u_forest = Forest(f.n, tuple(rest_f[s] for s in f.perm))
    v_forest = Forest(g.n, tuple(rest_g[s] for s in g.perm))
    u = PropMorphism(tuple(range(u_forest.leaf_count)), u_forest)
    target_perm = prop_compose(f, u).perm
    _, where = _graft_layout(g, PropMorphism(tuple(range(v_forest.leaf_count)), v_forest))
    back = invert_perm(where)
    v = PropMorphism(tuple(back[s] for s in target_perm), v_forest)
    return u, v


# -- cancellation at desk scale ------------------------------------------------


def all_morphisms(n: int, max_carets: int, max_source: int) -> list[PropMorphism]:
    """Every morphism with positive target, at most ``max_carets`` carets and source <= max_source."""
    out = []
    for r in range(1, max_source + 1):
        for f in fc.iter_forests_up_to(n, r, max_carets):
            if f.leaf_count > max_source:
                continue
            for perm in permutations(range(f.leaf_count)):
                out.append(PropMorphism(perm, f))
    return out


@dataclass
class CancellationReport:
    morphisms: int = 0
    left_checked: int = 0
    right_checked: int = 0
    left_failures: list = field(default_factory=list)
    right_failures: list = field(default_factory=list)
    equalization_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.left_failures or self.right_failures or self.equalization_failures)


def check_cancellative(
    n: int = 2,
    max_carets: int = 2,
    max_source: int = 4,
    compose: Callable[[PropMorphism, PropMorphism], PropMorphism] = prop_compose,
) -> CancellationReport:
    """Exhaustively test ``a.f == a.g => f == g`` and ``f.a == g.a => f == g``.

    Every pair found with ``a.f == a.g`` is also checked for equalization: some
    enumerated ``b`` with ``f.b == g.b`` must exist.
    """
    morphisms = all_morphisms(n, max_carets, max_source)
    by_source: dict[int, list[PropMorphism]] = {}
    by_target: dict[int, list[PropMorphism]] = {}
    for m in morphisms:
        by_source.setdefault(m.source, []).append(m)
        by_target.setdefault(m.target, []).append(m)
    report = CancellationReport(morphisms=len(morphisms))
    collisions = []
    for a in morphisms:
        seen: dict[PropMorphism, PropMorphism] = {}
        for f in by_target.get(a.source, []):
            report.right_checked += 1
            af = compose(a, f)
            g = seen.setdefault(af, f)
            if g != f:
                report.right_failures.append((a, f, g))
                collisions.append((f, g))
        seen = {}
        for f in by_source.get(a.target, []):
            report.left_checked += 1
            fa = compose(f, a)
            g = seen.setdefault(fa, f)
            if g != f:
                report.left_failures.append((a, f, g))
    for f, g in collisions:
        if not any(compose(f, b) == compose(g, b) for b in by_target.get(f.source, [])):
            report.equalization_failures.append((f, g))
    return report


def random_morphism(n: int, target: int, carets: int, rng: random.Random) -> PropMorphism:
    f = fc.random_forest(n, target, carets, rng)
    perm = list(range(f.leaf_count))
    rng.shuffle(perm)
    return PropMorphism(tuple(perm), f)


# -- fractions -----------------------------------------------------------------


@dataclass(frozen=True)
class PropFraction:
    """The span ``(p, q)``, read as the groupoid morphism ``q . p^-1``."""

    p: PropMorphism
    q: PropMorphism

    def __post_init__(self) -> None:
        if self.p.source != self.q.source or self.p.n != self.q.n:
            raise OperadError("numerator and denominator need a common source")

    @property
    def source(self) -> int:
        return self.p.target

    @property
    def target(self) -> int:
        return self.q.target

    def __str__(self) -> str:
        return f"{self.p} | {self.q}"


def fraction_identity(n: int, r: int) -> PropFraction:
    return PropFraction(prop_identity(n, r), prop_identity(n, r))


def fraction_inverse(x: PropFraction) -> PropFraction:
    return PropFraction(x.q, x.p)


def fraction_to_diagram(x: PropFraction) -> PairedDiagram:
    if x.source != x.target:
        raise OperadError(f"a fraction {x.source}->{x.target} is not a group element")
    perm = [0] * x.p.source
    for i in range(x.p.source):
        perm[x.p.perm[i]] = x.q.perm[i]
    return reduce(PairedDiagram(x.p.forest, tuple(perm), x.q.forest))


def diagram_to_fraction(d: PairedDiagram) -> PropFraction:
    return PropFraction(PropMorphism(tuple(range(d.leaf_count)), d.domain), PropMorphism(d.perm, d.codomain))


def fraction_multiply(x: PropFraction, y: PropFraction) -> PropFraction:
    """Groupoid composite of ``x: r -> s`` followed by ``y: s -> t``."""
    if x.target != y.source or x.p.n != y.p.n:
        raise OperadError(f"cannot follow {x.source}->{x.target} with {y.source}->{y.target}")
    u, v = square_fill(x.q, y.p)
    out = PropFraction(prop_compose(x.p, u), prop_compose(y.q, v))
    if out.source == out.target:
        out = diagram_to_fraction(fraction_to_diagram(out))
    return out


def fraction_equal(x: PropFraction, y: PropFraction) -> bool:
    return fraction_to_diagram(x) == fraction_to_diagram(y)

