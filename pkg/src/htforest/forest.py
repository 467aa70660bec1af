"""Ordered n-ary rooted forests.

A tree is a plain tuple: ``()`` is a leaf and an internal vertex (a caret) is
the tuple of its ``n`` children.  Tuples give immutability, hashing and
structural equality for free.  A :class:`Forest` pairs an arity with a tuple
of trees.

Leaves are numbered from 0, left to right, depth first, root after root.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterator, NamedTuple, Sequence

from .errors import ForestError

Tree = tuple
LEAF: Tree = ()


def caret(n: int) -> Tree:
    return (LEAF,) * n


def tree_leaves(t: Tree) -> int:
    if not t:
        return 1
    return sum(tree_leaves(c) for c in t)


def tree_carets(t: Tree) -> int:
    if not t:
        return 0
    return 1 + sum(tree_carets(c) for c in t)


def format_tree(t: Tree) -> str:
    if not t:
        return "*"
    return "(" + ",".join(format_tree(c) for c in t) + ")"


def _check_tree(t: Tree, n: int) -> None:
    stack = [t]
    while stack:
        node = stack.pop()
        if not isinstance(node, tuple):
            raise ForestError(f"not a tree: {node!r}")
        if node and len(node) != n:
            raise ForestError(f"caret with {len(node)} children in a {n}-ary forest")
        stack.extend(node)


class LeafAddress(NamedTuple):
    """Root index (0-based) and digit word of a leaf or cylinder."""

    root: int
    word: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.root + 1}:" + "".join(map(str, self.word))


@dataclass(frozen=True)
class Forest:
    n: int
    trees: tuple[Tree, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ForestError(f"arity must be at least 2, got {self.n}")
        object.__setattr__(self, "trees", tuple(self.trees))
        if not self.trees:
            raise ForestError("a forest needs at least one root")
        for t in self.trees:
            _check_tree(t, self.n)

    @classmethod
    def trivial(cls, n: int, r: int) -> Forest:
        return cls(n, (LEAF,) * r)

    @property
    def r(self) -> int:
        return len(self.trees)

    @cached_property
    def leaf_count(self) -> int:
        return sum(tree_leaves(t) for t in self.trees)

    @cached_property
    def caret_count(self) -> int:
        return sum(tree_carets(t) for t in self.trees)

    @cached_property
    def leaf_addresses(self) -> tuple[LeafAddress, ...]:
        out = []

        def walk(t, root, word):
            if not t:
                out.append(LeafAddress(root, word))
            else:
                for digit, child in enumerate(t):
                    walk(child, root, word + (digit,))

        for root, t in enumerate(self.trees):
            walk(t, root, ())
        return tuple(out)

    @cached_property
    def elementary_carets(self) -> tuple[int, ...]:
        """Index of the first leaf of every caret whose children are all leaves."""
        out = []
        count = 0

        def walk(t):
            nonlocal count
            if not t:
                count += 1
            elif not any(t):
                out.append(count)
                count += len(t)
            else:
                for child in t:
                    walk(child)

        for t in self.trees:
            walk(t)
        return tuple(out)

    def __str__(self) -> str:
        return ",".join(format_tree(t) for t in self.trees)


def leaf_count(f: Forest) -> int:
    return f.leaf_count


def _same_shape(f: Forest, g: Forest) -> None:
    if f.n != g.n or f.r != g.r:
        raise ForestError(f"({f.n},{f.r})-forest and ({g.n},{g.r})-forest are incompatible")


def graft_all(f: Forest, trees: Sequence[Tree]) -> Forest:
    """Replace leaf i of ``f`` by ``trees[i]`` for every leaf at once."""
    if len(trees) != f.leaf_count:
        raise ForestError(f"need {f.leaf_count} trees to graft, got {len(trees)}")
    it = iter(trees)

    def walk(t):
        if not t:
            return next(it)
        return tuple(walk(c) for c in t)

    return Forest(f.n, tuple(walk(t) for t in f.trees))


def graft(f: Forest, i: int, t: Tree) -> Forest:
    if not 0 <= i < f.leaf_count:
        raise ForestError(f"leaf index {i} out of range for {f.leaf_count} leaves")
    _check_tree(t, f.n)
    trees = [LEAF] * f.leaf_count
    trees[i] = t
    return graft_all(f, trees)


def collapse(f: Forest, i: int) -> Forest:
    """Remove the elementary caret whose first leaf is leaf ``i``."""
    if i not in f.elementary_carets:
        raise ForestError(f"no elementary caret starts at leaf {i}")
    count = 0

    def walk(t):
        nonlocal count
        if not t:
            count += 1
            return t
        if count == i and not any(t):
            count += len(t)
            return LEAF
        return tuple(walk(c) for c in t)

    return Forest(f.n, tuple(walk(t) for t in f.trees))


def _join_tree(a: Tree, b: Tree) -> Tree:
    if not a:
        return b
    if not b:
        return a
    return tuple(_join_tree(x, y) for x, y in zip(a, b))


def join(f: Forest, g: Forest) -> Forest:
    """Least common refinement: the union of the carets of both forests."""
    _same_shape(f, g)
    return Forest(f.n, tuple(_join_tree(a, b) for a, b in zip(f.trees, g.trees)))


def _refines_tree(a: Tree, b: Tree) -> bool:
    if not b:
        return True
    if not a:
        return False
    return all(_refines_tree(x, y) for x, y in zip(a, b))


def refines(f: Forest, g: Forest) -> bool:
    """True iff every caret of ``g`` is a caret of ``f``."""
    if f.n != g.n or f.r != g.r:
        return False
    return all(_refines_tree(a, b) for a, b in zip(f.trees, g.trees))


def residual(f: Forest, j: Forest) -> tuple[Tree, ...]:
    """Subtrees of ``j`` hanging below each leaf of ``f``; inverse of :func:`graft_all`."""
    if not refines(j, f):
        raise ForestError(f"{j} does not refine {f}")
    out: list[Tree] = []

    def walk(a, b):
        if not a:
            out.append(b)
        else:
            for x, y in zip(a, b):
                walk(x, y)

    for a, b in zip(f.trees, j.trees):
        walk(a, b)
    return tuple(out)


# -- counting and enumeration ------------------------------------------------


@lru_cache(maxsize=None)
def _count_table(n: int, rows: int, cols: int) -> tuple[tuple[int, ...], ...]:
    """``table[r][c]``: number of (n, r)-forests with c carets, for r < rows, c < cols."""
    table = [[0] * cols for _ in range(rows)]
    table[0][0] = 1
    for c in range(cols):
        # a tree with c carets is a caret over an n-forest with c - 1 carets
        if rows > 1:
            table[1][c] = 1 if c == 0 else table[n][c - 1]
        for r in range(2, rows):
            table[r][c] = sum(table[1][k] * table[r - 1][c - k] for k in range(c + 1))
    return tuple(map(tuple, table))


def count_forests_by_carets(n: int, r: int, c: int) -> int:
    """Number of (n, r)-forests with exactly ``c`` carets."""
    if c < 0:
        return 0
    rows = 1 << max(n, r).bit_length()
    cols = 1 << (c + 1).bit_length()
    return _count_table(n, rows + 1, cols)[r][c]


def count_trees(n: int, m: int) -> int:
    """Number of n-ary trees with ``m`` leaves (zero unless m = 1 mod n-1)."""
    if n < 2 or m < 1:
        raise ForestError("count_trees needs n >= 2 and m >= 1")
    c, rem = divmod(m - 1, n - 1)
    if rem:
        return 0
    return count_forests_by_carets(n, 1, c)


@lru_cache(maxsize=None)
def _forests(n: int, r: int, c: int) -> tuple[tuple[Tree, ...], ...]:
    if r == 0:
        return ((),) if c == 0 else ()
    if r == 1:
        if c == 0:
            return ((LEAF,),)
        return tuple((kids,) for kids in _forests(n, n, c - 1))
    out = []
    for k in range(c + 1):
        for (head,), tail in product(_forests(n, 1, k), _forests(n, r - 1, c - k)):
            out.append((head,) + tail)
    return tuple(out)


def enumerate_trees(n: int, c: int) -> list[Tree]:
    return sorted((f[0] for f in _forests(n, 1, c)), key=format_tree)


def enumerate_forests(n: int, r: int, c: int) -> list[Forest]:
    """All (n, r)-forests with ``c`` carets, sorted by their printed form."""
    if n < 2 or r < 1 or c < 0:
        raise ForestError("enumerate_forests needs n >= 2, r >= 1, c >= 0")
    forests = [Forest(n, trees) for trees in _forests(n, r, c)]
    forests.sort(key=str)
    return forests


def iter_forests_up_to(n: int, r: int, max_carets: int) -> Iterator[Forest]:
    for c in range(max_carets + 1):
        yield from enumerate_forests(n, r, c)


def _random_trees(n: int, r: int, c: int, rng: random.Random) -> tuple[Tree, ...]:
    trees = []
    for k in range(r, 0, -1):
        if k == 1:
            here = c
        else:
            x = rng.randrange(count_forests_by_carets(n, k, c))
            for here in range(c + 1):
                w = count_forests_by_carets(n, 1, here) * count_forests_by_carets(n, k - 1, c - here)
                if x < w:
                    break
                x -= w
        trees.append(LEAF if here == 0 else _random_trees(n, n, here - 1, rng))
        c -= here
    return tuple(trees)


def random_forest(n: int, r: int, c: int, rng: random.Random) -> Forest:
    """Uniformly random (n, r)-forest with exactly ``c`` carets."""
    return Forest(n, _random_trees(n, r, c, rng))
