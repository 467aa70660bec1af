"""Text forms of forests, diagrams, PROP morphisms, words and cut trees.

Grammar (whitespace is ignored everywhere)::

    forest  := tree { "," tree }
    tree    := "*" | "(" tree { "," tree } ")"
    perm    := "[" int { "," int } "]"          1-based one-line notation
    diagram := forest ";" perm ";" forest
    morphism:= perm ";" forest                  input i feeds leaf perm[i]
    cuttree := "*" | "(" axis "," count ":" cuttree { "," cuttree } ")"

The arity is taken from the first caret seen and enforced on the rest.  The
printers emit the single whitespace-free canonical form.
"""
from __future__ import annotations

from fractions import Fraction

from .cantor import NAdic
from .cubes import CutTree
from .diagram import PairedDiagram
from .errors import HTError, ParseError
from .forest import LEAF, Forest, LeafAddress, Tree
from .prop import PropMorphism

DEFAULT_ARITY = 2


class _Reader:
    def __init__(self, text: str, fallback_arity: int | None = None):
        self.data = text.encode("utf-8")
        self.pos = 0
        self.arity: int | None = None
        self.fallback_arity = fallback_arity

    def skip(self) -> None:
        while self.pos < len(self.data) and self.data[self.pos] in b" \t\r\n":
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        if self.pos >= len(self.data):
            return ""
        return chr(self.data[self.pos])

    def expect(self, ch: str) -> None:
        got = self.peek()
        if got != ch:
            raise ParseError(f"expected {ch!r}, found {got or 'end of input'!r}", self.pos)
        self.pos += 1

    def end(self) -> None:
        if self.peek():
            raise ParseError(f"unexpected {self.peek()!r}", self.pos)

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.data) and chr(self.data[self.pos]).isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected an integer", start)
        return int(self.data[start : self.pos])

    def tree(self) -> Tree:
        start = self.pos
        ch = self.peek()
        if ch == "*":
            self.pos += 1
            return LEAF
        if ch != "(":
            raise ParseError(f"expected '*' or '(', found {ch or 'end of input'!r}", self.pos)
        self.pos += 1
        kids = [self.tree()]
        while self.peek() == ",":
            self.pos += 1
            kids.append(self.tree())
        self.expect(")")
        if self.arity is None:
            if self.fallback_arity is not None and len(kids) != self.fallback_arity:
                raise ParseError(
                    f"caret with {len(kids)} children contradicts arity {self.fallback_arity}", start
                )
            self.arity = len(kids)
        elif len(kids) != self.arity:
            raise ParseError(f"caret with {len(kids)} children, arity is {self.arity}", start)
        return tuple(kids)

    def forest(self) -> list[Tree]:
        trees = [self.tree()]
        while self.peek() == ",":
            self.pos += 1
            trees.append(self.tree())
        return trees

    def perm(self) -> tuple[int, ...]:
        self.expect("[")
        start = self.pos
        values = [self.integer()]
        while self.peek() == ",":
            self.pos += 1
            values.append(self.integer())
        self.expect("]")
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ParseError(f"{values} is not a permutation of 1..{len(values)}", start)
        return tuple(v - 1 for v in values)


def _arity(reader: _Reader) -> int:
    if reader.arity is not None:
        return reader.arity
    if reader.fallback_arity is not None:
        return reader.fallback_arity
    return DEFAULT_ARITY


def _wrap(build, reader: _Reader):
    try:
        return build()
    except ParseError:
        raise
    except HTError as exc:
        raise ParseError(str(exc), reader.pos) from None


def parse_forest(text: str, arity: int | None = None) -> Forest:
    reader = _Reader(text, arity)
    trees = reader.forest()
    reader.end()
    return _wrap(lambda: Forest(_arity(reader), tuple(trees)), reader)


def parse_diagram(text: str, arity: int | None = None) -> PairedDiagram:
    """Parse ``forest;perm;forest``.  ``arity`` is only consulted when no caret fixes it."""
    reader = _Reader(text, arity)
    dom = reader.forest()
    reader.expect(";")
    perm = reader.perm()
    reader.expect(";")
    cod = reader.forest()
    reader.end()
    n = _arity(reader)
    return _wrap(lambda: PairedDiagram(Forest(n, tuple(dom)), perm, Forest(n, tuple(cod))), reader)


def parse_morphism(text: str, arity: int | None = None) -> PropMorphism:
    reader = _Reader(text, arity)
    perm = reader.perm()
    reader.expect(";")
    trees = reader.forest()
    reader.end()
    n = _arity(reader)
    return _wrap(lambda: PropMorphism(perm, Forest(n, tuple(trees))), reader)


def format_forest(f: Forest) -> str:
    return str(f)


def format_perm(perm) -> str:
    return "[" + ",".join(str(s + 1) for s in perm) + "]"


def format_diagram(d: PairedDiagram) -> str:
    return str(d)


def format_morphism(m: PropMorphism) -> str:
    return str(m)


def parse_word(text: str, n: int, root: int = 0) -> LeafAddress:
    """Digits ``0..n-1``, optionally separated by spaces (any base up to 10 uses one char per digit)."""
    digits = []
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        if not ch.isdigit() or int(ch) >= n:
            raise ParseError(f"{ch!r} is not a digit below {n}", pos)
        digits.append(int(ch))
    return LeafAddress(root, tuple(digits))


def format_word(a: LeafAddress) -> str:
    return " ".join(map(str, a.word))


def parse_nadic(text: str, n: int, component: int = 0) -> NAdic:
    """``p/n^e`` (or a bare integer ``p``)."""
    reader = _Reader(text)
    p = reader.integer()
    e = 0
    if reader.peek() == "/":
        reader.pos += 1
        base_at = reader.pos
        base = reader.integer()
        if base != n:
            raise ParseError(f"base {base} does not match arity {n}", base_at)
        reader.expect("^")
        e = reader.integer()
    reader.end()
    return _wrap(lambda: NAdic.of(n, component, Fraction(p, n**e)), reader)


def format_nadic(x: NAdic) -> str:
    return str(x)


def parse_cut_tree(text: str, cuts) -> CutTree:
    reader = _Reader(text)

    def node() -> CutTree:
        ch = reader.peek()
        if ch == "*":
            reader.pos += 1
            return CutTree(cuts)
        reader.expect("(")
        axis_at = reader.pos
        axis = reader.integer()
        reader.expect(",")
        count = reader.integer()
        reader.expect(":")
        parts = [node()]
        while reader.peek() == ",":
            reader.pos += 1
            parts.append(node())
        reader.expect(")")
        if len(parts) != count:
            raise ParseError(f"node announces {count} parts but has {len(parts)}", axis_at)
        return _wrap(lambda: CutTree(cuts, axis - 1, tuple(parts)), reader)

    out = node()
    reader.end()
    return out
