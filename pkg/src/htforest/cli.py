"""Command line entry point: ``htforest <command> ...``.

Exit status is 0 on success, 1 on malformed input or a domain error and 2
when a property suite finds a failure.  Results go to stdout, one per line.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import cantor as cm
from . import cubes
from . import diagram as dg
from . import forest as fc
from . import prop as pp
from . import suites
from .dot import render_dot
from .errors import HTError
from .text import parse_cut_tree, parse_diagram, parse_morphism, parse_nadic, parse_word

DEFAULT_SEED = 0


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _located(r: int, component: int, text: str) -> str:
    return text if r == 1 else f"{component + 1}:{text}"


def _element(args, text: str) -> dg.PairedDiagram:
    return parse_diagram(text, args.arity)


def cmd_reduce(args) -> int:
    print(dg.reduce(_element(args, args.element)))
    return 0


def cmd_mul(args) -> int:
    elems = [_element(args, e) for e in args.elements]
    out = elems[0]
    for e in elems[1:]:
        out = dg.multiply(out, e)
    print(dg.reduce(out))
    return 0


def cmd_inv(args) -> int:
    print(dg.invert(_element(args, args.element)))
    return 0


def cmd_eq(args) -> int:
    x, y = _element(args, args.x), _element(args, args.y)
    print("true" if dg.equal(x, y) else "false")
    return 0


def cmd_pm(args) -> int:
    pm = cm.canonical(cm.to_prefix_map(_element(args, args.element)))
    for u, v in pm.rules:
        print(f"{u} -> {v}")
    return 0


def cmd_act(args) -> int:
    d = _element(args, args.element)
    word = parse_word(args.word, d.n, args.component - 1)
    out = cm.apply_word(cm.to_prefix_map(d), word)
    print(_located(d.r, out.root, " ".join(map(str, out.word))))
    return 0


def cmd_eval(args) -> int:
    d = _element(args, args.element)
    x = parse_nadic(args.rational, d.n, args.component - 1)
    y = cm.eval_pl(d, x)
    print(_located(d.r, y.component, str(y)))
    return 0


def cmd_random(args) -> int:
    print(dg.random_element(args.arity or 2, args.roots, args.carets, args.seed))
    return 0


def cmd_count(args) -> int:
    print(fc.count_trees(args.arity or 2, args.leaves))
    return 0


def cmd_dot(args) -> int:
    sys.stdout.write(render_dot(_element(args, args.element)))
    return 0


def cmd_prop(args) -> int:
    a = parse_morphism(args.first, args.arity)
    b = parse_morphism(args.second, args.arity)
    if args.op == "compose":
        print(pp.prop_compose(a, b))
    else:
        u, v = pp.square_fill(a, b)
        print(u)
        print(v)
    return 0


def cmd_independent(args) -> int:
    print("true" if cubes.independence_check(args.numbers) else "false")
    return 0


def cmd_boxes(args) -> int:
    cuts = [frozenset(int(x) for x in part.split(",")) for part in args.cuts.split(";")]
    for box in cubes.boxes_of(parse_cut_tree(args.tree, cuts)):
        print(box)
    return 0


def cmd_check(args) -> int:
    result = suites.run_suite(args.suite, args.arity or 2, args.roots, args.trials, args.seed)
    for line in result.lines():
        print(line)
    return 0 if result.ok else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="htforest", description="Paired forest diagrams for Higman-Thompson groups.")
    parser.add_argument("--arity", type=int, help="arity when no caret in the input fixes it")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def element_cmd(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("element")
        p.set_defaults(func=func)
        return p

    element_cmd("reduce", cmd_reduce, "print the reduced diagram")
    element_cmd("inv", cmd_inv, "print the inverse")
    element_cmd("dot", cmd_dot, "render as a Graphviz DOT graph")
    element_cmd("pm", cmd_pm, "print the canonical prefix map")

    p = sub.add_parser("mul", help="product; 'mul x y' applies y first")
    p.add_argument("elements", nargs="+")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("eq", help="decide equality in the group")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_eq)

    p = element_cmd("act", cmd_act, "image of an address word")
    p.add_argument("--word", required=True)
    p.add_argument("--component", type=int, default=1)

    p = element_cmd("eval", cmd_eval, "image of an n-adic point p/n^e")
    p.add_argument("--rational", required=True)
    p.add_argument("--component", type=int, default=1)

    p = sub.add_parser("random", help="seeded random reduced element")
    p.add_argument("--roots", type=int, default=1)
    p.add_argument("--carets", type=int, default=3)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("count", help="number of n-ary trees with the given leaf count")
    p.add_argument("--leaves", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("prop", help="PROP morphisms written perm;forest")
    p.add_argument("op", choices=["compose", "square-fill"])
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_prop)

    p = sub.add_parser("independent", help="multiplicative independence of integers")
    p.add_argument("numbers", type=int, nargs="+")
    p.set_defaults(func=cmd_independent)

    p = sub.add_parser("boxes", help="tiling of a cut tree, e.g. --cuts '2;3'")
    p.add_argument("tree")
    p.add_argument("--cuts", required=True)
    p.set_defaults(func=cmd_boxes)

    p = sub.add_parser("check", help="run a seeded property suite")
    p.add_argument("--suite", choices=suites.SUITES, required=True)
    p.add_argument("--roots", type=int, default=1)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_check)

    for action in sub.choices.values():
        action.add_argument("--arity", type=int, default=argparse.SUPPRESS)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except HTError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except RecursionError:
        print("error: input nested too deeply", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
