"""Seeded property suites, shared by ``htforest check`` and the test suite.

Each trial draws from its own ``random.Random`` seeded by (master seed, suite,
trial index), so a failing trial can be replayed alone.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import cantor as cm
from . import diagram as dg
from . import forest as fc
from . import prop as pp

SUITES = ("group-axioms", "oracle", "confluence", "cancellative", "fractions")
MAX_CARETS = 8


def trial_rng(seed: int, suite: str, trial: int) -> random.Random:
    return random.Random(f"{seed}/{suite}/{trial}")


@dataclass
class SuiteResult:
    name: str
    counts: dict[str, list[int]] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    def record(self, law: str, ok: bool, detail: Callable[[], str] | None = None) -> None:
        passed_total = self.counts.setdefault(law, [0, 0])
        passed_total[1] += 1
        if ok:
            passed_total[0] += 1
        elif detail is not None and len(self.failures) < 20:
            self.failures.append(f"{law}: {detail()}")

    @property
    def ok(self) -> bool:
        return all(p == t for p, t in self.counts.values())

    def lines(self) -> list[str]:
        out = [f"{law}: {p}/{t} passed" for law, (p, t) in self.counts.items()]
        out.extend(f"FAIL {f}" for f in self.failures)
        out.append(f"{self.name}: {'PASS' if self.ok else 'FAIL'}")
        return out


def random_diagram(n: int, r: int, rng: random.Random, max_carets: int = MAX_CARETS) -> dg.PairedDiagram:
    return dg.random_element_from(n, r, rng.randint(0, max_carets), rng)


def random_expansion(d: dg.PairedDiagram, rng: random.Random, steps: int | None = None) -> dg.PairedDiagram:
    """Apply a few random single expansions; the group element is unchanged."""
    if steps is None:
        steps = rng.randint(1, 4)
    for _ in range(steps):
        t = fc.random_forest(d.n, 1, rng.randint(1, 2), rng).trees[0]
        d = dg.expand(d, rng.randrange(d.leaf_count), t)
    return d


def group_axioms(n: int, r: int, trials: int, seed: int) -> SuiteResult:
    res = SuiteResult("group-axioms")
    e = dg.identity(n, r)
    for i in range(trials):
        rng = trial_rng(seed, res.name, i)
        a, b, c = (random_diagram(n, r, rng) for _ in range(3))
        show = lambda: f"a={a} b={b} c={c}"
        ab_c = dg.multiply(dg.multiply(a, b), c)
        a_bc = dg.multiply(a, dg.multiply(b, c))
        res.record("associativity", ab_c == a_bc, show)
        res.record("right identity", dg.multiply(a, e) == a, show)
        res.record("left identity", dg.multiply(e, a) == a, show)
        inv = dg.invert(a)
        res.record("right inverse", dg.multiply(a, inv) == e, show)
        res.record("left inverse", dg.multiply(inv, a) == e, show)
        res.record("canonical output", dg.is_reduced(ab_c) and dg.is_reduced(inv), show)
    return res


def oracle(n: int, r: int, trials: int, seed: int) -> SuiteResult:
    res = SuiteResult("oracle")
    for i in range(trials):
        rng = trial_rng(seed, res.name, i)
        x = random_diagram(n, r, rng)
        # half the pairs are equal elements in disguise, so both answers get exercised
        if i % 2:
            y = random_expansion(x, rng)
        else:
            y = random_diagram(n, r, rng)
        show = lambda: f"x={x} y={y}"
        px, py = cm.to_prefix_map(x), cm.to_prefix_map(y)
        res.record("equal agrees with pm_equal", dg.equal(x, y) == cm.pm_equal(px, py), show)
        res.record(
            "multiply matches compose",
            cm.pm_equal(cm.to_prefix_map(dg.multiply(x, y)), cm.compose(px, py)),
            show,
        )
        res.record("invert matches inverse map", cm.pm_equal(cm.to_prefix_map(dg.invert(x)), cm.inverse_map(px)), show)
        res.record("from_prefix_map round trip", cm.from_prefix_map(py) == dg.reduce(y), show)
    return res


def confluence(n: int, r: int, trials: int, seed: int, sequences: int = 20) -> SuiteResult:
    res = SuiteResult("confluence")
    for i in range(trials):
        rng = trial_rng(seed, res.name, i)
        d = random_diagram(n, r, rng)
        for _ in range(sequences):
            big = random_expansion(d, rng)
            res.record("expansions reduce back", dg.reduce(big) == d, lambda: f"d={d} expanded={big}")
    return res


def cancellative(n: int, r: int, trials: int, seed: int) -> SuiteResult:
    res = SuiteResult("cancellative")
    report = pp.check_cancellative(n, max_carets=2, max_source=4)
    res.counts["right cancellation"] = [report.right_checked - len(report.right_failures), report.right_checked]
    res.counts["left cancellation"] = [report.left_checked - len(report.left_failures), report.left_checked]
    found = len(report.right_failures)
    res.counts["equalization"] = [found - len(report.equalization_failures), found]
    for a, f, g in (report.right_failures + report.left_failures)[:20]:
        res.failures.append(f"cancellation: a={a} f={f} g={g}")
    for i in range(trials):
        rng = trial_rng(seed, res.name, i)
        f = pp.random_morphism(n, r, rng.randint(0, 4), rng)
        g = pp.random_morphism(n, r, rng.randint(0, 4), rng)
        u, v = pp.square_fill(f, g)
        res.record("square fill commutes", pp.prop_compose(f, u) == pp.prop_compose(g, v), lambda: f"f={f} g={g}")
    return res


def fractions(n: int, r: int, trials: int, seed: int) -> SuiteResult:
    res = SuiteResult("fractions")
    for i in range(trials):
        rng = trial_rng(seed, res.name, i)
        a, b = random_diagram(n, r, rng), random_diagram(n, r, rng)
        fa, fb = pp.diagram_to_fraction(a), pp.diagram_to_fraction(b)
        show = lambda: f"a={a} b={b}"
        res.record("round trip", pp.fraction_to_diagram(fa) == a, show)
        # fraction_multiply follows a then b, multiply(b, a) does the same
        res.record("homomorphism", pp.fraction_to_diagram(pp.fraction_multiply(fa, fb)) == dg.multiply(b, a), show)
        res.record(
            "inverse fraction",
            pp.fraction_to_diagram(pp.fraction_multiply(fa, pp.fraction_inverse(fa))) == dg.identity(n, r),
            show,
        )
    return res


RUNNERS = {
    "group-axioms": group_axioms,
    "oracle": oracle,
    "confluence": confluence,
    "cancellative": cancellative,
    "fractions": fractions,
}


def run_suite(name: str, n: int, r: int, trials: int, seed: int) -> SuiteResult:
    return RUNNERS[name](n, r, trials, seed)
