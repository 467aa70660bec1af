"""Exact combinatorics of the Higman-Thompson groups V(n, r).

Elements are paired forest diagrams (:mod:`htforest.diagram`), checked against
an independent prefix-map model (:mod:`htforest.cantor`); the cube-cutting
operads, their PROP and groupoid fractions live in :mod:`htforest.cubes` and
:mod:`htforest.prop`.
"""
from .cantor import (
    NAdic,
    PrefixMap,
    apply_word,
    compose,
    eval_pl,
    from_prefix_map,
    pm_equal,
    to_prefix_map,
)
from .cubes import Box, CutTree, boxes_of, independence_check, operad_compose
from .diagram import (
    PairedDiagram,
    equal,
    expand,
    identity,
    invert,
    is_in_F,
    is_in_T,
    multiply,
    periodicity_inverse,
    periodicity_iso,
    random_element,
    reduce,
    stabilize,
)
from .errors import HTError, ParseError
from .forest import (
    LEAF,
    Forest,
    LeafAddress,
    caret,
    count_trees,
    enumerate_forests,
    graft,
    join,
    leaf_count,
    refines,
    residual,
)
from .prop import (
    PropFraction,
    PropMorphism,
    check_cancellative,
    diagram_to_fraction,
    fraction_multiply,
    fraction_to_diagram,
    prop_compose,
    square_fill,
)
from .text import parse_diagram, parse_forest
from .dot import render_dot

__version__ = "0.1.0"
