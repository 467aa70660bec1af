from __future__ import annotations

from .diagram import PairedDiagram
from .forest import Forest


def _forest_nodes(f: Forest, prefix: str) -> tuple[list[str], list[tuple[str, str]], list[str]]:
    """Vertex names in preorder, parent->child edges, and leaf names in leaf order."""
    names: list[str] = []
    edges: list[tuple[str, str]] = []
    leaves: list[str] = []

    def walk(t, parent):
        name = f"{prefix}{len(names)}"
        names.append(name)
        if parent is not None:
            edges.append((parent, name))
        if not t:
            leaves.append(name)
        for child in t:
            walk(child, name)

    for t in f.trees:
        walk(t, None)
    return names, edges, leaves


def render_dot(d: PairedDiagram) -> str:
    """Domain forest hangs down, codomain forest stands up below it, dashed edges pair the leaves."""
    dom_names, dom_edges, dom_leaves = _forest_nodes(d.domain, "d")
    cod_names, cod_edges, cod_leaves = _forest_nodes(d.codomain, "c")
    lines = [
        "digraph diagram {",
        "  node [shape=point];",
        "  edge [arrowhead=none];",
    ]
    lines += [f"  {name};" for name in dom_names + cod_names]
    lines += [f"  {a} -> {b};" for a, b in dom_edges]
    # codomain edges point child -> parent so dot ranks codomain roots lowest
    lines += [f"  {b} -> {a};" for a, b in cod_edges]
    for i, s in enumerate(d.perm):
        lines.append(f'  {dom_leaves[i]} -> {cod_leaves[s]} [style=dashed, label="{i + 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
