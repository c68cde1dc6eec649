"""DOT and JSON output for heaps, crystals and reports."""
from __future__ import annotations

import json
from typing import Iterable

from .heap import EdgeColouring, Heap

__all__ = ["heap_dot", "crystal_dot", "dumps"]

_EDGE_COLOURS = {"R": "red", "B": "blue", "G": "green", "Y": "gold"}
_ARROW_COLOURS = ("red", "blue", "darkgreen", "orange", "purple", "brown", "cyan", "magenta")


def heap_dot(h: Heap, colouring: EdgeColouring | None = None, name: str = "heap") -> str:
    """Hasse diagram, one node per bead labelled by its runner, top beads drawn first."""
    lines = [f"digraph {name} {{", "  rankdir=TB;", "  node [shape=circle];"]
    for x in range(len(h)):
        lines.append(f'  b{x} [label="{h.runner[x]}", tooltip="{h.label(x)}"];')
    top = max(h.level, default=0)
    for k in range(top, 0, -1):
        same = " ".join(f"b{x};" for x in range(len(h)) if h.level[x] == k)
        lines.append(f"  {{ rank=same; {same} }}")
    for (y, x) in h.covers:
        attr = ""
        if colouring is not None:
            attr = f' [color={_EDGE_COLOURS[colouring[(y, x)]]}, label="{colouring[(y, x)]}"]'
        lines.append(f"  b{x} -> b{y}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def crystal_dot(crystal, elements: Iterable, label=repr, name: str = "crystal") -> str:
    """Crystal graph: an edge b -> f_i(b) coloured by i."""
    elements = list(elements)
    index = {b: k for k, b in enumerate(elements)}
    verts = crystal.diagram.vertices
    lines = [f"digraph {name} {{", "  node [shape=box, fontsize=10];"]
    for b, k in index.items():
        text = str(label(b)).replace('"', "'")
        lines.append(f'  c{k} [label="{text}"];')
    for b, k in index.items():
        for pos, i in enumerate(verts):
            y = crystal.f(b, i)
            if y is not None and y in index:
                col = _ARROW_COLOURS[pos % len(_ARROW_COLOURS)]
                lines.append(f'  c{k} -> c{index[y]} [label="{i}", color={col}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, default=str) + "\n"
