"""
Simply-laced Dynkin diagrams: Cartan data, weight bookkeeping, 2-colouring
and the bipartite orientation used to build preprojective modules.

Weights are tuples of integers in fundamental-weight coordinates, ordered like
``DynkinDiagram.vertices``.  Roots are kept in simple-root coordinates.

>>> d = build_diagram("A3")
>>> d.cartan.tolist()
[[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
>>> d.reflect(d.fundamental_weight(2), 2)
(1, -1, 1)
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

__all__ = [
    "DiagramError", "DynkinDiagram", "TwoColouring", "Orientation",
    "build_diagram", "diagram_from_json", "two_colour_and_orient",
]

Weight = tuple[int, ...]


class DiagramError(ValueError):
    """Input does not describe a finite simply-laced Dynkin diagram."""


@dataclass(frozen=True, eq=False)
class DynkinDiagram:
    vertices: tuple[int, ...]
    edges: frozenset[frozenset[int]]
    name: str = ""
    _pos: dict[int, int] = field(init=False, repr=False)
    _cartan: np.ndarray = field(init=False, repr=False)
    _nbrs: dict[int, tuple[int, ...]] = field(init=False, repr=False)

    def __post_init__(self):
        pos = {v: k for k, v in enumerate(self.vertices)}
        if len(pos) != len(self.vertices):
            raise DiagramError("repeated vertex label")
        nbrs: dict[int, list[int]] = {v: [] for v in self.vertices}
        for e in self.edges:
            if len(e) != 2:
                raise DiagramError(f"loop or malformed edge {sorted(e)}")
            a, b = sorted(e)
            if a not in pos or b not in pos:
                raise DiagramError(f"edge {a}-{b} uses an unknown vertex")
            nbrs[a].append(b)
            nbrs[b].append(a)
        for v, ns in nbrs.items():
            if len(ns) > 3:
                raise DiagramError(f"vertex {v} has degree {len(ns)} > 3")
        _check_forest(self.vertices, nbrs)
        r = len(self.vertices)
        c = 2 * np.eye(r, dtype=np.int64)
        for e in self.edges:
            a, b = (pos[x] for x in e)
            c[a, b] = c[b, a] = -1
        if r and not _positive_definite(c):
            raise DiagramError(
                "diagram is a tree but not of finite type (Cartan matrix is not "
                "positive definite); affine and hyperbolic diagrams are unsupported")
        c.setflags(write=False)
        object.__setattr__(self, "_pos", pos)
        object.__setattr__(self, "_cartan", c)
        object.__setattr__(self, "_nbrs", {v: tuple(sorted(ns)) for v, ns in nbrs.items()})

    def __eq__(self, other):
        return (isinstance(other, DynkinDiagram)
                and self.vertices == other.vertices and self.edges == other.edges)

    def __hash__(self):
        return hash((self.vertices, self.edges))

    @property
    def rank(self) -> int:
        return len(self.vertices)

    @property
    def cartan(self) -> np.ndarray:
        return self._cartan

    def index(self, v: int) -> int:
        return self._pos[v]

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def adjacent(self, u: int, v: int) -> bool:
        return u != v and v in self._nbrs[u]

    def commute(self, u: int, v: int) -> bool:
        """s_u and s_v commute (includes u == v)."""
        return not self.adjacent(u, v)

    def cartan_entry(self, u: int, v: int) -> int:
        return int(self._cartan[self._pos[u], self._pos[v]])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e, key=self.index)) for e in self.edges)

    def components(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for v in self.vertices:
            if v in seen:
                continue
            comp, stack = [], [v]
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self._nbrs[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            out.append(tuple(sorted(comp, key=self.index)))
        return out

    def is_connected_subset(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        if not s:
            return False
        start = next(iter(s))
        seen, stack = {start}, [start]
        while stack:
            x = stack.pop()
            for y in self._nbrs[x]:
                if y in s and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen == s

    # weights, in fundamental-weight coordinates

    def zero_weight(self) -> Weight:
        return (0,) * self.rank

    def fundamental_weight(self, i: int) -> Weight:
        w = [0] * self.rank
        w[self._pos[i]] = 1
        return tuple(w)

    def weight(self, coeffs: Mapping[int, int]) -> Weight:
        """Dominant-style constructor: ``{2: 1}`` is omega_2."""
        w = [0] * self.rank
        for v, c in coeffs.items():
            w[self._pos[v]] += c
        return tuple(w)

    def simple_root(self, i: int) -> Weight:
        """alpha_i in fundamental-weight coordinates (row i of C)."""
        return tuple(int(x) for x in self._cartan[self._pos[i]])

    def pairing(self, lam: Sequence[int], i: int) -> int:
        """<alpha_i^vee, lam>."""
        return lam[self._pos[i]]

    def reflect(self, lam: Sequence[int], i: int) -> Weight:
        """s_i lam = lam - <alpha_i^vee, lam> alpha_i."""
        k = self._pos[i]
        c = lam[k]
        if c == 0:
            return tuple(lam)
        row = self._cartan[k]
        return tuple(int(x - c * y) for x, y in zip(lam, row))

    def add_weights(self, *ws: Sequence[int]) -> Weight:
        return tuple(int(sum(t)) for t in zip(*ws)) if ws else self.zero_weight()

    def sub_roots(self, lam: Sequence[int], root_coeffs: Mapping[int, int]) -> Weight:
        """lam - sum_i c_i alpha_i."""
        out = list(lam)
        for i, c in root_coeffs.items():
            if c:
                row = self._cartan[self._pos[i]]
                for k in range(self.rank):
                    out[k] -= c * int(row[k])
        return tuple(out)

    def root_to_weight(self, beta: Sequence[int]) -> Weight:
        """Simple-root coordinates -> fundamental-weight coordinates."""
        return tuple(int(x) for x in np.asarray(beta, dtype=np.int64) @ self._cartan)

    def weight_to_root(self, lam: Sequence[int]) -> tuple[Fraction, ...]:
        """Inverse of root_to_weight, exact (entries may be non-integral)."""
        from .linalg import solve_exact
        return solve_exact(self._cartan.T.tolist(), list(lam))

    def is_dominant(self, lam: Sequence[int]) -> bool:
        return all(x >= 0 for x in lam)

    def rho(self) -> Weight:
        return (1,) * self.rank

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.sorted_edges()]}


def _check_forest(vertices, nbrs):
    seen: set[int] = set()
    for root in vertices:
        if root in seen:
            continue
        seen.add(root)
        stack = [(root, None)]
        while stack:
            x, parent = stack.pop()
            for y in nbrs[x]:
                if y == parent:
                    continue
                if y in seen:
                    raise DiagramError(f"cycle detected through edge {x}-{y}")
                seen.add(y)
                stack.append((y, x))


def _positive_definite(c: np.ndarray) -> bool:
    # exact leading principal minors; sizes here are tiny
    from .linalg import det_exact
    m = c.tolist()
    return all(det_exact([row[:k] for row in m[:k]]) > 0 for k in range(1, len(m) + 1))


def _typed_edges(kind: str, n: int, offset: int = 0) -> list[tuple[int, int]]:
    if kind == "A":
        if n < 1:
            raise DiagramError("A_n needs n >= 1")
        path = [(k, k + 1) for k in range(1, n)]
    elif kind == "D":
        if n < 4:
            raise DiagramError("D_n needs n >= 4")
        path = [(k, k + 1) for k in range(1, n - 1)] + [(n - 2, n)]
    elif kind == "E":
        if n not in (6, 7, 8):
            raise DiagramError("E_n needs n in {6, 7, 8}")
        path = [(k, k + 1) for k in range(1, n - 1)] + [(3, n)]
    else:
        raise DiagramError(f"type {kind} is not simply laced (only A, D, E are supported)")
    return [(a + offset, b + offset) for a, b in path]


_TYPE_RE = re.compile(r"^\s*([A-Za-z])\s*_?\s*(\d+)\s*$")


def build_diagram(spec: str | Mapping | DynkinDiagram) -> DynkinDiagram:
    """
    Build a diagram from ``"A4"``, ``"D5"``, ``"E6"``, ``"A2+A1"`` or an
    adjacency mapping ``{"vertices": [...], "edges": [[i, j], ...]}``.

    Numbering: A_n is the path 1-...-n; D_n is the path 1-...-(n-1) with n
    attached to n-2; E_n is the path 1-...-(n-1) with n attached to 3.  In a
    union the components are numbered consecutively.
    """
    if isinstance(spec, DynkinDiagram):
        return spec
    if isinstance(spec, Mapping):
        return diagram_from_json(spec)
    parts = [p for p in str(spec).split("+")]
    verts: list[int] = []
    edges: list[tuple[int, int]] = []
    offset = 0
    for part in parts:
        m = _TYPE_RE.match(part)
        if not m:
            raise DiagramError(f"cannot parse diagram spec {part!r}")
        kind, n = m.group(1).upper(), int(m.group(2))
        edges += _typed_edges(kind, n, offset)
        verts += list(range(offset + 1, offset + n + 1))
        offset += n
    return DynkinDiagram(tuple(verts), frozenset(frozenset(e) for e in edges),
                         name="+".join(p.strip().upper() for p in parts))


def diagram_from_json(data: Mapping | str) -> DynkinDiagram:
    if isinstance(data, str):
        data = json.loads(data)
    verts = tuple(int(v) for v in data["vertices"])
    edges = []
    for e in data["edges"]:
        a, b = (int(x) for x in e)
        if a == b:
            raise DiagramError(f"loop at vertex {a}")
        edges.append(frozenset((a, b)))
    if len(set(edges)) != len(edges):
        dup = [sorted(e) for e in edges if edges.count(e) > 1][0]
        raise DiagramError(f"multiple edge {dup[0]}-{dup[1]} (not simply laced)")
    return DynkinDiagram(verts, frozenset(edges), name=data.get("name", ""))


@dataclass(frozen=True)
class TwoColouring:
    colour: Mapping[int, str]  # vertex -> "+" or "-"

    def __getitem__(self, v: int) -> str:
        return self.colour[v]

    def flipped(self) -> "TwoColouring":
        return TwoColouring({v: "-" if c == "+" else "+" for v, c in self.colour.items()})


@dataclass(frozen=True)
class Orientation:
    """Arrows E (from (-) to (+) vertices) and the doubled quiver E u E*."""
    arrows: tuple[tuple[int, int], ...]

    @property
    def doubled(self) -> tuple[tuple[int, int], ...]:
        return self.arrows + tuple((b, a) for a, b in self.arrows)

    def sign(self, arrow: tuple[int, int]) -> int:
        """epsilon(a) = 1 on E, -1 on E*."""
        if arrow in self.arrows:
            return 1
        if (arrow[1], arrow[0]) in self.arrows:
            return -1
        raise KeyError(arrow)

    def star(self, arrow: tuple[int, int]) -> tuple[int, int]:
        return (arrow[1], arrow[0])


def two_colour_and_orient(d: DynkinDiagram, colouring: TwoColouring | None = None
                          ) -> tuple[TwoColouring, Orientation]:
    """Lowest-numbered vertex of each component is (+); arrows go (-) -> (+)."""
    if colouring is None:
        col: dict[int, str] = {}
        for comp in d.components():
            root = comp[0]
            col[root] = "+"
            stack = [root]
            while stack:
                x = stack.pop()
                for y in d.neighbours(x):
                    if y not in col:
                        col[y] = "-" if col[x] == "+" else "+"
                        stack.append(y)
        colouring = TwoColouring(col)
    for a, b in d.sorted_edges():
        if colouring[a] == colouring[b]:
            raise DiagramError(f"colouring is not proper on edge {a}-{b}")
    arrows = []
    for a, b in d.sorted_edges():
        arrows.append((a, b) if colouring[a] == "-" else (b, a))
    return colouring, Orientation(tuple(arrows))

