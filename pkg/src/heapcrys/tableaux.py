"""
Type A tableaux, Gelfand-Tsetlin patterns and the rectangular tableau/RPP
bijection, plus the Schuetzenberger involution of a finite connected crystal.

Tableau crystal operators come from the row reading word (rows bottom to
top, each left to right) in B(omega_1)^{(x) N} with the same signature rule
as ``TensorCrystal``.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from .crystal import CrystalError, Rpp, TensorCrystal, _Crystal
from .dynkin import DynkinDiagram, Weight, build_diagram
from .heap import Heap, build_heap
from .weyl import minimal_coset_rep, theta_involution

__all__ = [
    "TableauError", "Tableau", "GtPattern", "LetterCrystal", "TableauCrystal",
    "gt_of_tableau", "tableau_of_gt", "all_ssyt", "random_ssyt", "rectangle_heap",
    "rpp_of_rectangular_tableau", "rectangular_tableau_of_rpp", "schuetzenberger",
    "RestrictedCrystal",
]


class TableauError(ValueError):
    pass


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]
    m: int

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        shape = self.shape
        if any(a < b for a, b in zip(shape, shape[1:])):
            raise TableauError(f"row lengths {shape} do not form a partition")
        for r in rows:
            if any(not 1 <= x <= self.m for x in r):
                raise TableauError(f"entry outside 1..{self.m}")
            if any(a > b for a, b in zip(r, r[1:])):
                raise TableauError("rows must weakly increase")
        for upper, lower in zip(rows, rows[1:]):
            if any(lower[c] <= upper[c] for c in range(len(lower))):
                raise TableauError("columns must strictly increase")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for r in reversed(self.rows) for x in r)

    def with_reading_word(self, word: Sequence[int]) -> "Tableau":
        it = iter(word)
        rows = [None] * len(self.rows)
        for k in range(len(self.rows) - 1, -1, -1):
            rows[k] = tuple(next(it) for _ in self.rows[k])
        return Tableau(tuple(rows), self.m)

    def weight(self) -> Weight:
        """Weight in A_{m-1} fundamental-weight coordinates."""
        content = [0] * (self.m + 1)
        for r in self.rows:
            for x in r:
                content[x] += 1
        return tuple(content[i] - content[i + 1] for i in range(1, self.m))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


@dataclass(frozen=True)
class GtPattern:
    """rows[i-1] = lambda^{(i)}, a partition with i parts (zeros allowed)."""
    rows: tuple[tuple[int, ...], ...]

    def interlaces(self) -> bool:
        for i in range(len(self.rows) - 1):
            a, b = self.rows[i], self.rows[i + 1]
            if len(a) != i + 1 or len(b) != i + 2:
                return False
            if not all(b[k + 1] <= a[k] <= b[k] for k in range(i + 1)):
                return False
        return bool(self.rows) and len(self.rows[0]) == 1

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def gt_of_tableau(t: Tableau) -> GtPattern:
    """lambda^{(i)}_k = number of entries <= i in row k."""
    rows = []
    for i in range(1, t.m + 1):
        rows.append(tuple(sum(1 for x in t.rows[k] if x <= i) if k < len(t.rows) else 0
                          for k in range(i)))
    return GtPattern(tuple(rows))


def tableau_of_gt(g: GtPattern) -> Tableau:
    if not g.interlaces():
        raise TableauError("GT pattern violates interlacing")
    m = len(g.rows)
    top = g.rows[-1]
    out = []
    for k in range(m):
        if top[k] == 0:
            break
        row = []
        for i in range(1, m + 1):
            prev = g.rows[i - 2][k] if i >= 2 and k < i - 1 else 0
            cur = g.rows[i - 1][k] if k < i else 0
            row += [i] * (cur - prev)
        out.append(tuple(row))
    return Tableau(tuple(out), m)


def all_ssyt(shape: Sequence[int], m: int) -> Iterator[Tableau]:
    """Every semistandard tableau of the given shape with entries in 1..m."""
    shape = tuple(x for x in shape if x)

    def rec(k, rows):
        if k == len(shape):
            yield Tableau(tuple(rows), m)
            return
        for row in combinations_with_replacement(range(1, m + 1), shape[k]):
            if k and any(row[c] <= rows[-1][c] for c in range(len(row))):
                continue
            yield from rec(k + 1, rows + [row])

    yield from rec(0, [])


def random_ssyt(shape: Sequence[int], m: int, rng: random.Random) -> Tableau:
    """Uniform over SSYT(shape) by exhaustive listing (small shapes only)."""
    return rng.choice(list(all_ssyt(shape, m)))


class LetterCrystal(_Crystal):
    """B(omega_1) for sl_m on letters 1..m."""

    def __init__(self, m: int):
        self.m = m
        self.diagram = build_diagram(f"A{m - 1}")

    def f(self, b, i):
        return b + 1 if b == i else None

    def e(self, b, i):
        return b - 1 if b == i + 1 else None

    def eps(self, b, i):
        return 1 if b == i + 1 else 0

    def phi(self, b, i):
        return 1 if b == i else 0

    def wt(self, b):
        w = [0] * (self.m - 1)
        if b <= self.m - 1:
            w[b - 1] += 1
        if b >= 2:
            w[b - 2] -= 1
        return tuple(w)


class TableauCrystal(_Crystal):
    def __init__(self, m: int):
        self.m = m
        self.letter = LetterCrystal(m)
        self.diagram = self.letter.diagram

    def _tensor(self, t: Tableau) -> TensorCrystal:
        return TensorCrystal([self.letter] * len(t.reading_word()))

    def f(self, t: Tableau, i):
        w = self._tensor(t).f(t.reading_word(), i)
        return None if w is None else t.with_reading_word(w)

    def e(self, t: Tableau, i):
        w = self._tensor(t).e(t.reading_word(), i)
        return None if w is None else t.with_reading_word(w)

    def eps(self, t, i):
        return self._tensor(t).eps(t.reading_word(), i)

    def phi(self, t, i):
        return self._tensor(t).phi(t.reading_word(), i)

    def wt(self, t: Tableau):
        return t.weight()


def rectangle_heap(m: int, p: int) -> Heap:
    """H(w_0^J) in A_{m-1} for J = {1..m-1} minus {p}."""
    d = build_diagram(f"A{m - 1}")
    return build_heap(d, minimal_coset_rep(d, set(d.vertices) - {p}))


def _gt_cells(m: int, p: int):
    """Free GT positions (i, k) with their heap coordinates (runner, level)."""
    for k in range(1, p + 1):
        for i in range(k, m - p + k):
            yield (i, k), (m - i, m - p - i + 2 * k - 1)


def _locate(h: Heap) -> dict[tuple[int, int], int]:
    return {(h.runner[x], h.level[x]): x for x in range(len(h))}


def rpp_of_rectangular_tableau(t: Tableau, heap: Heap | None = None) -> Rpp:
    """
    Reflect the free GT entries in a vertical axis and rotate clockwise: the
    entry lambda^{(i)}_k lands on runner m-i at level m-p-i+2k-1.
    """
    shape = t.shape
    if not shape or len(set(shape)) != 1:
        raise TableauError(f"shape {shape} is not a rectangle")
    p, n, m = len(shape), shape[0], t.m
    if p >= m:
        raise TableauError("rectangle needs fewer than m rows")
    heap = rectangle_heap(m, p) if heap is None else heap
    where = _locate(heap)
    g = gt_of_tableau(t)
    vals = [0] * len(heap)
    cells = list(_gt_cells(m, p))
    if len(cells) != len(heap):
        raise AssertionError("GT rectangle and heap sizes differ")
    for (i, k), pos in cells:
        vals[where[pos]] = g.rows[i - 1][k - 1]
    return Rpp(heap, tuple(vals), n)


def rectangular_tableau_of_rpp(phi: Rpp, m: int, p: int) -> Tableau:
    where = _locate(phi.heap)
    n = phi.n
    rows = []
    for i in range(1, m + 1):
        row = []
        for k in range(1, i + 1):
            if k > p:
                row.append(0)
            elif i >= m - p + k:
                row.append(n)
            else:
                row.append(phi.values[where[(m - i, m - p - i + 2 * k - 1)]])
        rows.append(tuple(row))
    return tableau_of_gt(GtPattern(tuple(rows)))


class RestrictedCrystal(_Crystal):
    """A crystal seen as a crystal for the sub-diagram on ``vertices``."""

    def __init__(self, crystal, vertices: Iterable[int]):
        self.crystal = crystal
        self.diagram = crystal.diagram
        self._verts = tuple(sorted(set(vertices), key=self.diagram.index))

    @property
    def vertices(self):
        return self._verts

    def e(self, b, i):
        return self.crystal.e(b, i)

    def f(self, b, i):
        return self.crystal.f(b, i)

    def eps(self, b, i):
        return self.crystal.eps(b, i)

    def phi(self, b, i):
        return self.crystal.phi(b, i)

    def wt(self, b):
        return self.crystal.wt(b)


def schuetzenberger(crystal, elements: Iterable | None = None, start=None,
                    vertices: Iterable[int] | None = None) -> dict:
    """
    The involution xi of a finite connected crystal (for the sub-diagram on
    ``vertices``): xi(highest) = lowest and xi(f_i b) = e_theta(i) xi(b).
    Returns xi as a dict on the component.
    """
    from .crystal import connected_component
    d: DynkinDiagram = crystal.diagram
    verts = tuple(crystal.vertices if vertices is None else vertices)
    if elements is None:
        if start is None:
            raise CrystalError("need the element set or a starting element")
        elements = connected_component(crystal, start, verts)
    elements = frozenset(elements)
    if start is not None and start not in elements:
        raise CrystalError("start element not in the given set")
    comp = connected_component(crystal, next(iter(elements)), verts)
    if comp != elements:
        raise CrystalError("crystal is not connected; decompose it first")
    highs = [b for b in elements if all(crystal.e(b, i) is None for i in verts)]
    lows = [b for b in elements
            if all((y := crystal.f(b, i)) is None or y not in elements for i in verts)]
    if len(highs) != 1 or len(lows) != 1:
        raise CrystalError("crystal needs unique highest and lowest elements")
    theta = theta_involution(d, verts)
    xi = {highs[0]: lows[0]}
    queue = deque([highs[0]])
    while queue:
        b = queue.popleft()
        for i in verts:
            y = crystal.f(b, i)
            if y is None or y not in elements:
                continue
            z = crystal.e(xi[b], theta[i])
            if z is None:
                raise AssertionError("xi is not defined consistently (e returned 0)")
            if y in xi:
                if xi[y] != z:
                    raise AssertionError("xi is not well defined")
                continue
            xi[y] = z
            queue.append(y)
    if len(xi) != len(elements) or set(xi.values()) != set(elements):
        raise AssertionError("xi is not a bijection")
    if any(xi[xi[b]] != b for b in elements):
        raise AssertionError("xi is not an involution")
    return xi
