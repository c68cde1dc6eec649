"""
Heaps of fully commutative reduced words.

Beads are numbered canonically: sorted by (level, runner position), which is
a linear extension, so commutation-equivalent words give identical ``Heap``
objects.  The bead ``x_i^s`` (s-th bead on runner i counted from the bottom)
is ``heap.bead(i, s)``.  Order ideals are stored as integer bitmasks over the
canonical numbering.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

from .config import DEFAULTS
from .dynkin import DynkinDiagram, TwoColouring, build_diagram, two_colour_and_orient
from .weyl import check_reduced, format_word, is_dominant_minuscule, is_fully_commutative

__all__ = [
    "HeapError", "Heap", "EdgeColouring", "build_heap", "order_ideals",
    "iter_order_ideals", "good_order_word", "is_good_order", "four_colouring",
    "all_four_colourings", "check_colouring", "diamonds", "bits", "mask_of",
]

COLOURS = ("B", "G", "R", "Y")  # lexicographic order used for tie-breaking
PLUS_PALETTE = ("G", "Y")
MINUS_PALETTE = ("B", "R")


class HeapError(ValueError):
    pass


def bits(mask: int) -> list[int]:
    out, k = [], 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return out


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << x
    return m


@dataclass(frozen=True, eq=False)
class Heap:
    diagram: DynkinDiagram
    word: tuple[int, ...]          # a reduced word realising the heap
    runner: tuple[int, ...]        # pi(x)
    height: tuple[int, ...]        # s with x = x_{pi(x)}^s
    level: tuple[int, ...]
    lower_covers: tuple[tuple[int, ...], ...]
    upper_covers: tuple[tuple[int, ...], ...]
    below: tuple[int, ...]         # bitmask of elements strictly below x
    above: tuple[int, ...]
    _bead: dict = field(repr=False, default_factory=dict)

    def __len__(self) -> int:
        return len(self.runner)

    def __eq__(self, other):
        return (isinstance(other, Heap) and self.diagram == other.diagram
                and self.runner == other.runner and self.lower_covers == other.lower_covers)

    def __hash__(self):
        return hash((self.runner, self.lower_covers))

    @property
    def size(self) -> int:
        return len(self.runner)

    @property
    def full_mask(self) -> int:
        return (1 << len(self)) - 1

    @property
    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs (lower, upper), sorted."""
        return sorted((y, x) for x in range(len(self)) for y in self.lower_covers[x])

    def bead(self, i: int, s: int) -> int:
        return self._bead[(i, s)]

    def fibre(self, i: int) -> list[int]:
        """Beads on runner i, bottom to top."""
        out = []
        s = 1
        while (i, s) in self._bead:
            out.append(self._bead[(i, s)])
            s += 1
        return out

    def fibre_sizes(self) -> dict[int, int]:
        return {i: len(self.fibre(i)) for i in self.diagram.vertices}

    def less(self, x: int, y: int) -> bool:
        return bool(self.below[y] >> x & 1)

    def label(self, x: int) -> str:
        return f"x_{self.runner[x]}^{self.height[x]}"

    def minimal_elements(self) -> list[int]:
        return [x for x in range(len(self)) if not self.lower_covers[x]]

    def maximal_elements(self) -> list[int]:
        return [x for x in range(len(self)) if not self.upper_covers[x]]

    def is_ranked(self) -> bool:
        return all(self.level[x] == self.level[y] + 1
                   for x in range(len(self)) for y in self.lower_covers[x])

    def is_ideal(self, mask: int) -> bool:
        return all(self.below[x] & ~mask == 0 for x in bits(mask))

    def ideal_word(self, mask: int) -> tuple[int, ...]:
        """Reduced word of the element v <=_L w corresponding to an ideal."""
        return tuple(self.runner[x] for x in sorted(bits(mask), reverse=True))

    def addable(self, mask: int, i: int) -> int | None:
        """Bead on runner i that can be added to the ideal, if any."""
        for x in self.fibre(i):
            if not mask >> x & 1:
                return x if self.below[x] & ~mask == 0 else None
        return None

    def removable(self, mask: int, i: int) -> int | None:
        top = None
        for x in self.fibre(i):
            if mask >> x & 1:
                top = x
            else:
                break
        if top is None or self.above[top] & mask:
            return None
        return top

    def to_json(self) -> dict:
        return {
            "type": self.diagram.name,
            "word": format_word(self.word),
            "runner": list(self.runner),
            "covers": [list(c) for c in self.covers],
            "level": list(self.level),
        }


def build_heap(d: DynkinDiagram | str, word: Sequence[int] | str, check: bool = True,
               max_length: int | None = None) -> Heap:
    """Heap of a reduced, fully commutative word (rightmost letter at the bottom)."""
    from .weyl import parse_word
    d = build_diagram(d)
    word = parse_word(word)
    bound = DEFAULTS.max_word_length if max_length is None else max_length
    if len(word) > bound:
        raise HeapError(f"word length {len(word)} exceeds the bound {bound}")
    word = check_reduced(d, word)
    if check and not is_fully_commutative(d, word):
        raise HeapError(f"({format_word(word)}) is not fully commutative; its heap is word dependent")
    n = len(word)
    below_pos = [0] * n
    for a in range(n - 1, -1, -1):
        for b in range(a + 1, n):
            if word[a] == word[b] or d.adjacent(word[a], word[b]):
                below_pos[a] |= below_pos[b] | (1 << b)
    lvl = [0] * n
    for a in range(n - 1, -1, -1):
        lvl[a] = 1 + max((lvl[b] for b in bits(below_pos[a])), default=0)
    order = sorted(range(n), key=lambda a: (lvl[a], d.index(word[a]), -a))
    new = {a: k for k, a in enumerate(order)}
    runner = tuple(word[a] for a in order)
    level = tuple(lvl[a] for a in order)
    below = [0] * n
    for a in range(n):
        below[new[a]] = mask_of(new[b] for b in bits(below_pos[a]))
    lower = []
    for x in range(n):
        cands = bits(below[x])
        lower.append(tuple(y for y in cands if not any(below[z] >> y & 1 for z in cands)))
    upper = [[] for _ in range(n)]
    above = [0] * n
    for x in range(n):
        for y in lower[x]:
            upper[y].append(x)
        for y in bits(below[x]):
            above[y] |= 1 << x
    counts: dict[int, int] = {}
    height = []
    beads = {}
    for x in range(n):
        counts[runner[x]] = counts.get(runner[x], 0) + 1
        height.append(counts[runner[x]])
        beads[(runner[x], counts[runner[x]])] = x
    # canonical word: reverse linear extension
    canon = tuple(reversed(runner))
    return Heap(d, canon, runner, tuple(height), level, tuple(lower),
                tuple(tuple(u) for u in upper), tuple(below), tuple(above), beads)


def iter_order_ideals(h: Heap) -> Iterator[int]:
    """All order ideals as bitmasks (depth first over the canonical linear extension)."""
    n = len(h)
    lower = [mask_of(c) for c in h.lower_covers]

    def rec(k, mask):
        if k == n:
            yield mask
            return
        yield from rec(k + 1, mask)
        if lower[k] & ~mask == 0:
            yield from rec(k + 1, mask | (1 << k))

    yield from rec(0, 0)


def order_ideals(h: Heap, limit: int | None = None) -> list[int]:
    """All ideals sorted by (size, sorted members); bounded to protect memory."""
    limit = DEFAULTS.max_ideals if limit is None else limit
    out = []
    for m in iter_order_ideals(h):
        out.append(m)
        if len(out) > limit:
            raise HeapError(f"more than {limit} order ideals; use iter_order_ideals to stream")
    out.sort(key=lambda m: (bin(m).count("1"), bits(m)))
    return out


def _level_graph(h: Heap, k: int) -> dict[int, set[int]]:
    beads = [x for x in range(len(h)) if h.level[x] == k]
    adj = {x: set() for x in beads}
    for y in range(len(h)):
        if h.level[y] == k - 1:
            ups = [x for x in h.upper_covers[y] if h.level[x] == k]
            for a in ups:
                for b in ups:
                    if a != b:
                        adj[a].add(b)
    return adj


def _good_at(h: Heap, x: int, dropped: int) -> bool:
    ys = h.lower_covers[x]
    if len(ys) < 2:
        return True
    return len(ys) == 2 and any(not (h.above[y] & dropped) for y in ys)


def _components(adj: dict[int, set[int]]) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for s in sorted(adj):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out


def _walk_path(adj: dict[int, set[int]], comp: list[int]) -> list[int]:
    start = min(comp, key=lambda x: (len(adj[x]), x))
    out, prev, cur = [], None, start
    while cur is not None:
        out.append(cur)
        nxt = [y for y in adj[cur] if y != prev and y not in out]
        prev, cur = cur, (nxt[0] if nxt else None)
    return out


def _search_order(h: Heap, comp: list[int], dropped: int) -> list[int] | None:
    # backtracking fallback for level graphs that are not unions of paths
    if not comp:
        return []
    for x in comp:
        if _good_at(h, x, dropped):
            rest = _search_order(h, [y for y in comp if y != x], dropped | (1 << x))
            if rest is not None:
                return [x] + rest
    return None


def good_order_word(h: Heap) -> list[int]:
    """
    Drop order (first dropped first) in which every bead is dropped in good
    order: level by level, each path component of the co-covering graph
    walked from an endpoint.  A bead covered by three beads (top of a
    trivalent runner) makes a triangle; such components are ordered by a
    small search instead.
    """
    order: list[int] = []
    dropped = 0
    for k in range(1, max(h.level, default=0) + 1):
        adj = _level_graph(h, k)
        for comp in _components(adj):
            is_path = (all(len(adj[x]) <= 2 for x in comp)
                       and sum(len(adj[x]) for x in comp) == 2 * (len(comp) - 1))
            part = _walk_path(adj, comp) if is_path else _search_order(h, comp, dropped)
            if part is None:
                raise HeapError(f"no good drop order for level {k}")
            for x in part:
                order.append(x)
                dropped |= 1 << x
    return order


def is_good_order(h: Heap, order: Sequence[int]) -> bool:
    """Check the good-order condition for a drop sequence (and that it is a linear extension)."""
    dropped = 0
    for x in order:
        if h.below[x] & ~dropped:
            return False
        ys = h.lower_covers[x]
        if len(ys) > 2:
            return False
        if len(ys) == 2:
            # maximal among already dropped: nothing dropped lies above it
            if all(h.above[y] & dropped for y in ys):
                return False
        dropped |= 1 << x
    return dropped == h.full_mask


@dataclass(frozen=True)
class EdgeColouring:
    colour: Mapping[tuple[int, int], str]  # (lower, upper) -> R/B/G/Y

    def __getitem__(self, edge: tuple[int, int]) -> str:
        return self.colour[edge]

    def sign(self, edge: tuple[int, int]) -> int:
        return -1 if self.colour[edge] == "R" else 1

    def key(self) -> tuple:
        return tuple(sorted(self.colour.items()))


def diamonds(h: Heap) -> list[tuple[int, int, int, int]]:
    """(bottom, left, right, top) with top covering left and right, both covering bottom."""
    out = []
    for top in range(len(h)):
        lc = h.lower_covers[top]
        for a in range(len(lc)):
            for b in range(a + 1, len(lc)):
                common = set(h.lower_covers[lc[a]]) & set(h.lower_covers[lc[b]])
                for y in sorted(common):
                    out.append((y, lc[a], lc[b], top))
    return out


def _palette(c: TwoColouring, runner: int) -> tuple[str, str]:
    return PLUS_PALETTE if c[runner] == "+" else MINUS_PALETTE


def check_colouring(h: Heap, col: EdgeColouring, c: TwoColouring) -> list[str]:
    """Violations of the three colouring properties (empty list if valid)."""
    problems = []
    edges = h.covers
    if set(col.colour) != set(edges):
        problems.append("colouring does not cover exactly the covering relations")
        return problems
    for x in range(len(h)):
        if not _distinct_at(h, col.colour, x):
            problems.append(f"repeated colour at {h.label(x)}")
    for (y, x) in edges:
        if col[(y, x)] not in _palette(c, h.runner[x]):
            problems.append(f"edge {h.label(y)}<{h.label(x)} has colour outside its palette")
    for (y, a, b, t) in diamonds(h):
        cs = {col[(y, a)], col[(y, b)], col[(a, t)], col[(b, t)]}
        if len(cs) != 4:
            problems.append(f"diamond at {h.label(t)} is not four-coloured")
    return problems


def _distinct_at(h: Heap, col: Mapping, x: int) -> bool:
    """
    Edges at x carry distinct colours.  A bead with three upper covers (top
    of a trivalent runner) cannot satisfy this, since all three edges share
    one palette; those edges lie in no diamond, so only that bead's upper
    edges are exempt.
    """
    down = [col[(y, x)] for y in h.lower_covers[x] if (y, x) in col]
    up = [col[(x, z)] for z in h.upper_covers[x] if (x, z) in col]
    if len(h.upper_covers[x]) > 2:
        up = list(dict.fromkeys(up))
    touching = down + up
    return len(set(touching)) == len(touching)


def _local_ok(h: Heap, col: dict, x: int, order_pos: dict[int, int]) -> bool:
    # property 1 at x and at its lower covers, property 3 for diamonds topped at x
    if not _distinct_at(h, col, x):
        return False
    for y in h.lower_covers[x]:
        if not _distinct_at(h, col, y):
            return False
    lc = h.lower_covers[x]
    for a in range(len(lc)):
        for b in range(a + 1, len(lc)):
            for y in set(h.lower_covers[lc[a]]) & set(h.lower_covers[lc[b]]):
                cs = {col[(y, lc[a])], col[(y, lc[b])], col[(lc[a], x)], col[(lc[b], x)]}
                if len(cs) != 4:
                    return False
    return True


def _require_dominant(h: Heap):
    if not is_dominant_minuscule(h.diagram, h.word):
        raise HeapError(f"heap of ({format_word(h.word)}) is not dominant minuscule")


def four_colouring(h: Heap, c: TwoColouring | None = None) -> EdgeColouring:
    """
    Deterministic colouring: beads in good order, new edges ordered by the
    covered bead, lexicographically smallest admissible colours.
    """
    _require_dominant(h)
    if c is None:
        c, _ = two_colour_and_orient(h.diagram)
    order = good_order_word(h)
    pos = {x: k for k, x in enumerate(order)}
    col: dict[tuple[int, int], str] = {}
    for x in order:
        ys = sorted(h.lower_covers[x])
        pal = _palette(c, h.runner[x])
        for choice in product(pal, repeat=len(ys)):
            for y, cc in zip(ys, choice):
                col[(y, x)] = cc
            if _local_ok(h, col, x, pos):
                break
        else:
            raise AssertionError(f"no admissible colour for edges below {h.label(x)}")
    result = EdgeColouring(dict(col))
    problems = check_colouring(h, result, c)
    if problems:
        raise AssertionError("internal colouring error: " + "; ".join(problems))
    return result


def all_four_colourings(h: Heap, c: TwoColouring | None = None,
                        limit: int = 10_000) -> list[EdgeColouring]:
    """Every valid colouring (backtracking in good order), up to ``limit``."""
    _require_dominant(h)
    if c is None:
        c, _ = two_colour_and_orient(h.diagram)
    order = good_order_word(h)
    pos = {x: k for k, x in enumerate(order)}
    out: list[EdgeColouring] = []
    col: dict[tuple[int, int], str] = {}

    def rec(k):
        if len(out) >= limit:
            return
        if k == len(order):
            out.append(EdgeColouring(dict(col)))
            return
        x = order[k]
        ys = sorted(h.lower_covers[x])
        for choice in product(_palette(c, h.runner[x]), repeat=len(ys)):
            for y, cc in zip(ys, choice):
                col[(y, x)] = cc
            if _local_ok(h, col, x, pos):
                rec(k + 1)
        for y in ys:
            col.pop((y, x), None)

    rec(0)
    return out
