"""
The preprojective-algebra module CH(w) of a dominant minuscule heap.

Fibres use the bottom-to-top basis x_i^1, ..., x_i^q, so the arrow matrix of
a = (i -> j) has shape (v_j, v_i) and A_i is the literal sub-diagonal shift.
An arrow sends x to sigma(c(e)) y where e is the covering relation y < x with
y on runner j; sigma is -1 on red edges and +1 otherwise.

Submodules of CH(w)^{(+)n} are stored blockwise: for every vertex i an RREF
basis of a subspace of C^{n v_i}, coordinates copy-major (index k*v_i + s-1
for x_i^s in copy k, copies counted from 0).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Mapping, Sequence

import numpy as np

from .crystal import Rpp
from .dynkin import DynkinDiagram, Orientation, TwoColouring, build_diagram, two_colour_and_orient
from .heap import EdgeColouring, Heap, bits, build_heap, four_colouring
from .linalg import format_fraction, in_span, rank, rref, solve_exact
from .weyl import (_between_counts, act, check_reduced, format_word, is_dominant_minuscule,
                   is_minuscule, parse_word, right_descents, witnesses)

__all__ = [
    "ModuleError", "HeapModule", "Submodule", "HullReport", "build_heap_module",
    "signed_residuals", "socle_and_hull_checks", "ideal_submodule", "coordinate_submodules",
    "socle_dim_matrix", "SocleDimMatrix", "shift_matrix", "shift_path", "f2_submodules",
]


class ModuleError(ValueError):
    pass


Arrow = tuple[int, int]


def _arrow_matrix(h: Heap, a: Arrow, sign: Mapping[tuple[int, int], int]) -> np.ndarray:
    i, j = a
    src, dst = h.fibre(i), h.fibre(j)
    row = {y: r for r, y in enumerate(dst)}
    m = np.zeros((len(dst), len(src)), dtype=np.int64)
    for col, x in enumerate(src):
        for y in h.lower_covers[x]:
            if h.runner[y] == j:
                m[row[y], col] = sign[(y, x)]
    return m


def signed_residuals(h: Heap, sign: Mapping[tuple[int, int], int],
                     orientation: Orientation) -> dict[int, np.ndarray]:
    """sum over head(a)=i of eps(a) M_a M_{a*} for an arbitrary edge-sign choice."""
    mats = {a: _arrow_matrix(h, a, sign) for a in orientation.doubled}
    out = {}
    for i in h.diagram.vertices:
        v = len(h.fibre(i))
        r = np.zeros((v, v), dtype=np.int64)
        for a in orientation.doubled:
            if a[1] == i:
                r += orientation.sign(a) * (mats[a] @ mats[orientation.star(a)])
        out[i] = r
    return out


@dataclass(frozen=True, eq=False)
class HeapModule:
    heap: Heap
    two_colouring: TwoColouring
    orientation: Orientation
    colouring: EdgeColouring | None             # None for the unsigned type A variant
    arrows: dict = field(repr=False)            # arrow -> np.ndarray (v_head, v_tail)
    signs: dict = field(repr=False, default_factory=dict)   # covering edge -> +-1
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def diagram(self) -> DynkinDiagram:
        return self.heap.diagram

    @cached_property
    def dim_vector(self) -> dict[int, int]:
        return {i: len(self.heap.fibre(i)) for i in self.diagram.vertices}

    def matrix(self, a: Arrow) -> np.ndarray:
        return self.arrows[a]

    def arrows_from(self, i: int) -> list[Arrow]:
        return [a for a in self.orientation.doubled if a[0] == i]

    def residuals(self) -> dict[int, np.ndarray]:
        return signed_residuals(self.heap, self.signs, self.orientation)

    def relation_holds(self) -> bool:
        return all(not r.any() for r in self.residuals().values())

    def path_matrix(self, walk: Sequence[int]) -> np.ndarray:
        """Action of the walk i_0 -> i_1 -> ... -> i_k (first arrow acts first)."""
        m = np.eye(self.dim_vector[walk[0]], dtype=np.int64)
        for a in zip(walk, walk[1:]):
            m = self.arrows[a] @ m
        return m

    def _paths(self, i: int, k: int) -> list[tuple[int, np.ndarray]]:
        """Distinct nonzero (up to sign) path matrices of length k starting at i."""
        key = ("paths", i, k)
        if key in self._cache:
            return self._cache[key]
        if k == 0:
            out = [(i, np.eye(self.dim_vector[i], dtype=np.int64))]
        else:
            seen, out = set(), []
            for j, p in self._paths(i, k - 1):
                for a in self.arrows_from(j):
                    q = self.arrows[a] @ p
                    if not q.any():
                        continue
                    nz = q[q != 0][0]
                    tag = (a[1], (q * int(np.sign(nz))).tobytes())
                    if tag not in seen:
                        seen.add(tag)
                        out.append((a[1], q))
        self._cache[key] = out
        return out

    def socle_rows(self, i: int, k: int) -> tuple[list, list[int]]:
        """RREF of the stacked rows of all length-k path matrices from i."""
        key = ("soc", i, k)
        if key not in self._cache:
            rows = [tuple(int(x) for x in r) for _, p in self._paths(i, k) for r in p]
            self._cache[key] = rref(rows, self.dim_vector[i]) if rows else ([], [])
        return self._cache[key]

    def to_json(self) -> dict:
        return {
            "type": self.diagram.name,
            "word": format_word(self.heap.word),
            "dimension_vector": {str(i): v for i, v in self.dim_vector.items()},
            "two_colouring": {str(i): c for i, c in self.two_colouring.colour.items()},
            "colouring": None if self.colouring is None else
            [[self.heap.label(y), self.heap.label(x), c]
             for (y, x), c in sorted(self.colouring.colour.items())],
            "arrows": [{"tail": a[0], "head": a[1], "epsilon": self.orientation.sign(a),
                        "matrix": self.arrows[a].tolist()} for a in self.orientation.doubled],
        }


def _minuscule_failure(d: DynkinDiagram, word: Sequence[int]) -> str:
    for pos, (i, c, closed) in enumerate(_between_counts(d, word)):
        if closed and c != 2:
            return (f"letter {i} at position {pos + 1} is followed by {c} non-commuting "
                    f"letters before its next occurrence (a minuscule word needs exactly 2)")
        if not closed and c > 1:
            return (f"last occurrence of {i} (position {pos + 1}) is followed by {c} "
                    f"non-commuting letters (a dominant minuscule word allows at most 1)")
    return "unknown"


def build_heap_module(d: DynkinDiagram | str | Heap, word: Sequence[int] | str | None = None,
                      colouring: EdgeColouring | None = None,
                      two_colouring: TwoColouring | None = None,
                      max_length: int | None = None, unsigned_linear: bool = False) -> HeapModule:
    """
    CH(w) for a dominant minuscule word; the relation residual is checked
    exactly.  ``unsigned_linear`` (type A only) uses the orientation
    1 -> 2 -> ... -> m-1 with every sign +1 instead of a 4-colouring.
    """
    if isinstance(d, Heap):
        h = d
    else:
        d = build_diagram(d)
        word = check_reduced(d, parse_word(word))
        if not is_minuscule(d, word) or not is_dominant_minuscule(d, word):
            raise ModuleError(f"({format_word(word)}) is not dominant minuscule: "
                              + _minuscule_failure(d, word))
        h = build_heap(d, word, max_length=max_length)
    if not is_dominant_minuscule(h.diagram, h.word):
        raise ModuleError(f"({format_word(h.word)}) is not dominant minuscule: "
                          + _minuscule_failure(h.diagram, h.word))
    c, orient = two_colour_and_orient(h.diagram, two_colouring)
    if unsigned_linear:
        if not h.diagram.name.startswith("A") or "+" in h.diagram.name:
            raise ModuleError("the unsigned variant needs a connected type A diagram")
        verts = h.diagram.vertices
        orient = Orientation(tuple((a, b) for a, b in zip(verts, verts[1:])))
        col = None
        sign = {e: 1 for e in h.covers}
    else:
        col = four_colouring(h, c) if colouring is None else colouring
        sign = {e: col.sign(e) for e in h.covers}
    mats = {a: _arrow_matrix(h, a, sign) for a in orient.doubled}
    for m in mats.values():
        m.setflags(write=False)
    mod = HeapModule(h, c, orient, col, mats, sign)
    bad = [i for i, r in mod.residuals().items() if r.any()]
    if bad:
        raise AssertionError(f"preprojective relation fails at vertices {bad}")
    return mod


# nilpotent shifts

def shift_matrix(m: HeapModule, i: int) -> np.ndarray:
    """A_i(x_i^s) = x_i^{s-1}, A_i(x_i^1) = 0."""
    v = m.dim_vector[i]
    return np.eye(v, k=1, dtype=np.int64)


def _cover_walks(h: Heap, top: int, bottom: int) -> list[tuple[int, ...]]:
    """Runner sequences of saturated chains from top down to bottom."""
    out = []

    def rec(x, walk):
        if x == bottom:
            out.append(tuple(walk))
            return
        for y in h.lower_covers[x]:
            if y == bottom or h.less(bottom, y):
                rec(y, walk + [h.runner[y]])

    rec(top, [h.runner[top]])
    return out


def shift_path(m: HeapModule, i: int) -> list[tuple[Fraction, tuple[int, ...]]]:
    """
    An element of the path algebra acting on the fibre at i as A_i, written
    as a combination of closed walks at i that follow covering relations.
    """
    h = m.heap
    fib = h.fibre(i)
    target = shift_matrix(m, i)
    if len(fib) <= 1:
        return []
    walks = []
    for lo, hi in zip(fib, fib[1:]):
        for w in _cover_walks(h, hi, lo):
            if w not in walks:
                walks.append(w)
    mats = [m.path_matrix(w) for w in walks]
    # least-squares free: pick an independent subset spanning the target
    vecs = [tuple(int(x) for x in p.flatten()) for p in mats]
    tgt = tuple(int(x) for x in target.flatten())
    red, piv = rref(vecs, len(tgt))
    if not in_span(red, piv, tgt):
        raise AssertionError(f"A_{i} is not a combination of cover paths")
    chosen = []
    for k, v in enumerate(vecs):
        if rank([vecs[c] for c in chosen] + [v]) > len(chosen):
            chosen.append(k)
    cols = [vecs[k] for k in chosen]
    # solve sum c_k cols[k] = tgt via normal equations on the independent columns
    gram = [[sum(a * b for a, b in zip(p, q)) for q in cols] for p in cols]
    rhs = [sum(a * b for a, b in zip(p, tgt)) for p in cols]
    coeffs = solve_exact(gram, rhs)
    combo = [(c, walks[k]) for c, k in zip(coeffs, chosen) if c]
    check = sum(c * m.path_matrix(w).astype(object) for c, w in combo)
    if not (np.asarray(check) == target).all():
        raise AssertionError("shift path does not reproduce A_i")
    return combo


# socle and hull

@dataclass
class HullReport:
    socle_beads: list[int]
    minimal_beads: list[int]
    socle_vertices: list[int]
    right_descents: list[int]
    dim_vector: dict[int, int]
    root_of_weight: dict[int, int]
    witness: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return (self.socle_beads == self.minimal_beads
                and self.socle_vertices == self.right_descents
                and self.dim_vector == self.root_of_weight)

    def to_json(self) -> dict:
        return {"ok": self.ok, "socle": self.socle_vertices,
                "right_descents": self.right_descents,
                "dimension_vector": {str(k): v for k, v in self.dim_vector.items()},
                "witness": list(self.witness)}


def socle_and_hull_checks(m: HeapModule, lam: Sequence[int] | None = None) -> HullReport:
    h, d = m.heap, m.diagram
    lam = witnesses(d, h.word)[0] if lam is None else tuple(lam)
    soc = []
    for i in d.vertices:
        red, piv = m.socle_rows(i, 1)
        fib = h.fibre(i)
        for s in range(len(fib)):
            unit = [int(t == s) for t in range(len(fib))]
            if not any(sum(r[t] * unit[t] for t in range(len(fib))) for r in red):
                soc.append(fib[s])
    soc.sort()
    wl = act(d, h.word, lam)
    diff = d.weight_to_root(tuple(a - b for a, b in zip(lam, wl)))
    root = {i: int(diff[d.index(i)]) for i in d.vertices}
    return HullReport(
        socle_beads=soc,
        minimal_beads=sorted(h.minimal_elements()),
        socle_vertices=sorted(h.runner[x] for x in soc),
        right_descents=sorted(right_descents(d, h.word)),
        dim_vector=dict(m.dim_vector),
        root_of_weight=root,
        witness=tuple(lam),
    )


# submodules

def _apply(mat: np.ndarray, vec: Sequence, n: int) -> tuple:
    """(I_n (x) mat) applied to a copy-major vector."""
    rows, cols = mat.shape
    out = []
    for k in range(n):
        part = vec[k * cols:(k + 1) * cols]
        for r in range(rows):
            out.append(sum((int(mat[r, c]) * part[c] for c in range(cols) if mat[r, c] and part[c]),
                           Fraction(0)))
    return tuple(out)


@dataclass(frozen=True, eq=False)
class Submodule:
    module: HeapModule
    n: int
    blocks: Mapping[int, tuple]   # vertex -> RREF rows over C^{n v_i}
    memo: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        fixed, pivots = {}, {}
        for i in self.module.diagram.vertices:
            rows = list(self.blocks.get(i, ()))
            width = self.n * self.module.dim_vector[i]
            if any(len(r) != width for r in rows):
                raise ModuleError(f"block at vertex {i} has the wrong width")
            red, piv = rref(rows, width) if rows else ([], [])
            fixed[i], pivots[i] = tuple(red), piv
        object.__setattr__(self, "blocks", fixed)
        self.memo["pivots"] = pivots

    def __eq__(self, other):
        return (isinstance(other, Submodule) and self.n == other.n
                and self.module is other.module and self.blocks == other.blocks)

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.blocks.items()))))

    def width(self, i: int) -> int:
        return self.n * self.module.dim_vector[i]

    def block(self, i: int) -> tuple:
        return self.blocks[i]

    @property
    def dim_vector(self) -> dict[int, int]:
        return {i: len(b) for i, b in self.blocks.items()}

    @property
    def dim(self) -> int:
        return sum(len(b) for b in self.blocks.values())

    def contains(self, i: int, vec: Sequence) -> bool:
        return in_span(self.blocks[i], self.memo["pivots"][i], vec)

    def closure_failures(self) -> list[str]:
        out = []
        for a in self.module.orientation.doubled:
            mat = self.module.arrows[a]
            for b in self.blocks[a[0]]:
                if not self.contains(a[1], _apply(mat, b, self.n)):
                    out.append(f"arrow {a[0]}->{a[1]} leaves the subspace")
                    break
        return out

    def is_closed(self) -> bool:
        return not self.closure_failures()

    def is_coordinate(self) -> bool:
        return all(sum(1 for x in r if x) == 1 for b in self.blocks.values() for r in b)

    def to_json(self) -> dict:
        return {"n": self.n, "blocks": {str(i): [[format_fraction(x) for x in r] for r in b]
                                        for i, b in self.blocks.items()}}

    # constructors

    @classmethod
    def zero(cls, module: HeapModule, n: int) -> "Submodule":
        return cls(module, n, {})

    @classmethod
    def whole(cls, module: HeapModule, n: int) -> "Submodule":
        blocks = {}
        for i, v in module.dim_vector.items():
            blocks[i] = [tuple(int(r == c) for c in range(n * v)) for r in range(n * v)]
        return cls(module, n, blocks)

    @classmethod
    def span(cls, module: HeapModule, n: int, vectors: Iterable[Mapping]) -> "Submodule":
        """
        Span of homogeneous vectors given as {(bead, copy): coeff}, copies
        numbered from 1.  No arrow closure is taken; see ``generated``.
        """
        h = module.heap
        blocks: dict[int, list] = {i: [] for i in module.diagram.vertices}
        for vec in vectors:
            runners = {h.runner[x] for (x, _) in vec}
            if len(runners) != 1:
                raise ModuleError("vectors must be homogeneous (one runner each)")
            i = runners.pop()
            v = module.dim_vector[i]
            row = [Fraction(0)] * (n * v)
            for (x, k), c in vec.items():
                if not 1 <= k <= n:
                    raise ModuleError(f"copy {k} outside 1..{n}")
                row[(k - 1) * v + h.height[x] - 1] += Fraction(c)
            blocks[i].append(tuple(row))
        return cls(module, n, blocks)

    @classmethod
    def generated(cls, module: HeapModule, n: int, blocks: Mapping[int, Iterable]) -> "Submodule":
        """Smallest submodule containing the given block vectors."""
        cur = {i: list(blocks.get(i, ())) for i in module.diagram.vertices}
        while True:
            sub = cls(module, n, cur)
            grew = False
            nxt = {i: list(b) for i, b in sub.blocks.items()}
            for a in module.orientation.doubled:
                for b in sub.blocks[a[0]]:
                    img = _apply(module.arrows[a], b, n)
                    if any(img) and not sub.contains(a[1], img):
                        nxt[a[1]].append(img)
                        grew = True
            if not grew:
                return sub
            cur = nxt


def ideal_submodule(m: HeapModule, mask: int, n: int = 1, copy: int = 1) -> Submodule:
    """The coordinate subspace C phi placed in one copy of CH(w)^{(+)n}."""
    return Submodule.span(m, n, [{(x, copy): 1} for x in bits(mask)])


def coordinate_submodules(m: HeapModule) -> list[int]:
    """Masks of all arrow-closed coordinate subspaces of CH(w), by brute force."""
    h = m.heap
    out = []
    for mask in range(1 << len(h)):
        if ideal_submodule(m, mask).is_closed():
            out.append(mask)
    return out


# socle dimension matrix

@dataclass
class SocleDimMatrix:
    heap: Heap
    values: dict  # (vertex, k) -> int for k = 1..max_level + 1

    def on_heap(self) -> tuple[int, ...]:
        h = self.heap
        return tuple(self.values[(h.runner[x], h.level[x])] for x in range(len(h)))

    def outside(self) -> dict:
        h = self.heap
        inside = {(h.runner[x], h.level[x]) for x in range(len(h))}
        return {key: v for key, v in self.values.items() if key not in inside and v}

    def as_rpp(self, n: int) -> Rpp:
        return Rpp(self.heap, self.on_heap(), n)

    def to_json(self) -> dict:
        verts = self.heap.diagram.vertices
        top = max(k for (_, k) in self.values)
        return {"rows": [[self.values[(i, k)] for k in range(1, top + 1)] for i in verts],
                "vertices": list(verts)}


def _soc_dim(M: Submodule, i: int, k: int) -> int:
    """dim soc^k(M)_i: vectors of M_i killed by every path of length k."""
    if k <= 0:
        return 0
    basis = M.block(i)
    if not basis:
        return 0
    red, _ = M.module.socle_rows(i, k)
    if not red:
        return len(basis)
    v = M.module.dim_vector[i]
    images = []
    for b in basis:
        img = []
        for kk in range(M.n):
            part = b[kk * v:(kk + 1) * v]
            img.extend(sum((r[c] * part[c] for c in range(v) if r[c] and part[c]), Fraction(0))
                       for r in red)
        images.append(img)
    return len(basis) - rank(images)


def socle_dim_matrix(M: Submodule) -> SocleDimMatrix:
    """SD_M(i, k) = dim soc^k(M)_i - dim soc^{k-1}(M)_i, for k up to max level + 1."""
    h = M.module.heap
    top = max(h.level, default=0) + 1
    vals = {}
    for i in h.diagram.vertices:
        prev = 0
        for k in range(1, top + 1):
            cur = _soc_dim(M, i, k)
            vals[(i, k)] = cur - prev
            prev = cur
    return SocleDimMatrix(h, vals)


# brute-force oracle over F_2

def _f2_subspaces(dim: int) -> list[frozenset[int]]:
    """All subspaces of F_2^dim as frozensets of vectors encoded as ints."""
    seen = set()
    out = []
    vecs = range(1 << dim)
    for r in range(dim + 1):
        for gens in product(vecs, repeat=r):
            span = {0}
            for g in gens:
                span |= {s ^ g for s in span}
            fs = frozenset(span)
            if fs not in seen:
                seen.add(fs)
                out.append(fs)
    return out


def f2_submodules(m: HeapModule, max_size: int = 6) -> list[dict[int, frozenset[int]]]:
    """
    Every submodule of CH(w) over F_2 (signs vanish mod 2).  Exhaustive over
    graded subspaces, so only for heaps with at most ``max_size`` beads.
    """
    h = m.heap
    if len(h) > max_size:
        raise ModuleError(f"heap has {len(h)} beads; the F_2 oracle allows {max_size}")
    verts = [i for i in h.diagram.vertices if m.dim_vector[i]]
    spaces = {i: _f2_subspaces(m.dim_vector[i]) for i in verts}
    mats = {a: (np.abs(mat) % 2) for a, mat in m.arrows.items()
            if m.dim_vector[a[0]] and m.dim_vector[a[1]]}

    def image(mat, v, dim_src):
        col = np.array([(v >> s) & 1 for s in range(dim_src)], dtype=np.int64)
        out = (mat @ col) % 2
        return sum(int(b) << s for s, b in enumerate(out))

    result = []
    for choice in product(*(spaces[i] for i in verts)):
        sub = dict(zip(verts, choice))
        ok = True
        for a, mat in mats.items():
            src, dst = sub[a[0]], sub[a[1]]
            if any(image(mat, v, m.dim_vector[a[0]]) not in dst for v in src):
                ok = False
                break
        if ok:
            result.append(sub)
    return result


def f2_coordinate_mask(m: HeapModule, sub: Mapping[int, frozenset[int]]) -> int | None:
    """The bead mask of an F_2 submodule if it is a coordinate subspace, else None."""
    h = m.heap
    mask = 0
    for i, space in sub.items():
        units = [v for v in space if v and v & (v - 1) == 0]
        if len(space) != 1 << len(units):
            return None
        for u in units:
            mask |= 1 << h.fibre(i)[u.bit_length() - 1]
    return mask
