"""
Upper semi-normal crystals.

A crystal here is any object exposing ``e(b, i)``, ``f(b, i)``, ``eps(b, i)``,
``phi(b, i)``, ``wt(b)`` and an index set ``vertices``; ``None`` plays the
role of 0.  Concrete models:

* ``IdealCrystal``: order ideals of a lambda-minuscule heap (bitmasks),
  f_i adds the addable bead on runner i, e_i removes the removable one.
* ``TensorCrystal``: tuples of elements, operators by the signature rule.
* ``SubCrystal``: restriction to a subset (f leaving the subset gives 0).
* ``RppCrystal``: reverse plane partitions seen as increasing chains inside
  the n-fold tensor power of an ideal crystal.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .config import DEFAULTS
from .dynkin import DynkinDiagram, Weight, build_diagram
from .heap import Heap, bits, build_heap, order_ideals
from .weyl import (check_reduced, format_word, is_lambda_minuscule,
                   parse_word)

__all__ = [
    "CrystalError", "IdealCrystal", "TensorCrystal", "SubCrystal", "RppCrystal",
    "Rpp", "signature", "tensor_pair_f", "tensor_pair_e", "demazure",
    "connected_component", "highest_weight_elements", "check_axioms",
    "crystal_edges", "crystal_isomorphism", "generate_demazure", "rpp_chain", "chain_rpp", "all_rpps",
    "is_increasing_chain", "GravsortReport", "DemazureTensorReport",
    "demazure_tensor_comparison", "verify_gravsort", "ideal_crystal_ops",
]


class CrystalError(ValueError):
    pass


class _Crystal:
    diagram: DynkinDiagram

    @property
    def vertices(self):
        return self.diagram.vertices

    def phi(self, b, i: int) -> int:
        return self.eps(b, i) + self.diagram.pairing(self.wt(b), i)

    def eps(self, b, i: int) -> int:
        k = 0
        while True:
            b = self.e(b, i)
            if b is None:
                return k
            k += 1


class IdealCrystal(_Crystal):
    """B_w(lambda) realised on J(H(w)) for a lambda-minuscule w."""

    def __init__(self, heap: Heap, lam: Sequence[int], check: bool = True):
        self.heap = heap
        self.diagram = heap.diagram
        self.lam = tuple(lam)
        if check and not is_lambda_minuscule(self.diagram, heap.word, self.lam):
            raise CrystalError(f"({format_word(heap.word)}) is not lambda-minuscule for {self.lam}")
        self._roots = {i: self.diagram.simple_root(i) for i in self.diagram.vertices}

    def highest(self) -> int:
        return 0

    def f(self, b: int, i: int) -> int | None:
        x = self.heap.addable(b, i)
        return None if x is None else b | (1 << x)

    def e(self, b: int, i: int) -> int | None:
        x = self.heap.removable(b, i)
        return None if x is None else b & ~(1 << x)

    def eps(self, b: int, i: int) -> int:
        k = 0
        while (b := self.e(b, i)) is not None:
            k += 1
        return k

    def wt(self, b: int) -> Weight:
        out = list(self.lam)
        for x in bits(b):
            r = self._roots[self.heap.runner[x]]
            for k in range(len(out)):
                out[k] -= r[k]
        return tuple(out)

    def elements(self) -> list[int]:
        return order_ideals(self.heap)


def signature(factors: Sequence, crystals: Sequence, i: int) -> tuple[list[int], list[int]]:
    """
    Surviving signs after cancelling -+ pairs.  Returns (plus_owners,
    minus_owners): factor indices of the uncancelled + and - signs, left to right.
    """
    plus: list[int] = []    # unmatched + so far (cannot be cancelled by later signs)
    minus: list[int] = []   # unmatched - waiting for a later +
    for k, (b, c) in enumerate(zip(factors, crystals)):
        p, m = c.phi(b, i), c.eps(b, i)
        for _ in range(p):
            if minus:
                minus.pop()
            else:
                plus.append(k)
        minus.extend([k] * m)
    return plus, minus


class TensorCrystal(_Crystal):
    """Tensor product B_1 (x) ... (x) B_n with the signature rule."""

    def __init__(self, crystals: Sequence):
        if not crystals:
            raise CrystalError("empty tensor product")
        self.crystals = tuple(crystals)
        self.diagram = crystals[0].diagram

    def f(self, b: tuple, i: int):
        plus, _ = signature(b, self.crystals, i)
        if not plus:
            return None
        k = plus[-1]
        new = self.crystals[k].f(b[k], i)
        return None if new is None else b[:k] + (new,) + b[k + 1:]

    def e(self, b: tuple, i: int):
        _, minus = signature(b, self.crystals, i)
        if not minus:
            return None
        k = minus[0]
        new = self.crystals[k].e(b[k], i)
        return None if new is None else b[:k] + (new,) + b[k + 1:]

    def eps(self, b: tuple, i: int) -> int:
        return len(signature(b, self.crystals, i)[1])

    def phi(self, b: tuple, i: int) -> int:
        return len(signature(b, self.crystals, i)[0])

    def wt(self, b: tuple) -> Weight:
        return self.diagram.add_weights(*(c.wt(x) for c, x in zip(self.crystals, b)))


def tensor_pair_f(c1, c2, b1, b2, i):
    """Two-factor rule from the ε/φ comparison, for cross-checking the signature rule."""
    if c1.eps(b1, i) < c2.phi(b2, i):
        y = c2.f(b2, i)
        return None if y is None else (b1, y)
    y = c1.f(b1, i)
    return None if y is None else (y, b2)


def tensor_pair_e(c1, c2, b1, b2, i):
    if c1.eps(b1, i) > c2.phi(b2, i):
        y = c1.e(b1, i)
        return None if y is None else (y, b2)
    y = c2.e(b2, i)
    return None if y is None else (b1, y)


class SubCrystal(_Crystal):
    """Restriction of a crystal to a subset stable under raising operators."""

    def __init__(self, ambient, elements: Iterable):
        self.ambient = ambient
        self.diagram = ambient.diagram
        self.elements = frozenset(elements)

    def f(self, b, i):
        y = self.ambient.f(b, i)
        return y if y in self.elements else None

    def e(self, b, i):
        return self.ambient.e(b, i)

    def eps(self, b, i):
        return self.ambient.eps(b, i)

    def phi(self, b, i):
        return self.eps(b, i) + self.diagram.pairing(self.wt(b), i)

    def wt(self, b):
        return self.ambient.wt(b)


def demazure(crystal, start, word: Sequence[int], limit: int | None = None) -> frozenset:
    """Union over m_k of f_{i_1}^{m_1} ... f_{i_l}^{m_l} start (rightmost letter first)."""
    limit = DEFAULTS.max_crystal_size if limit is None else limit
    current = {start}
    for i in reversed(tuple(word)):
        new = set(current)
        for b in current:
            y = crystal.f(b, i)
            while y is not None and y not in new:
                new.add(y)
                y = crystal.f(y, i)
        if len(new) > limit:
            raise CrystalError(f"Demazure crystal exceeds {limit} elements")
        current = new
    return frozenset(current)


def connected_component(crystal, start, vertices: Iterable[int] | None = None,
                        limit: int | None = None) -> frozenset:
    """Component of ``start`` using e_i and f_i for i in ``vertices`` (default: all)."""
    limit = DEFAULTS.max_crystal_size if limit is None else limit
    verts = tuple(crystal.vertices if vertices is None else vertices)
    seen = {start}
    queue = deque([start])
    while queue:
        b = queue.popleft()
        for i in verts:
            for y in (crystal.f(b, i), crystal.e(b, i)):
                if y is not None and y not in seen:
                    seen.add(y)
                    queue.append(y)
                    if len(seen) > limit:
                        raise CrystalError(f"component exceeds {limit} elements")
    return frozenset(seen)


def crystal_isomorphism(c1, start1, c2, start2, vertices: Iterable[int] | None = None) -> dict:
    """
    The isomorphism of connected crystals sending start1 to start2, built by
    following f and e in parallel.  Raises if the two graphs do not match.
    """
    verts = tuple(c1.vertices if vertices is None else vertices)
    iso = {start1: start2}
    queue = deque([start1])
    while queue:
        b = queue.popleft()
        for i in verts:
            for op in ("f", "e"):
                y1, y2 = getattr(c1, op)(b, i), getattr(c2, op)(iso[b], i)
                if (y1 is None) != (y2 is None):
                    raise CrystalError(f"crystals differ at {op}_{i}")
                if y1 is None:
                    continue
                if y1 in iso:
                    if iso[y1] != y2:
                        raise CrystalError("parallel walk is inconsistent")
                    continue
                iso[y1] = y2
                queue.append(y1)
    if len(set(iso.values())) != len(iso):
        raise CrystalError("map is not injective")
    return iso


def highest_weight_elements(crystal, elements: Iterable, vertices: Iterable[int] | None = None) -> list:
    verts = tuple(crystal.vertices if vertices is None else vertices)
    return [b for b in elements if all(crystal.e(b, i) is None for i in verts)]


def check_axioms(crystal, elements: Iterable) -> list[str]:
    """Violations of the upper semi-normal axioms on a finite element set."""
    elements = set(elements)
    d = crystal.diagram
    bad = []
    for b in elements:
        w = crystal.wt(b)
        for i in d.vertices:
            a = d.simple_root(i)
            eps, phi = crystal.eps(b, i), crystal.phi(b, i)
            if phi != eps + d.pairing(w, i):
                bad.append(f"phi/eps/wt mismatch at {b!r}, i={i}")
            y = crystal.e(b, i)
            if y is not None:
                if y not in elements:
                    bad.append(f"e_{i} leaves the set at {b!r}")
                elif crystal.wt(y) != d.add_weights(w, a):
                    bad.append(f"wt(e_{i} b) wrong at {b!r}")
                elif crystal.f(y, i) != b:
                    bad.append(f"f_{i} e_{i} b != b at {b!r}")
            y = crystal.f(b, i)
            if y is not None:
                if y not in elements:
                    bad.append(f"f_{i} leaves the set at {b!r}")
                elif crystal.wt(y) != tuple(p - q for p, q in zip(w, a)):
                    bad.append(f"wt(f_{i} b) wrong at {b!r}")
                elif crystal.e(y, i) != b:
                    bad.append(f"e_{i} f_{i} b != b at {b!r}")
            k, z = 0, b
            while (z := crystal.e(z, i)) is not None:
                k += 1
            if k != eps:
                bad.append(f"eps_{i} is not the e-string length at {b!r}")
    return bad


def crystal_edges(crystal, elements: Iterable) -> list[tuple]:
    """(b, f_i b, i) for all arrows inside ``elements``."""
    elements = set(elements)
    out = []
    for b in elements:
        for i in crystal.vertices:
            y = crystal.f(b, i)
            if y is not None and y in elements:
                out.append((b, y, i))
    return out


def ideal_crystal_ops(heap: Heap, lam: Sequence[int], ideal: int, i: int) -> dict:
    c = IdealCrystal(heap, lam)
    return {"e": c.e(ideal, i), "f": c.f(ideal, i), "eps": c.eps(ideal, i),
            "phi": c.phi(ideal, i), "wt": c.wt(ideal)}


# reverse plane partitions

@dataclass(frozen=True)
class Rpp:
    """Order-reversing map H(w) -> {0..n}; values indexed by canonical bead id."""
    heap: Heap
    values: tuple[int, ...]
    n: int

    def __post_init__(self):
        if len(self.values) != len(self.heap):
            raise CrystalError("value vector does not match the heap size")

    def __hash__(self):
        return hash((self.values, self.n))

    def __eq__(self, other):
        return (isinstance(other, Rpp) and self.values == other.values and self.n == other.n
                and self.heap == other.heap)

    def __getitem__(self, x: int) -> int:
        return self.values[x]

    def is_valid(self) -> bool:
        h = self.heap
        return (all(0 <= v <= self.n for v in self.values)
                and all(self.values[y] >= self.values[x]
                        for x in range(len(h)) for y in h.lower_covers[x]))

    def chain(self) -> tuple[int, ...]:
        return rpp_chain(self)

    def wt(self, lam: Sequence[int]) -> Weight:
        """n lam minus Phi(x) alpha_{runner(x)} summed over the heap."""
        d = self.heap.diagram
        coeffs: dict[int, int] = {}
        for x, v in enumerate(self.values):
            coeffs[self.heap.runner[x]] = coeffs.get(self.heap.runner[x], 0) + v
        return d.sub_roots(tuple(self.n * c for c in lam), coeffs)

    def by_bead(self) -> dict[str, int]:
        return {self.heap.label(x): v for x, v in enumerate(self.values)}


def rpp_chain(phi: Rpp) -> tuple[int, ...]:
    """(phi_1, ..., phi_n) with phi_k = Phi^{-1}({n-k+1, ..., n}) as bitmasks."""
    n = phi.n
    out = []
    for k in range(1, n + 1):
        m = 0
        for x, v in enumerate(phi.values):
            if v >= n - k + 1:
                m |= 1 << x
        out.append(m)
    return tuple(out)


def is_increasing_chain(chain: Sequence[int]) -> bool:
    return all(a & ~b == 0 for a, b in zip(chain, chain[1:]))


def chain_rpp(heap: Heap, chain: Sequence[int]) -> Rpp:
    """Inverse of rpp_chain: Phi(x) = number of k with x in phi_k."""
    chain = tuple(chain)
    if not is_increasing_chain(chain):
        raise CrystalError("chain of ideals is not increasing")
    for m in chain:
        if not heap.is_ideal(m):
            raise CrystalError("chain member is not an order ideal")
    vals = tuple(sum(1 for m in chain if m >> x & 1) for x in range(len(heap)))
    return Rpp(heap, vals, len(chain))


def all_rpps(heap: Heap, n: int) -> Iterator[Rpp]:
    """Every order-reversing map into {0..n}, assigned from the top of the heap down."""
    size = len(heap)
    vals = [0] * size

    def rec(x):
        if x < 0:
            yield Rpp(heap, tuple(vals), n)
            return
        lo = max((vals[z] for z in heap.upper_covers[x]), default=0)
        for v in range(lo, n + 1):
            vals[x] = v
            yield from rec(x - 1)

    yield from rec(size - 1)


class RppCrystal(_Crystal):
    """RPP(w, n) with the crystal structure of B_w(lambda)^{(x) n}, elements are ``Rpp``."""

    def __init__(self, heap: Heap, lam: Sequence[int], n: int):
        self.heap = heap
        self.lam = tuple(lam)
        self.n = n
        self.factor = IdealCrystal(heap, lam)
        self.tensor = TensorCrystal([self.factor] * n)
        self.diagram = heap.diagram

    def _lift(self, b: Rpp) -> tuple:
        return rpp_chain(b)

    def _drop(self, t):
        return None if t is None else chain_rpp(self.heap, t)

    def f(self, b: Rpp, i: int):
        return self._drop(self.tensor.f(self._lift(b), i))

    def e(self, b: Rpp, i: int):
        return self._drop(self.tensor.e(self._lift(b), i))

    def eps(self, b: Rpp, i: int) -> int:
        return self.tensor.eps(self._lift(b), i)

    def phi(self, b: Rpp, i: int) -> int:
        return self.tensor.phi(self._lift(b), i)

    def wt(self, b: Rpp) -> Weight:
        return b.wt(self.lam)

    def highest(self) -> Rpp:
        return Rpp(self.heap, (0,) * len(self.heap), self.n)

    def lowest_candidates(self):
        return Rpp(self.heap, (self.n,) * len(self.heap), self.n)

    def elements(self) -> list[Rpp]:
        return list(all_rpps(self.heap, self.n))


def generate_demazure(d: DynkinDiagram | str, word: Sequence[int] | str, lam: Sequence[int],
                      n: int = 1, limit: int | None = None) -> frozenset[tuple[int, ...]]:
    """B_w(n lambda) inside B_w(lambda)^{(x) n}, as tuples of ideal bitmasks."""
    d = build_diagram(d)
    word = check_reduced(d, parse_word(word))
    heap = build_heap(d, word)
    factor = IdealCrystal(heap, lam)
    tensor = TensorCrystal([factor] * n)
    return demazure(tensor, (0,) * n, heap.word, limit)


@dataclass
class GravsortReport:
    word: tuple[int, ...]
    n: int
    demazure_size: int
    chain_count: int
    equal: bool
    closure_ok: bool
    witness: object = None

    @property
    def ok(self) -> bool:
        return self.equal and self.closure_ok

    def to_json(self) -> dict:
        return {"word": format_word(self.word), "n": self.n, "demazure_size": self.demazure_size,
                "chain_count": self.chain_count, "equal": self.equal,
                "closure_ok": self.closure_ok,
                "witness": None if self.witness is None else repr(self.witness)}


def verify_gravsort(d: DynkinDiagram | str, word: Sequence[int] | str, lam: Sequence[int] | None,
                    n: int) -> GravsortReport:
    """Demazure closure of the highest element versus all increasing chains of ideals."""
    from .weyl import minimal_witness
    d = build_diagram(d)
    word = check_reduced(d, parse_word(word))
    lam = minimal_witness(d, word) if lam is None else tuple(lam)
    heap = build_heap(d, word)
    factor = IdealCrystal(heap, lam)
    tensor = TensorCrystal([factor] * n)
    dem = demazure(tensor, (0,) * n, heap.word)
    chains = {rpp_chain(p) for p in all_rpps(heap, n)}
    witness = None
    equal = dem == chains
    if not equal:
        witness = next(iter(dem ^ chains))
    closure_ok = True
    for c in chains:
        for i in d.vertices:
            for y in (tensor.e(c, i), tensor.f(c, i)):
                if y is not None and not is_increasing_chain(y):
                    closure_ok = False
                    witness = witness or (c, i)
    return GravsortReport(word, n, len(dem), len(chains), equal, closure_ok, witness)


@dataclass
class DemazureTensorReport:
    demazure_of_sum: int          # |B_w(lam + mu)|
    intersection: int             # |B(lam + mu) cap B_w(lam) (x) B_w(mu)|
    component: int                # |B(lam + mu)|

    def to_json(self) -> dict:
        return {"demazure_of_sum": self.demazure_of_sum, "intersection": self.intersection,
                "component": self.component}


def demazure_tensor_comparison(d: DynkinDiagram | str, word: Sequence[int] | str,
                               lam: Sequence[int], mu: Sequence[int]) -> DemazureTensorReport:
    """
    Compare B_w(lam + mu) with B(lam + mu) cap (B_w(lam) (x) B_w(mu)) for
    minuscule lam and mu.  B(lam + mu) is the component of b_lam (x) b_mu.
    """
    from .weyl import minimal_coset_rep
    d = build_diagram(d)
    word = check_reduced(d, parse_word(word))
    factors = []
    for nu in (tuple(lam), tuple(mu)):
        J = {i for i in d.vertices if d.pairing(nu, i) == 0}
        factors.append(IdealCrystal(build_heap(d, minimal_coset_rep(d, J)), nu))
    tensor = TensorCrystal(factors)
    top = (0, 0)
    comp = connected_component(tensor, top)
    dem_sum = demazure(tensor, top, word)
    dem = [demazure(c, 0, word) for c in factors]
    inter = {b for b in comp if b[0] in dem[0] and b[1] in dem[1]}
    return DemazureTensorReport(len(dem_sum), len(inter), len(comp))
