"""
Toggles on order ideals and reverse plane partitions, the runner toggles
t_i, partial Schuetzenberger involutions (the cactus action) and a small
expression language for comparing the two group actions.

Expressions: ``t4 t2 t4`` or ``s2 s1 s12`` or ``s{1,2}``; juxtaposition is
composition and the rightmost factor acts first.  ``s12`` means the subset
{1, 2} (one digit per vertex); use braces for vertices above 9.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .config import DEFAULTS
from .crystal import Rpp, RppCrystal, connected_component
from .dynkin import DynkinDiagram, build_diagram
from .heap import Heap, build_heap
from .tableaux import schuetzenberger
from .weyl import minimal_coset_rep, parabolic_order, theta_involution

__all__ = [
    "ToggleError", "toggle_ideal", "toggle_rpp", "toggle_rpp_by_chain", "runner_toggle",
    "Perm", "ActionContext", "cactus_action", "parse_expression", "evaluate",
    "check_identity", "check_conjectures", "cactus_relation_failures", "IdentityResult",
]


class ToggleError(ValueError):
    pass


def toggle_ideal(h: Heap, mask: int, x: int) -> int:
    """Add or remove x when the result is still an ideal; otherwise unchanged."""
    bit = 1 << x
    if mask & bit:
        return mask & ~bit if not h.above[x] & mask else mask
    return mask | bit if h.below[x] & ~mask == 0 else mask


def toggle_rpp(phi: Rpp, x: int) -> Rpp:
    """
    Reflect Phi(x) inside its admissible interval: the new value is
    max over upper covers (0 if none) + min over lower covers (n if none) - Phi(x).
    """
    h = phi.heap
    lo = max((phi.values[z] for z in h.upper_covers[x]), default=0)
    hi = min((phi.values[y] for y in h.lower_covers[x]), default=phi.n)
    vals = list(phi.values)
    vals[x] = lo + hi - vals[x]
    return Rpp(h, tuple(vals), phi.n)


def toggle_rpp_by_chain(phi: Rpp, x: int) -> Rpp:
    """
    Same toggle computed by toggling every ideal of the increasing chain.
    The toggled ideals need not be nested, so Phi is rebuilt by counting
    memberships rather than through chain_rpp.
    """
    from .crystal import rpp_chain
    h = phi.heap
    chain = [toggle_ideal(h, m, x) for m in rpp_chain(phi)]
    vals = tuple(sum(m >> y & 1 for m in chain) for y in range(len(h)))
    return Rpp(h, vals, phi.n)


def runner_toggle(phi: Rpp, i: int) -> Rpp:
    """t_i: product of t_x over the beads of runner i, applied bottom to top."""
    for x in phi.heap.fibre(i):
        phi = toggle_rpp(phi, x)
    return phi


Perm = dict  # element -> element


@dataclass
class ActionContext:
    """RPP(w_0^J, n) = B(n lambda) with cached toggle and cactus permutations."""
    diagram: DynkinDiagram
    lam: tuple[int, ...]
    n: int
    heap: Heap = field(init=False)
    crystal: RppCrystal = field(init=False)
    elements: list = field(init=False)
    _cache: dict = field(init=False, default_factory=dict)

    def __post_init__(self):
        J = {i for i in self.diagram.vertices if self.diagram.pairing(self.lam, i) == 0}
        self.heap = build_heap(self.diagram, minimal_coset_rep(self.diagram, J))
        self.crystal = RppCrystal(self.heap, self.lam, self.n)
        self.elements = self.crystal.elements()

    def toggle(self, i: int) -> Perm:
        key = ("t", i)
        if key not in self._cache:
            self._cache[key] = {b: runner_toggle(b, i) for b in self.elements}
        return self._cache[key]

    def cactus(self, J: Iterable[int]) -> Perm:
        J = frozenset(J)
        key = ("s", J)
        if key not in self._cache:
            self._cache[key] = cactus_action(self.crystal, self.elements, J)
        return self._cache[key]


def cactus_action(crystal, elements: Iterable, J: Iterable[int],
                  max_order: int | None = None) -> Perm:
    """xi_{B_J}: Schuetzenberger involution on every J-component."""
    d = crystal.diagram
    J = tuple(sorted(set(J), key=d.index))
    if not J or not d.is_connected_subset(J):
        raise ToggleError(f"J = {set(J)} must be a non-empty connected subset")
    cap = DEFAULTS.max_parabolic_order if max_order is None else max_order
    if parabolic_order(d, J) > cap:
        raise ToggleError(f"|W_J| exceeds the cap {cap}")
    elements = list(elements)
    out: Perm = {}
    for b in elements:
        if b in out:
            continue
        comp = connected_component(crystal, b, J)
        out.update(schuetzenberger(crystal, comp, vertices=J))
    return out


_TOKEN = re.compile(r"\s*(?:t(\d+)|s\{([\d,\s]+)\}|s(\d+))")


def parse_expression(expr: str) -> list[tuple[str, object]]:
    """Tokens left to right: ("t", i) or ("s", frozenset)."""
    out = []
    pos = 0
    expr = expr.strip()
    while pos < len(expr):
        m = _TOKEN.match(expr, pos)
        if not m or m.end() == pos:
            raise ToggleError(f"cannot parse expression at {expr[pos:]!r}")
        if m.group(1):
            out.append(("t", int(m.group(1))))
        elif m.group(2):
            out.append(("s", frozenset(int(x) for x in m.group(2).replace(" ", "").split(",") if x)))
        else:
            out.append(("s", frozenset(int(c) for c in m.group(3))))
        pos = m.end()
        while pos < len(expr) and expr[pos] in " *·":
            pos += 1
    if not out:
        raise ToggleError("empty expression")
    return out


def evaluate(ctx: ActionContext, expr: str) -> Perm:
    """Permutation of the elements; the rightmost factor acts first."""
    tokens = parse_expression(expr)
    result = {b: b for b in ctx.elements}
    for kind, arg in reversed(tokens):
        p = ctx.toggle(arg) if kind == "t" else ctx.cactus(arg)
        result = {b: p[y] for b, y in result.items()}
    return result


@dataclass
class IdentityResult:
    lhs: str
    rhs: str
    n: int
    equal: bool
    size: int
    witness: object = None

    def to_json(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "n": self.n,
                "status": "EQUAL" if self.equal else "UNEQUAL", "size": self.size,
                "witness": None if self.witness is None else list(self.witness.values)}


def check_identity(ctx: ActionContext, lhs: str, rhs: str) -> IdentityResult:
    a, b = evaluate(ctx, lhs), evaluate(ctx, rhs)
    bad = next((x for x in ctx.elements if a[x] != b[x]), None)
    return IdentityResult(lhs, rhs, ctx.n, bad is None, len(ctx.elements), bad)


def _spin_identities(m: int) -> list[tuple[str, str]]:
    def s(vs):
        return "s{" + ",".join(str(v) for v in vs) + "}"
    out = [("t1", "s{1}"), ("t2", "s{1} s{1,2} s{1}")]
    for k in range(3, m - 1):
        out.append((f"t{k}", " ".join([s(range(1, k)), s(range(1, k + 1)),
                                        s(range(1, k)), s(range(1, k - 1))])))
    return out


def check_conjectures(d: DynkinDiagram | str, lam: Sequence[int], n_max: int,
                      identities: Sequence[tuple[str, str]] | None = None) -> list[IdentityResult]:
    """
    Instance-level comparisons of toggle and cactus words.  Nothing is
    asserted; each identity is reported EQUAL or UNEQUAL per n.
    """
    d = build_diagram(d)
    lam = tuple(lam)
    if identities is None:
        identities = []
        kind = d.name[:1] if d.name else ""
        m = d.rank
        if kind == "D" and lam == d.fundamental_weight(1):
            identities = [("t3", "s3"), ("t4", "s4"), ("t1", "s1"), ("t1", "s2 s1 s12"),
                          ("t4 t2 t4 t2 t4", "s2")]
        elif kind == "D" and lam in (d.fundamental_weight(m - 1), d.fundamental_weight(m)):
            identities = _spin_identities(m)
    out = []
    for n in range(1, n_max + 1):
        ctx = ActionContext(d, lam, n)
        for lhs, rhs in identities:
            out.append(check_identity(ctx, lhs, rhs))
    return out


def _connected_subsets(d: DynkinDiagram) -> list[frozenset[int]]:
    out = []
    verts = d.vertices
    for r in range(1, len(verts) + 1):
        for c in combinations(verts, r):
            if d.is_connected_subset(c):
                out.append(frozenset(c))
    return out


def cactus_relation_failures(ctx: ActionContext) -> list[str]:
    """Check the three cactus relations for all connected subsets."""
    d = ctx.diagram
    subs = _connected_subsets(d)
    els = ctx.elements

    def comp(p, q):  # p after q
        return {b: p[q[b]] for b in els}

    bad = []
    for J in subs:
        sJ = ctx.cactus(J)
        if any(sJ[sJ[b]] != b for b in els):
            bad.append(f"s_{sorted(J)} is not an involution")
        theta = theta_involution(d, J)
        for K in subs:
            sK = ctx.cactus(K)
            if K <= J:
                tK = frozenset(theta[k] for k in K)
                if comp(sJ, sK) != comp(ctx.cactus(tK), sJ):
                    bad.append(f"relation 2 fails for J={sorted(J)}, J'={sorted(K)}")
            if not d.is_connected_subset(J | K):
                if comp(sJ, sK) != comp(sK, sJ):
                    bad.append(f"relation 3 fails for {sorted(J)}, {sorted(K)}")
    return bad
