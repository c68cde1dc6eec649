"""
Submodules of CH(w)^{(+)n}: the coordinate filtration, the Jordan-type map
Phi_M, sampling from Z(Phi)°, the conditions C1/C2, the main-theorem sweep
and the type A comparison with Springer fibres.

Copies are numbered 1..n; copy k of the ambient is CH(w) in coordinates
(k-1)*v_i + s-1 at vertex i (see ``preproj``).
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .config import DEFAULTS, Bounds, derive_seed
from .crystal import Rpp, RppCrystal, all_rpps, crystal_isomorphism, rpp_chain
from .heap import Heap, bits, order_ideals
from .linalg import in_span, nullspace, rank, rref, restrict_to_zero_coords, vec_mat
from .preproj import (HeapModule, ModuleError, Submodule, build_heap_module,
                      ideal_submodule, socle_dim_matrix)
from .tableaux import (GtPattern, Tableau, rectangle_heap, rectangular_tableau_of_rpp,
                       schuetzenberger, TableauCrystal, all_ssyt, tableau_of_gt)
from .weyl import format_word

__all__ = [
    "Filtration", "filtration", "kernel_dim", "phi_of_module", "endomorphisms",
    "sample_z_phi", "SamplingError", "check_c1_c2", "c1_c2_all", "lemma_identity",
    "MainTheoremReport", "verify_main_theorem", "springer_flag", "psi_of_flag",
    "SpringerReport", "springer_compare", "example_jfilt", "example_jfilt_counter",
    "random_submodule", "random_rpp", "C1C2Report", "c1_c2_campaign",
]


class SamplingError(RuntimeError):
    pass


def _copy_coords(v: int, n: int, keep: Iterable[int]) -> list[int]:
    """Coordinates outside the given copies (1-based) at a vertex of fibre size v."""
    keep = set(keep)
    return [c for c in range(n * v) if c // v + 1 not in keep]


def _below(M: Submodule, k: int) -> Submodule:
    """M^{<=k} = M intersected with the first k copies."""
    if k <= 0:
        return Submodule.zero(M.module, M.n)
    if k >= M.n:
        return M
    blocks = {}
    for i, b in M.blocks.items():
        v = M.module.dim_vector[i]
        blocks[i] = restrict_to_zero_coords(b, _copy_coords(v, M.n, range(1, k + 1)), M.n * v)
    return Submodule(M.module, M.n, blocks)


def _project(M: Submodule, k: int) -> Submodule:
    """Image of M in copy k, as a submodule of CH(w)."""
    blocks = {}
    for i, b in M.blocks.items():
        v = M.module.dim_vector[i]
        rows = [r[(k - 1) * v:k * v] for r in b]
        rows = [r for r in rows if any(r)]
        blocks[i] = rref(rows, v)[0] if rows else ()
    return Submodule(M.module, 1, blocks)


def _mask_of_coordinate(S: Submodule) -> int | None:
    if S.n != 1 or not S.is_coordinate():
        return None
    h = S.module.heap
    mask = 0
    for i, b in S.blocks.items():
        fib = h.fibre(i)
        for r in b:
            mask |= 1 << fib[next(c for c, x in enumerate(r) if x)]
    return mask


@dataclass
class Filtration:
    levels: list[Submodule]          # M^{<=0}, ..., M^{<=n}
    quotients: list[Submodule]       # M^1, ..., M^n inside CH(w)
    ideals: list[int | None]         # bead masks of coordinate subquotients

    def is_increasing(self) -> bool:
        """Membership in U: M^k contained in M^{k+1}."""
        for a, b in zip(self.quotients, self.quotients[1:]):
            for i, rows in a.blocks.items():
                if any(not b.contains(i, r) for r in rows):
                    return False
        return True


def filtration(M: Submodule) -> Filtration:
    if "filtration" in M.memo:
        return M.memo["filtration"]
    levels = [_below(M, k) for k in range(M.n + 1)]
    for L in levels:
        if not L.is_closed():
            raise AssertionError("filtration step is not a submodule")
    quotients = [_project(levels[k], k) for k in range(1, M.n + 1)]
    for Q, L, Lp in zip(quotients, levels[1:], levels):
        if Q.dim != L.dim - Lp.dim:
            raise AssertionError("subquotient dimension mismatch")
    out = Filtration(levels, quotients, [_mask_of_coordinate(Q) for Q in quotients])
    M.memo["filtration"] = out
    return out


def kernel_dim(M: Submodule, i: int, s: int) -> int:
    """dim(M_i intersected with ker A_i^s)."""
    b = M.block(i)
    if s <= 0 or not b:
        return 0
    v = M.module.dim_vector[i]
    zero = [c for c in range(M.n * v) if c % v >= s]
    return len(restrict_to_zero_coords(b, zero, M.n * v))


def phi_of_module(M: Submodule) -> tuple[Rpp, bool]:
    """Phi_M(x_i^s) = dim(ker A^s cap M_i) - dim(ker A^{s-1} cap M_i), with a validity flag."""
    h = M.module.heap
    vals = [0] * len(h)
    for i in h.diagram.vertices:
        prev = 0
        for s, x in enumerate(h.fibre(i), start=1):
            cur = kernel_dim(M, i, s)
            vals[x] = cur - prev
            prev = cur
    phi = Rpp(h, tuple(vals), M.n)
    return phi, phi.is_valid()


# endomorphisms and sampling

def endomorphisms(module: HeapModule) -> list[dict[int, list[list[Fraction]]]]:
    """Basis of End(CH(w)): graded maps h with h_j M_a = M_a h_i for every arrow a = (i -> j)."""
    key = ("end",)
    if key in module._cache:
        return module._cache[key]
    dims = module.dim_vector
    offset, total = {}, 0
    for i in module.diagram.vertices:
        offset[i] = total
        total += dims[i] * dims[i]

    def var(i, r, c):
        return offset[i] + r * dims[i] + c

    eqs = []
    for (i, j) in module.orientation.doubled:
        mat = module.arrows[(i, j)]
        for r in range(dims[j]):
            for c in range(dims[i]):
                row = [0] * total
                for t in range(dims[j]):       # (h_j M_a)[r, c]
                    if mat[t, c]:
                        row[var(j, r, t)] += int(mat[t, c])
                for t in range(dims[i]):       # (M_a h_i)[r, c]
                    if mat[r, t]:
                        row[var(i, t, c)] -= int(mat[r, t])
                if any(row):
                    eqs.append(row)
    basis = []
    for vec in nullspace(eqs, total):
        hom = {}
        for i in module.diagram.vertices:
            v = dims[i]
            hom[i] = [[vec[var(i, r, c)] for c in range(v)] for r in range(v)]
        basis.append(hom)
    module._cache[key] = basis
    return basis


def _random_endo(module: HeapModule, rng: random.Random, coeff: int) -> dict[int, list[list]]:
    basis = endomorphisms(module)
    dims = module.dim_vector
    out = {i: [[Fraction(0)] * dims[i] for _ in range(dims[i])] for i in dims}
    for b in basis:
        c = rng.randint(-coeff, coeff)
        if c:
            for i, mat in b.items():
                for r, row in enumerate(mat):
                    for k, x in enumerate(row):
                        if x:
                            out[i][r][k] += c * x
    return out


def sample_z_phi(module: HeapModule, phi: Rpp, seed: int,
                 bounds: Bounds = DEFAULTS) -> Submodule:
    """
    A point of Z(Phi)°: the sum over k of the images of C phi^k under the
    column maps (h_{1k}, ..., h_{k-1,k}, id, 0, ..., 0) with random
    endomorphisms h_{jk}.  The subquotients are checked to be exactly phi^k.
    """
    h = module.heap
    n = phi.n
    chain = rpp_chain(phi)
    rng = random.Random(seed)
    dims = module.dim_vector
    for _ in range(bounds.retry_budget):
        blocks: dict[int, list] = {i: [] for i in dims}
        for k in range(1, n + 1):
            homs = {j: _random_endo(module, rng, bounds.coeff_range) for j in range(1, k)}
            for x in bits(chain[k - 1]):
                i, s = h.runner[x], h.height[x] - 1
                v = dims[i]
                row = [Fraction(0)] * (n * v)
                for j, hom in homs.items():
                    for r in range(v):
                        row[(j - 1) * v + r] = hom[i][r][s]
                row[(k - 1) * v + s] = Fraction(1)
                blocks[i].append(tuple(row))
        M = Submodule(module, n, blocks)
        if not M.is_closed():
            raise AssertionError("sampled subspace is not a submodule")
        if filtration(M).ideals == list(chain):
            return M
    raise SamplingError(f"no point of Z(Phi)° for Phi={phi.values} after "
                        f"{bounds.retry_budget} draws (seed {seed})")


def random_submodule(module: HeapModule, n: int, rng: random.Random, gens: int = 2,
                     coeff: int = 2, sparsity: float = 0.5) -> Submodule:
    """Submodule generated by a few random homogeneous vectors (not restricted to U)."""
    dims = [i for i, v in module.dim_vector.items() if v]
    blocks: dict[int, list] = {}
    for _ in range(gens):
        i = rng.choice(dims)
        width = n * module.dim_vector[i]
        row = tuple(Fraction(rng.randint(-coeff, coeff)) if rng.random() < sparsity else Fraction(0)
                    for _ in range(width))
        if any(row):
            blocks.setdefault(i, []).append(row)
    return Submodule.generated(module, n, blocks)


# conditions C1, C2 and the dimension identity

def _shift_rows(rows: Sequence[Sequence], v: int, n: int, s: int) -> list[tuple]:
    out = []
    for r in rows:
        img = [Fraction(0)] * (n * v)
        for k in range(n):
            for t in range(s, v):
                img[k * v + t - s] = r[k * v + t]
        out.append(tuple(img))
    return out


def _escapes(X: Sequence, Y: Sequence, v: int, n: int, s: int) -> bool:
    """Is there m in X with A^s m outside Y?"""
    img = [r for r in _shift_rows(X, v, n, s) if any(r)]
    if not img:
        return False
    return rank(list(Y) + img) > len(Y)


def check_c1_c2(M: Submodule, i: int, k: int, s: int, filt: Filtration | None = None
                ) -> tuple[bool, bool]:
    """Truth values of C1(i,k,s) and C2(i,k,s); M^{<=j} = 0 for j <= 0."""
    filt = filtration(M) if filt is None else filt
    v = M.module.dim_vector[i]
    n = M.n

    def lev(j):
        return filt.levels[j].block(i) if j >= 1 else ()

    concl = _escapes(lev(k), lev(k - 1), v, n, s) if k >= 1 else False
    c1 = (not _escapes(lev(k - 1), lev(k - 2), v, n, s)) or concl if k >= 1 else True
    c2 = (not _escapes(lev(k), (), v, n, s)) or concl if k >= 1 else True
    return c1, c2


def c1_c2_all(M: Submodule, filt: Filtration | None = None) -> tuple[bool, bool, list]:
    """C1 and C2 over all (i, k, s); the list holds (i, k, s) where C1 holds and C2 fails."""
    filt = filtration(M) if filt is None else filt
    c1_all = c2_all = True
    bad = []
    for i, v in M.module.dim_vector.items():
        if not v:
            continue
        for k in range(M.n + 1):
            for s in range(v + 1):
                c1, c2 = check_c1_c2(M, i, k, s, filt)
                c1_all &= c1
                c2_all &= c2
                if c2 and not c1:
                    raise AssertionError("C2 holds but C1 fails, impossible")
                if c1 and not c2:
                    bad.append((i, k, s))
    return c1_all, c2_all, bad


def lemma_identity(M: Submodule, filt: Filtration | None = None) -> dict:
    """(i, s) -> (dim(M_i cap ker A^s), sum_k dim(M^k_i cap ker A^s))."""
    filt = filtration(M) if filt is None else filt
    out = {}
    for i, v in M.module.dim_vector.items():
        for s in range(1, v + 1):
            out[(i, s)] = (kernel_dim(M, i, s), sum(kernel_dim(Q, i, s) for Q in filt.quotients))
    return out


# main theorem sweep

@dataclass
class MainTheoremReport:
    word: str
    type: str
    n: int
    rpps: int
    samples: int
    failures: list = field(default_factory=list)
    runtime_ms: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"type": self.type, "word": self.word, "n": self.n, "rpps": self.rpps,
                "samples": self.samples, "status": "PASS" if self.ok else "FAIL",
                "failures": self.failures[:20], "runtime_ms": self.runtime_ms}


def check_sample(M: Submodule, phi: Rpp) -> list[str]:
    """Every assertion of the main theorem for one point M of Z(Phi)°."""
    problems = []
    h = M.module.heap
    filt = filtration(M)
    if filt.ideals != list(rpp_chain(phi)):
        problems.append("subquotients differ from the chain of Phi")
    got, valid = phi_of_module(M)
    if got.values != phi.values:
        problems.append(f"Phi_M = {got.values}")
    for i in h.diagram.vertices:
        total = 0
        for s, x in enumerate(h.fibre(i), start=1):
            total += phi.values[x]
            if kernel_dim(M, i, s) != total:
                problems.append(f"dimension identity fails at ({i}, {s})")
    sd = socle_dim_matrix(M)
    if sd.on_heap() != phi.values:
        problems.append(f"SD_M on the heap = {sd.on_heap()}")
    if sd.outside():
        problems.append(f"SD_M nonzero outside the heap: {sd.outside()}")
    for key, (a, b) in lemma_identity(M, filt).items():
        if a != b:
            problems.append(f"subquotient kernel sum differs at {key}: {a} vs {b}")
    return problems


def verify_main_theorem(d, word=None, n: int = 1, seeds: int = 5, root_seed: int = 0,
                        module: HeapModule | None = None,
                        bounds: Bounds = DEFAULTS) -> MainTheoremReport:
    """Sample Z(Phi)° for every Phi in RPP(w, n) and check Phi_M = Phi, SD_M = Phi and the rest."""
    t0 = time.perf_counter()
    module = build_heap_module(d, word) if module is None else module
    h = module.heap
    rep = MainTheoremReport(format_word(h.word), h.diagram.name, n, 0, 0)
    images = {}
    for phi in all_rpps(h, n):
        rep.rpps += 1
        for t in range(seeds):
            seed = derive_seed(f"main/{h.diagram.name}/{format_word(h.word)}/{n}/{phi.values}/{t}",
                               root_seed)
            try:
                M = sample_z_phi(module, phi, seed, bounds)
            except SamplingError as exc:
                rep.failures.append({"phi": list(phi.values), "seed": seed, "error": str(exc)})
                continue
            rep.samples += 1
            for p in check_sample(M, phi):
                rep.failures.append({"phi": list(phi.values), "seed": seed, "error": p})
            images.setdefault(phi_of_module(M)[0].values, set()).add(phi.values)
    if any(len(v) > 1 for v in images.values()):
        rep.failures.append({"error": "two RPPs share a sampled image"})
    rep.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return rep


# type A Springer comparison

def _left_power(module: HeapModule, start: int, steps: int) -> list[list[int]]:
    """Matrix of L^steps from vertex ``start`` (left-going arrows j -> j-1)."""
    walk = list(range(start, start - steps - 1, -1))
    return module.path_matrix(walk).tolist()


def _kron_rows(mat: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    rows, cols = len(mat), (len(mat[0]) if mat else 0)
    out = [[0] * (n * cols) for _ in range(n * rows)]
    for k in range(n):
        for r in range(rows):
            for c in range(cols):
                out[k * rows + r][k * cols + c] = mat[r][c]
    return out


def springer_flag(M: Submodule, m: int, p: int) -> list[list[tuple]]:
    """
    V_i inside CH(w)_p^{(+)n} for i = 0..m: the image L^{m-p-i}(M_{m-i}) when
    i <= m-p and the preimage of M_{m-i} under L^{i-m+p} otherwise.
    """
    module, n = M.module, M.n
    N = n * module.dim_vector[p]
    flag = [[]]
    for i in range(1, m):
        src = m - i
        if i <= m - p:
            L = _kron_rows(_left_power(module, src, m - p - i), n)
            imgs = [tuple(sum(L[r][c] * b[c] for c in range(len(b)) if L[r][c] and b[c])
                          for r in range(N)) for b in M.block(src)]
            imgs = [x for x in imgs if any(x)]
            flag.append(rref(imgs, N)[0] if imgs else [])
        else:
            L = _kron_rows(_left_power(module, p, i - m + p), n)   # C^N -> vertex src
            width = n * module.dim_vector[src]
            ann = nullspace(M.block(src), width) if M.block(src) else \
                [tuple(int(a == b) for b in range(width)) for a in range(width)]
            eqs = [vec_mat(a, L) for a in ann]
            eqs = [e for e in eqs if any(e)]
            basis = nullspace(eqs, N) if eqs else \
                [tuple(int(a == b) for b in range(N)) for a in range(N)]
            flag.append(rref(basis, N)[0] if basis else [])
    flag.append(rref([tuple(int(a == b) for b in range(N)) for a in range(N)], N)[0])
    return flag


def psi_of_flag(flag: Sequence[Sequence], p: int, n: int, m: int) -> Tableau:
    """Tableau whose labels <= i fill the transpose of the Jordan type of A_p on V_i."""
    rows = []
    for i in range(1, m + 1):
        V = flag[i]
        dims = []
        for s in range(0, p + 1):
            zero = [c for c in range(n * p) if c % p >= s]
            dims.append(len(restrict_to_zero_coords(V, zero, n * p)) if V else 0)
        conj = [dims[s] - dims[s - 1] for s in range(1, p + 1)]
        rows.append(tuple((conj + [0] * i)[:i]))
    return tableau_of_gt(GtPattern(tuple(rows)))


def _pivots(rows) -> list[int]:
    return [next(c for c, x in enumerate(r) if x) for r in rows]


def _flag_is_stable(flag, p: int, n: int) -> bool:
    """Nested, and A V_i inside V_{i-1}."""
    for lo, hi in zip(flag, flag[1:]):
        if any(not in_span(hi, _pivots(hi), r) for r in lo):
            return False
        for r in hi:
            shifted = _shift_rows([r], p, n, 1)[0]
            if any(shifted) and not in_span(lo, _pivots(lo), shifted):
                return False
    return True


@dataclass
class SpringerReport:
    m: int
    p: int
    n: int
    checked: int = 0
    failures: list = field(default_factory=list)
    runtime_ms: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures and self.checked > 0

    def to_json(self) -> dict:
        return {"m": self.m, "p": self.p, "n": self.n, "checked": self.checked,
                "status": "PASS" if self.ok else "FAIL", "failures": self.failures[:20],
                "runtime_ms": self.runtime_ms}


def springer_compare(m: int, p: int, n: int, seeds: int = 10, root_seed: int = 0,
                     exhaustive: bool | None = None) -> SpringerReport:
    """
    For points M of the quiver Grassmannian compare the flag tableau Psi_V
    with the tableau of Phi_M in two ways: Psi_V is the Schuetzenberger image
    of kappa(Phi_M), where kappa is the crystal isomorphism RPP(w, n) -> SSYT(n^p),
    and Psi_V equals the reflect-and-rotate preimage of Phi_M.  With n = 1
    every submodule (one per order ideal) is checked; otherwise each RPP
    contributes ``seeds`` sampled points of Z(Phi)°.
    """
    if not 1 <= p <= m // 2:
        raise ModuleError("need 1 <= p <= m/2")
    t0 = time.perf_counter()
    heap = rectangle_heap(m, p)
    module = build_heap_module(heap, unsigned_linear=True)
    tcrys = TableauCrystal(m)
    shape = tuple([n] * p)
    elements = list(all_ssyt(shape, m))
    xi = schuetzenberger(tcrys, elements)
    lam = heap.diagram.fundamental_weight(p)
    rcrys = RppCrystal(heap, lam, n)
    highest_tab = Tableau(tuple(tuple([r + 1] * n) for r in range(p)), m)
    kappa = crystal_isomorphism(rcrys, rcrys.highest(), tcrys, highest_tab)
    if len(kappa) != len(elements):
        raise AssertionError("RPP crystal and tableau crystal have different sizes")
    rep = SpringerReport(m, p, n)
    exhaustive = (n == 1) if exhaustive is None else exhaustive
    points = []
    if exhaustive and n == 1:
        points = [(ideal_submodule(module, mask), None) for mask in order_ideals(heap)]
    else:
        for phi in all_rpps(heap, n):
            for t in range(seeds):
                seed = derive_seed(f"springer/{m}/{p}/{n}/{phi.values}/{t}", root_seed)
                points.append((sample_z_phi(module, phi, seed), seed))
    for M, seed in points:
        rep.checked += 1
        flag = springer_flag(M, m, p)
        if not _flag_is_stable(flag, p, n):
            raise AssertionError("flag is not A-stable")
        psi = psi_of_flag(flag, p, n, m)
        phi, _ = phi_of_module(M)
        twisted = xi[kappa[phi]]
        direct = rectangular_tableau_of_rpp(phi, m, p)
        if psi != twisted or psi != direct:
            rep.failures.append({"phi": list(phi.values), "seed": seed, "psi": psi.to_json(),
                                 "xi_kappa": twisted.to_json(), "direct": direct.to_json()})
    rep.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return rep


# worked examples on the A3 diamond

def _diamond(n: int):
    module = build_heap_module("A3", "2,3,1,2")
    h = module.heap
    names = {"v1": h.bead(2, 1), "v2": h.bead(2, 2), "u": h.bead(1, 1), "w": h.bead(3, 1)}
    return module, names


def example_jfilt() -> Submodule:
    """The three-copy example; its last generator is 3w^3 + 2w^2 + w^1."""
    module, b = _diamond(3)
    vecs = [
        {(b["u"], 1): 1, (b["u"], 2): 1, (b["u"], 3): 1},
        {(b["v1"], 1): 1}, {(b["v1"], 2): 1}, {(b["v1"], 3): 1},
        {(b["v2"], 1): 1, (b["v2"], 2): 1, (b["v2"], 3): 1},
        {(b["w"], 1): 1, (b["w"], 2): 1, (b["w"], 3): 1},
        {(b["w"], 3): 3, (b["w"], 2): 2, (b["w"], 1): 1},
    ]
    return Submodule.span(module, 3, vecs)


def example_jfilt_counter() -> Submodule:
    """span(u^1, v_1^2 + v_2^1, v_1^1, w^1) in two copies."""
    module, b = _diamond(2)
    vecs = [{(b["u"], 1): 1}, {(b["v1"], 2): 1, (b["v2"], 1): 1},
            {(b["v1"], 1): 1}, {(b["w"], 1): 1}]
    return Submodule.span(module, 2, vecs)


# C1 => C2 campaign

def random_rpp(heap: Heap, n: int, rng: random.Random) -> Rpp:
    """A random order-reversing map, assigned from the top of the heap down."""
    vals = [0] * len(heap)
    for x in range(len(heap) - 1, -1, -1):
        lo = max((vals[z] for z in heap.upper_covers[x]), default=0)
        vals[x] = rng.randint(lo, n)
    return Rpp(heap, tuple(vals), n)


@dataclass
class C1C2Report:
    instances: int = 0
    c1: int = 0
    c2: int = 0
    sampled: int = 0
    arbitrary: int = 0
    fixture: int = 0
    by_type: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    runtime_ms: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, M: Submodule, label: str, kind: str) -> None:
        c1, c2, _ = c1_c2_all(M)
        self.instances += 1
        self.c1 += c1
        self.c2 += c2
        setattr(self, kind, getattr(self, kind) + 1)
        t = M.module.diagram.name
        self.by_type[t] = self.by_type.get(t, 0) + 1
        if c1 and not c2:
            self.violations.append({"module": label, "submodule": M.to_json()})

    def to_json(self) -> dict:
        return {"instances": self.instances, "c1": self.c1, "c2": self.c2,
                "sampled": self.sampled, "arbitrary": self.arbitrary, "fixture": self.fixture,
                "by_type": self.by_type,
                "status": "PASS" if self.ok else "FAIL", "violations": self.violations[:10],
                "runtime_ms": self.runtime_ms}


def c1_c2_campaign(modules: Sequence[HeapModule], instances: int, seed: int = 0,
                   n_max: int = 3) -> C1C2Report:
    """
    Check C1 => C2 on ``instances`` submodules: alternately a sampled point of
    some Z(Phi)° and a submodule generated by random vectors, over the given
    modules in round-robin order.
    """
    t0 = time.perf_counter()
    rep = C1C2Report()
    rng = random.Random(seed)
    for t in range(instances):
        mod = modules[t % len(modules)]
        n = rng.randint(1, n_max)
        label = f"{mod.diagram.name}:{format_word(mod.heap.word)}:n={n}"
        if t % 2 == 0:
            M = sample_z_phi(mod, random_rpp(mod.heap, n, rng), rng.randrange(2 ** 63))
            rep.record(M, label, "sampled")
        else:
            M = random_submodule(mod, n, rng, gens=rng.randint(1, 3))
            rep.record(M, label, "arbitrary")
    rep.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return rep
