"""
Weyl group elements handled through reduced words.

An element w is identified by the weight ``w(rho)`` (fundamental-weight
coordinates), which determines w uniquely and encodes its inversion set:
``s_i w < w`` exactly when the i-th coordinate of ``w(rho)`` is negative.
Left and right multiplication by simple reflections are then weight
reflections, so no normal-form machinery is needed.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .config import DEFAULTS
from .dynkin import DynkinDiagram, Weight

__all__ = [
    "WordError", "CosetData", "parse_word", "format_word", "act", "element_key",
    "inverse_key", "is_reduced", "check_reduced", "length", "left_descents",
    "right_descents", "inversion_set", "positive_roots", "reduced_words",
    "commutation_class", "is_fully_commutative", "is_lambda_minuscule",
    "is_minuscule", "is_dominant_minuscule", "minimal_witness", "witnesses",
    "minimal_coset_rep", "longest_element", "weak_order_below", "coset_data",
    "reflect_root", "theta_involution", "weyl_dimension", "parabolic_order",
    "dominant_minuscule_words",
]


class WordError(ValueError):
    pass


def parse_word(text: str | Sequence[int]) -> tuple[int, ...]:
    """``"3,4,2"`` -> ``(3, 4, 2)``; the empty string is the empty word."""
    if not isinstance(text, str):
        return tuple(int(x) for x in text)
    text = text.strip().strip("()[]")
    if not text:
        return ()
    return tuple(int(x) for x in text.replace(" ", ",").split(",") if x)


def format_word(word: Sequence[int]) -> str:
    return ",".join(str(i) for i in word)


def _check_letters(d: DynkinDiagram, word: Sequence[int]):
    for i in word:
        if i not in d._pos:
            raise WordError(f"letter {i} is not a vertex of {d.name or 'the diagram'}")


def act(d: DynkinDiagram, word: Sequence[int], lam: Sequence[int]) -> Weight:
    """s_{i_1} ... s_{i_l} lam (rightmost letter acts first)."""
    mu = tuple(lam)
    for i in reversed(word):
        mu = d.reflect(mu, i)
    return mu


def element_key(d: DynkinDiagram, word: Sequence[int]) -> Weight:
    """w(rho): a complete invariant of the group element."""
    return act(d, word, d.rho())


def inverse_key(d: DynkinDiagram, word: Sequence[int]) -> Weight:
    """w^{-1}(rho)."""
    mu = d.rho()
    for i in word:
        mu = d.reflect(mu, i)
    return mu


def is_reduced(d: DynkinDiagram, word: Sequence[int]) -> bool:
    """Each letter, read right to left, must increase length: <alpha_i^vee, v rho> > 0."""
    _check_letters(d, word)
    mu = d.rho()
    for i in reversed(word):
        if d.pairing(mu, i) <= 0:
            return False
        mu = d.reflect(mu, i)
    return True


def check_reduced(d: DynkinDiagram, word: Sequence[int]) -> tuple[int, ...]:
    word = tuple(word)
    if not is_reduced(d, word):
        raise WordError(f"word ({format_word(word)}) is not reduced")
    return word


def length(d: DynkinDiagram, key: Sequence[int]) -> int:
    """Length of the element with w(rho) = key: number of positive roots sent negative."""
    return sum(1 for beta in positive_roots(d)
               if sum(b * x for b, x in zip(beta, key)) < 0)


def left_descents(d: DynkinDiagram, word: Sequence[int]) -> set[int]:
    key = element_key(d, word)
    return {i for i in d.vertices if d.pairing(key, i) < 0}


def right_descents(d: DynkinDiagram, word: Sequence[int]) -> set[int]:
    key = inverse_key(d, word)
    return {i for i in d.vertices if d.pairing(key, i) < 0}


def reflect_root(d: DynkinDiagram, beta: Sequence[int], i: int) -> tuple[int, ...]:
    """s_i beta for beta in simple-root coordinates."""
    k = d.index(i)
    c = sum(int(d.cartan[k, j]) * b for j, b in enumerate(beta))
    out = list(beta)
    out[k] -= c
    return tuple(out)


_ROOT_CACHE: dict[DynkinDiagram, list[tuple[int, ...]]] = {}


def positive_roots(d: DynkinDiagram) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates, sorted by height then lexicographically."""
    if d in _ROOT_CACHE:
        return _ROOT_CACHE[d]
    simple = [tuple(int(k == j) for j in range(d.rank)) for k in range(d.rank)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in d.vertices:
            gamma = reflect_root(d, beta, i)
            if all(x >= 0 for x in gamma) and gamma not in seen:
                seen.add(gamma)
                queue.append(gamma)
    roots = sorted(seen, key=lambda b: (sum(b), tuple(-x for x in b)))
    _ROOT_CACHE[d] = roots
    return roots


def inversion_set(d: DynkinDiagram, word: Sequence[int]) -> frozenset[tuple[int, ...]]:
    """{beta > 0 : w^{-1} beta < 0} = {s_{i_1} ... s_{i_{k-1}} alpha_{i_k}}."""
    word = check_reduced(d, word)
    out = set()
    for k, i in enumerate(word):
        beta = tuple(int(j == d.index(i)) for j in range(d.rank))
        for m in reversed(word[:k]):
            beta = reflect_root(d, beta, m)
        out.add(beta)
    return frozenset(out)


def reduced_words(d: DynkinDiagram, max_len: int, min_len: int = 0
                  ) -> Iterator[tuple[int, ...]]:
    """All reduced words of length in [min_len, max_len], depth first."""
    verts = d.vertices
    rows = {i: d.simple_root(i) for i in verts}
    pos = d._pos

    def rec(word, x):
        if len(word) >= min_len:
            yield word
        if len(word) == max_len:
            return
        for i in verts:
            c = x[pos[i]]
            if c > 0:  # w s_i > w
                yield from rec(word + (i,), tuple(a - c * b for a, b in zip(x, rows[i])))

    yield from rec((), d.rho())


def commutation_class(d: DynkinDiagram, word: Sequence[int],
                      limit: int | None = None) -> set[tuple[int, ...]]:
    """All words reachable by swapping adjacent commuting letters."""
    start = tuple(word)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for k in range(len(w) - 1):
            a, b = w[k], w[k + 1]
            if a != b and d.commute(a, b):
                v = w[:k] + (b, a) + w[k + 2:]
                if v not in seen:
                    seen.add(v)
                    if limit is not None and len(seen) > limit:
                        raise WordError("commutation class exceeds the enumeration bound")
                    queue.append(v)
    return seen


def _has_braid(d: DynkinDiagram, w: Sequence[int]) -> bool:
    return any(w[k] == w[k + 2] and d.adjacent(w[k], w[k + 1]) for k in range(len(w) - 2))


def _fc_by_convex_chains(d: DynkinDiagram, word: Sequence[int]) -> bool:
    # Braid-free heap criterion: between two consecutive occurrences of i the
    # heap interval must not be a single element on an adjacent runner.
    n = len(word)
    below = [set() for _ in range(n)]  # positions strictly below (to the right)
    for a in range(n - 1, -1, -1):
        for b in range(a + 1, n):
            if d.adjacent(word[a], word[b]) or word[a] == word[b]:
                below[a] |= below[b] | {b}
    for a in range(n):
        nxt = next((b for b in range(a + 1, n) if word[b] == word[a]), None)
        if nxt is None:
            continue
        between = [c for c in below[a] if nxt in below[c]]
        if len(between) == 1 and d.adjacent(word[between[0]], word[a]):
            return False
    return True


def is_fully_commutative(d: DynkinDiagram, word: Sequence[int],
                         class_limit: int = 20000) -> bool:
    """No word in the commutation class contains a braid factor i j i (i, j adjacent)."""
    word = check_reduced(d, word)
    if len(word) <= 12:
        try:
            return not any(_has_braid(d, v) for v in commutation_class(d, word, class_limit))
        except WordError:
            pass
    return _fc_by_convex_chains(d, word)


def is_lambda_minuscule(d: DynkinDiagram, word: Sequence[int], lam: Sequence[int]) -> bool:
    """<alpha_{i_k}^vee, s_{i_{k+1}} ... s_{i_l} lam> = 1 for every k."""
    mu = tuple(lam)
    for i in reversed(word):
        if d.pairing(mu, i) != 1:
            return False
        mu = d.reflect(mu, i)
    return True


def _between_counts(d: DynkinDiagram, word: Sequence[int]):
    """For each occurrence, the number of non-commuting letters before the next occurrence."""
    n = len(word)
    out = []
    for a in range(n):
        i = word[a]
        count, closed = 0, False
        for b in range(a + 1, n):
            if word[b] == i:
                closed = True
                break
            if d.adjacent(i, word[b]):
                count += 1
        out.append((i, count, closed))
    return out


def is_minuscule(d: DynkinDiagram, word: Sequence[int]) -> bool:
    """Exactly two non-commuting letters between consecutive occurrences of each letter."""
    word = check_reduced(d, word)
    return all(c == 2 for _, c, closed in _between_counts(d, word) if closed)


def is_dominant_minuscule(d: DynkinDiagram, word: Sequence[int]) -> bool:
    """Minuscule, and each last occurrence is followed by at most one non-commuting letter."""
    word = check_reduced(d, word)
    for _, c, closed in _between_counts(d, word):
        if (closed and c != 2) or (not closed and c > 1):
            return False
    return True


def minimal_witness(d: DynkinDiagram, word: Sequence[int]) -> Weight:
    """Sum of omega_i over right descents of w."""
    return d.weight({i: 1 for i in right_descents(d, word)})


def witnesses(d: DynkinDiagram, word: Sequence[int]) -> tuple[Weight, frozenset[int]]:
    """(lambda_min, vertices absent from w); dominant witnesses are lambda_min + sum over the free vertices."""
    word = check_reduced(d, word)
    if not is_dominant_minuscule(d, word):
        raise WordError(f"({format_word(word)}) is not dominant minuscule")
    lam = minimal_witness(d, word)
    if not is_lambda_minuscule(d, word, lam):
        raise AssertionError("minimal witness fails the minuscule condition")
    return lam, frozenset(set(d.vertices) - set(word))


def minimal_coset_rep(d: DynkinDiagram, J: Iterable[int]) -> tuple[int, ...]:
    """
    Reduced word for w_0^J, the longest minimal-length coset representative
    of W/W_J.  Walks lam = sum_{j not in J} omega_j down to w_0 lam, always
    reflecting in the smallest vertex with positive pairing.
    """
    J = set(J)
    lam = d.weight({i: 1 for i in d.vertices if i not in J})
    word: list[int] = []
    while True:
        i = next((v for v in d.vertices if d.pairing(lam, v) > 0), None)
        if i is None:
            return tuple(reversed(word))
        lam = d.reflect(lam, i)
        word.append(i)


def longest_element(d: DynkinDiagram, subset: Iterable[int] | None = None) -> tuple[int, ...]:
    """Reduced word for the longest element of the parabolic subgroup W_subset."""
    sub = list(d.vertices) if subset is None else sorted(set(subset), key=d.index)
    mu = d.rho()
    word: list[int] = []
    while True:
        i = next((v for v in sub if d.pairing(mu, v) > 0), None)
        if i is None:
            return tuple(reversed(word))
        mu = d.reflect(mu, i)
        word.append(i)


def theta_involution(d: DynkinDiagram, subset: Iterable[int]) -> dict[int, int]:
    """theta with w_0(alpha_j) = -alpha_theta(j) for the longest element of W_subset."""
    sub = sorted(set(subset), key=d.index)
    w0 = longest_element(d, sub)
    theta = {}
    for j in sub:
        beta = tuple(int(k == d.index(j)) for k in range(d.rank))
        for m in reversed(w0):
            beta = reflect_root(d, beta, m)
        neg = [k for k, x in enumerate(beta) if x]
        if len(neg) != 1 or beta[neg[0]] != -1:
            raise AssertionError("longest element does not permute the negated simple roots")
        theta[j] = d.vertices[neg[0]]
    return theta


def weak_order_below(d: DynkinDiagram, word: Sequence[int]) -> dict[Weight, int]:
    """{v <=_L w}, keyed by v(rho), with lengths; obtained by stripping left descents."""
    word = check_reduced(d, word)
    top = element_key(d, word)
    out = {top: len(word)}
    queue = deque([top])
    while queue:
        key = queue.popleft()
        for i in d.vertices:
            if d.pairing(key, i) < 0:
                nk = d.reflect(key, i)
                if nk not in out:
                    out[nk] = out[key] - 1
                    queue.append(nk)
    return out


@dataclass(frozen=True)
class CosetData:
    J: frozenset[int]
    representatives: tuple[tuple[int, ...], ...]  # reduced words, BFS order

    def to_json(self) -> dict:
        return {"J": sorted(self.J), "representatives": [format_word(w) for w in self.representatives]}


def coset_data(d: DynkinDiagram, J: Iterable[int], max_len: int | None = None,
               max_size: int | None = None) -> CosetData:
    """Minimal coset representatives of W/W_J via the orbit of sum_{j not in J} omega_j."""
    J = frozenset(J)
    max_size = DEFAULTS.max_coset_size if max_size is None else max_size
    lam = d.weight({i: 1 for i in d.vertices if i not in J})
    reps = {lam: ()}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        w = reps[mu]
        if max_len is not None and len(w) >= max_len:
            continue
        for i in d.vertices:
            if d.pairing(mu, i) > 0:
                nu = d.reflect(mu, i)
                if nu not in reps:
                    reps[nu] = (i,) + w
                    if len(reps) > max_size:
                        raise WordError(f"|W^J| exceeds the bound {max_size}")
                    queue.append(nu)
    return CosetData(J, tuple(reps.values()))


def weyl_dimension(d: DynkinDiagram, lam: Sequence[int]) -> int:
    """dim V(lam) = prod over positive roots of <lam + rho, beta> / <rho, beta> (exact)."""
    from fractions import Fraction
    num, den = 1, 1
    for beta in positive_roots(d):
        num *= sum(b * (x + 1) for b, x in zip(beta, lam))
        den *= sum(beta)
    q = Fraction(num, den)
    if q.denominator != 1:
        raise AssertionError("Weyl dimension formula produced a non-integer")
    return int(q)


def _component_order(d: DynkinDiagram, comp: Sequence[int]) -> int:
    from math import factorial
    comp = set(comp)
    n = len(comp)
    deg = {v: sum(1 for u in d.neighbours(v) if u in comp) for v in comp}
    branch = [v for v in comp if deg[v] == 3]
    if not branch:
        return factorial(n + 1)
    b = branch[0]
    arms = []
    for start in (u for u in d.neighbours(b) if u in comp):
        length, prev, cur = 0, b, start
        while cur is not None:
            length += 1
            nxt = [u for u in d.neighbours(cur) if u in comp and u != prev]
            prev, cur = cur, (nxt[0] if nxt else None)
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return 2 ** (n - 1) * factorial(n)
    return {(1, 2, 2): 51_840, (1, 2, 3): 2_903_040, (1, 2, 4): 696_729_600}[tuple(arms)]


def parabolic_order(d: DynkinDiagram, subset: Iterable[int]) -> int:
    """|W_J| from the Cartan types of the components of J."""
    sub = set(subset)
    verts = [v for v in d.vertices if v in sub]
    seen: set[int] = set()
    total = 1
    for v in verts:
        if v in seen:
            continue
        comp, stack = {v}, [v]
        while stack:
            x = stack.pop()
            for y in d.neighbours(x):
                if y in sub and y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        total *= _component_order(d, comp)
    return total


def dominant_minuscule_words(d: DynkinDiagram, max_len: int, min_len: int = 1
                             ) -> list[tuple[int, ...]]:
    """
    One reduced word per dominant minuscule element with length in
    [min_len, max_len], sorted by (length, word).  Minuscule elements are
    closed under taking suffixes, so they are grown by prepending letters.
    """
    level = {element_key(d, ()): ()}
    found = []
    for ell in range(1, max_len + 1):
        nxt: dict = {}
        for word in level.values():
            for i in d.vertices:
                cand = (i,) + word
                if not is_reduced(d, cand) or not is_minuscule(d, cand):
                    continue
                key = element_key(d, cand)
                if key not in nxt or cand < nxt[key]:
                    nxt[key] = cand
        level = nxt
        if ell >= min_len:
            found.extend(w for w in level.values() if is_dominant_minuscule(d, w))
    return sorted(found, key=lambda w: (len(w), w))
