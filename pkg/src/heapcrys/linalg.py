"""
Exact linear algebra over the rationals on plain Python lists.

Matrices are sequences of rows; entries are ``int`` or ``Fraction``.  Every
function returns ``Fraction`` entries (``int`` inputs are promoted lazily), and
``rref`` output is canonical, so two spanning sets of the same row space give
identical results.  The matrices in this package are small (a few dozen
columns at most), so plain Gauss-Jordan is adequate.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Row = tuple[Fraction, ...]

__all__ = [
    "rref", "rank", "nullspace", "left_nullspace", "solve_exact", "det_exact",
    "in_span", "span_union", "restrict_to_zero_coords", "mat_mul", "mat_vec",
    "vec_mat", "is_zero_matrix", "identity", "kron_identity", "transpose",
    "format_fraction", "parse_fraction",
]


def _frac_rows(rows: Iterable[Sequence]) -> list[list[Fraction]]:
    return [[x if isinstance(x, Fraction) else Fraction(x) for x in r] for r in rows]


def rref(rows: Iterable[Sequence], ncols: int | None = None) -> tuple[list[Row], list[int]]:
    """Reduced row echelon form; zero rows dropped.  Returns (rows, pivot columns)."""
    m = _frac_rows(rows)
    if not m:
        return [], []
    ncols = len(m[0]) if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = None
        for k in range(r, len(m)):
            if m[k][c]:
                p = k
                break
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pr = m[r]
        inv = 1 / pr[c]
        if inv != 1:
            pr = [x * inv for x in pr]
            m[r] = pr
        for k in range(len(m)):
            if k != r:
                f = m[k][c]
                if f:
                    mk = m[k]
                    m[k] = [a - f * b if b else a for a, b in zip(mk, pr)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(rows: Iterable[Sequence]) -> int:
    rows = list(rows)
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(a: Sequence[Sequence], ncols: int | None = None) -> list[Row]:
    """Basis of {x : A x = 0}, canonical (free variables set to unit vectors)."""
    a = list(a)
    if ncols is None:
        ncols = len(a[0]) if a else 0
    if not a:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    red, piv = rref(a, ncols)
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, piv):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def left_nullspace(a: Sequence[Sequence]) -> list[Row]:
    """Basis of {c : c A = 0}."""
    a = list(a)
    if not a:
        return []
    return nullspace(transpose(a), len(a))


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)] if a else []


def solve_exact(a: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...]:
    """Unique solution of A x = b for square invertible A."""
    n = len(a)
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, piv = rref(aug, n + 1)
    if piv != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(row[n] for row in red)


def det_exact(a: Sequence[Sequence]) -> Fraction:
    m = _frac_rows(a)
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((k for k in range(c, n) if m[k][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for k in range(c + 1, n):
            f = m[k][c] / m[c][c]
            if f:
                m[k] = [x - f * y for x, y in zip(m[k], m[c])]
    return det


def in_span(basis_rref: Sequence[Row], pivots: Sequence[int], v: Sequence) -> bool:
    """Membership test against an RREF basis (as returned by ``rref``)."""
    r = [x if isinstance(x, Fraction) else Fraction(x) for x in v]
    for row, p in zip(basis_rref, pivots):
        f = r[p]
        if f:
            r = [a - f * b for a, b in zip(r, row)]
    return not any(r)


def span_union(*bases: Sequence[Sequence], ncols: int) -> list[Row]:
    rows = [r for b in bases for r in b]
    return rref(rows, ncols)[0] if rows else []


def restrict_to_zero_coords(basis: Sequence[Sequence], zero_cols: Sequence[int],
                            ncols: int) -> list[Row]:
    """RREF basis of {v in span(basis) : v[j] = 0 for j in zero_cols}."""
    basis = list(basis)
    if not basis:
        return []
    if not zero_cols:
        return rref(basis, ncols)[0]
    sub = [[row[j] for j in zero_cols] for row in basis]
    coeffs = left_nullspace(sub)
    vecs = [vec_mat(c, basis) for c in coeffs]
    return rref(vecs, ncols)[0] if vecs else []


def vec_mat(c: Sequence, m: Sequence[Sequence]) -> list:
    """Row vector times matrix."""
    out = [0] * (len(m[0]) if m else 0)
    for ci, row in zip(c, m):
        if ci:
            out = [o + ci * x for o, x in zip(out, row)]
    return out


def mat_vec(m: Sequence[Sequence], v: Sequence) -> list:
    return [sum(a * b for a, b in zip(row, v) if a and b) for row in m]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    if not a:
        return []
    bt = list(zip(*b)) if b else []
    if not bt:
        return [[] for _ in a]
    return [[sum(x * y for x, y in zip(row, col) if x and y) for col in bt] for row in a]


def is_zero_matrix(m: Sequence[Sequence]) -> bool:
    return not any(any(row) for row in m)


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def kron_identity(n: int, m: Sequence[Sequence]) -> list[list]:
    """I_n (x) M: block diagonal with n copies of M (copy-major coordinates)."""
    rows, cols = len(m), (len(m[0]) if m else 0)
    out = [[0] * (n * cols) for _ in range(n * rows)]
    for k in range(n):
        for i in range(rows):
            for j in range(cols):
                if m[i][j]:
                    out[k * rows + i][k * cols + j] = m[i][j]
    return out


def format_fraction(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_fraction(s) -> Fraction:
    return Fraction(s)
