"""Exact linear algebra: RREF over GF(q), integer HNF and determinants,
rational solves.  Matrices are lists of rows."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .field import FiniteField

Matrix = list[list[int]]


def matrix_rref(rows: Sequence[Sequence[int]], field: FiniteField) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form over ``field``.

    Returns ``(R, rank, pivots)`` where R has the same shape as the input
    (zero rows last) and pivots are the leftmost-first pivot columns.
    """
    F = field
    R = [list(r) for r in rows]
    if not R:
        return R, 0, []
    ncols = len(R[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(R)) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = F.inv(R[r][c])
        if inv != 1:
            R[r] = [F.mul(inv, x) for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R, r, pivots


def rank(rows: Sequence[Sequence[int]], field: FiniteField) -> int:
    return matrix_rref(rows, field)[1]


def in_row_space(vec: Sequence[int], rref_rows: Sequence[Sequence[int]], pivots: Sequence[int], field: FiniteField) -> bool:
    """Membership test against an RREF basis (nonzero rows with given pivots)."""
    F = field
    v = list(vec)
    for row, c in zip(rref_rows, pivots):
        if v[c]:
            f = v[c]
            v = [F.sub(x, F.mul(f, y)) for x, y in zip(v, row)]
    return not any(v)


def null_space(rows: Sequence[Sequence[int]], field: FiniteField, ncols: int | None = None) -> Matrix:
    """Basis of {x : rows . x = 0} (right kernel) over the field."""
    F = field
    n = ncols if ncols is not None else len(rows[0])
    if not rows:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    R, rk, piv = matrix_rref(rows, F)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        x = [0] * n
        x[f] = 1
        for i, c in enumerate(piv):
            x[c] = F.neg(R[i][f])
        basis.append(x)
    return basis


# -- GF(2) rows as int bitmasks -------------------------------------------

class GF2Basis:
    """Incremental GF(2) row basis on int bitmasks (pivot = highest set bit)."""

    def __init__(self):
        self.rows: dict[int, int] = {}
        self._order: list[int] = []

    def reduce(self, v: int) -> int:
        """Canonical coset representative: every pivot bit cleared."""
        for top in self._order:
            if v >> top & 1:
                v ^= self.rows[top]
        return v

    def add(self, v: int) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        self.rows[v.bit_length() - 1] = v
        self._order = sorted(self.rows, reverse=True)
        return True

    def __len__(self) -> int:
        return len(self.rows)


# -- integers ---------------------------------------------------------------

def int_det(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    A = [list(r) for r in M]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if A[i][k]), None)
            if sw is None:
                return 0
            A[k], A[sw] = A[sw], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def hnf_rows(gens: Sequence[Sequence[int]]) -> Matrix:
    """Row-style Hermite normal form; returns the nonzero rows (a Z-basis of the
    row lattice) in upper-triangular form with positive pivots."""
    A = [list(r) for r in gens if any(r)]
    if not A:
        return []
    ncols = len(A[0])
    out: Matrix = []
    for c in range(ncols):
        live = [r for r in A if r[c] != 0]
        if not live:
            continue
        rest = [r for r in A if r[c] == 0]
        # Euclid on column c among live rows
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[c]))
            piv = live[0]
            nxt = [piv]
            for r in live[1:]:
                qt = r[c] // piv[c]
                r2 = [x - qt * y for x, y in zip(r, piv)]
                if r2[c] != 0:
                    nxt.append(r2)
                elif any(r2):
                    rest.append(r2)
            live = nxt
        piv = live[0]
        if piv[c] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        A = rest
    # reduce entries above pivots
    for i in range(len(out)):
        c = next(j for j, x in enumerate(out[i]) if x)
        p = out[i][c]
        for k in range(i):
            qt = out[k][c] // p
            if qt:
                out[k] = [x - qt * y for x, y in zip(out[k], out[i])]
    return out


def solve_rational(basis: Sequence[Sequence], target: Sequence) -> list[Fraction] | None:
    """Coefficients x with sum_i x_i basis[i] = target, or None if no solution.
    The basis rows need not be independent; a particular solution is returned."""
    rows = len(basis)
    cols = len(target)
    # columns of the system are the basis rows: solve B^T x = t
    A = [[Fraction(basis[i][j]) for i in range(rows)] + [Fraction(target[j])] for j in range(cols)]
    piv_cols = []
    r = 0
    for c in range(rows):
        p = next((i for i in range(r, cols) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(cols):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        piv_cols.append(c)
        r += 1
    if any(A[i][rows] != 0 for i in range(r, cols)):
        return None
    x = [Fraction(0)] * rows
    for i, c in enumerate(piv_cols):
        x[c] = A[i][rows]
    return x


def frac_matmul(A, B):
    cols = list(zip(*B))
    return [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in A]
