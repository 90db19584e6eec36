"""Exact integral LLL on a Gram matrix (all quantities stay integers)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..algebra.dyadic import DyadicMatrix
from .lattice import DegenerateLatticeError, DyadicLattice

DELTA = Fraction(99, 100)


def lll_gram(G: Sequence[Sequence[int]], delta: Fraction = DELTA) -> tuple[list[list[int]], list[list[int]]]:
    """Reduce a positive-definite integral Gram matrix.

    Returns (reduced Gram, H) with H unimodular and reduced = H G H^T.  The
    Gram-Schmidt data is carried as the integers d_i (leading minors) and
    lambda_ij = d_j mu_ij.
    """
    n = len(G)
    G = [list(map(int, r)) for r in G]
    H = [[int(i == j) for j in range(n)] for i in range(n)]
    if n == 0:
        return G, H
    dn, dd = delta.numerator, delta.denominator
    d = [1] + [0] * n  # d[0] = 1, d[i] for vector i (1-based)
    lam = [[0] * (n + 1) for _ in range(n + 1)]
    d[1] = G[0][0]
    if d[1] <= 0:
        raise DegenerateLatticeError("Gram matrix is not positive definite")

    def g(i, j):
        return G[i - 1][j - 1]

    def red(k, l):
        if 2 * abs(lam[k][l]) <= d[l]:
            return
        q = (2 * lam[k][l] + d[l]) // (2 * d[l])
        # b_k <- b_k - q b_l
        H[k - 1] = [a - q * b for a, b in zip(H[k - 1], H[l - 1])]
        a, b = k - 1, l - 1
        gkk, gkl, gll = G[a][a], G[a][b], G[b][b]
        for j in range(n):
            if j != a:
                G[a][j] -= q * G[b][j]
                G[j][a] = G[a][j]
        G[a][a] = gkk - 2 * q * gkl + q * q * gll
        lam[k][l] -= q * d[l]
        for i in range(1, l):
            lam[k][i] -= q * lam[l][i]

    def swap(k, kmax):
        H[k - 1], H[k - 2] = H[k - 2], H[k - 1]
        G[k - 1], G[k - 2] = G[k - 2], G[k - 1]
        for r in G:
            r[k - 1], r[k - 2] = r[k - 2], r[k - 1]
        for j in range(1, k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lm = lam[k][k - 1]
        B = (d[k - 2] * d[k] + lm * lm) // d[k - 1]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (d[k] * lam[i][k - 1] - lm * t) // d[k - 1]
            lam[i][k - 1] = (B * t + lm * lam[i][k]) // d[k]
        d[k - 1] = B

    k, kmax = 2, 1
    while k <= n:
        if k > kmax:
            kmax = k
            for j in range(1, k + 1):
                u = g(k, j)
                for i in range(1, j):
                    u = (d[i] * u - lam[k][i] * lam[j][i]) // d[i - 1]
                if j < k:
                    lam[k][j] = u
                else:
                    if u <= 0:
                        raise DegenerateLatticeError("Gram matrix is not positive definite")
                    d[k] = u
        red(k, k - 1)
        if dd * d[k] * d[k - 2] < dn * d[k - 1] * d[k - 1] - dd * lam[k][k - 1] ** 2:
            swap(k, kmax)
            k = max(2, k - 1)
        else:
            for l in range(k - 2, 0, -1):
                red(k, l)
            k += 1
    return G, H


def lll_reduce(lat: DyadicLattice) -> DyadicLattice:
    """Same lattice, LLL-reduced basis (or Gram).  The unimodular transform is
    kept in ``meta['lll_transform']``."""
    G, H = lll_gram(lat.gram_num)
    if lat.basis is not None:
        B = DyadicMatrix(tuple(tuple(r) for r in H), 0) @ lat.basis
        out = DyadicLattice(basis=B, name=lat.name)
    else:
        out = DyadicLattice(gram_num=tuple(tuple(r) for r in G), gram_exp=lat.gram_exp, name=lat.name)
    out.meta["lll_transform"] = H
    return out
