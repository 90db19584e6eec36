"""Fincke-Pohst / Schnorr-Euchner enumeration of short lattice vectors.

The Gram matrix is scaled to integers and LLL-reduced first.  Pruning uses a
float Cholesky factor with half a unit of slack (true norms are integers), and
every leaf norm is recomputed exactly in integer arithmetic, so float error
can only cost time, never a vector.  Only one of each pair +-v is visited:
the topmost nonzero coordinate is kept positive.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from numba import njit

from .lattice import DyadicLattice
from .lll import lll_gram

MAX_DIM = 32

MODE_MIN = 0
MODE_THETA = 1
MODE_COLLECT = 2


class EnumerationError(RuntimeError):
    pass


def _cholesky(G: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """r_i and mu_ij with x^T G x = sum_i r_i (x_i + sum_{j>i} mu_ij x_j)^2."""
    n = G.shape[0]
    Gf = G.astype(np.float64)
    r = np.zeros(n)
    mu = np.zeros((n, n))
    for a in range(n):
        r[a] = Gf[a, a] - sum(r[k] * mu[k, a] ** 2 for k in range(a))
        for b in range(a + 1, n):
            mu[a, b] = (Gf[a, b] - sum(r[k] * mu[k, a] * mu[k, b] for k in range(a))) / r[a]
    return r, mu


@njit(cache=True, nogil=True)
def _search(G, r, mu, bound, x0, start, stop, mode, hist, out, state):
    """Depth-first walk over levels start..stop (descending) with the
    coordinates above ``start`` fixed by ``x0``.

    state[0] = current best / bound (integer), state[1] = count,
    state[2] = nodes visited.  Leaves are at level ``stop``; with stop > 0
    the leaf records the prefix x[stop:] into ``out`` (prefix mode, mode 3).
    """
    n = G.shape[0]
    x = x0.copy()
    c = np.zeros(n)
    l = np.zeros(n + 1)
    base = np.zeros(n, dtype=np.int64)
    t = np.zeros(n, dtype=np.int64)
    sgn = np.zeros(n, dtype=np.int64)
    half = np.zeros(n, dtype=np.bool_)
    # partial norm of the fixed prefix
    acc = 0.0
    zero_above = True
    for i in range(n - 1, start, -1):
        ci = 0.0
        for j in range(i + 1, n):
            ci -= mu[i, j] * x[j]
        dlt = x[i] - ci
        acc += r[i] * dlt * dlt
        if x[i] != 0:
            zero_above = False
    l[start + 1] = acc
    bnd = bound + 0.5
    nodes = 0

    i = start
    # initialise level i
    ci = 0.0
    for j in range(i + 1, n):
        ci -= mu[i, j] * x[j]
    c[i] = ci
    half[i] = zero_above
    if zero_above:
        x[i] = 1 if i == 0 else 0
    else:
        base[i] = np.int64(np.floor(ci + 0.5))
        t[i] = 0
        sgn[i] = 1 if ci >= base[i] else -1
        x[i] = base[i]

    while True:
        nodes += 1
        dlt = x[i] - c[i]
        li = l[i + 1] + r[i] * dlt * dlt
        if li <= bnd:
            if i == stop:
                if mode == 3:
                    k = state[1]
                    if k < out.shape[0]:
                        for j in range(n):
                            out[k, j] = x[j]
                    state[1] = k + 1
                else:
                    # exact integer norm
                    nrm = 0
                    for a in range(n):
                        if x[a] != 0:
                            sa = 0
                            for b in range(n):
                                if x[b] != 0:
                                    sa += G[a, b] * x[b]
                            nrm += x[a] * sa
                    if nrm > 0:
                        if mode == MODE_MIN:
                            if nrm < state[0]:
                                state[0] = nrm
                                state[1] = 1
                                bnd = nrm + 0.5
                            elif nrm == state[0]:
                                state[1] += 1
                        elif mode == MODE_THETA:
                            if nrm <= bound:
                                hist[nrm] += 1
                        else:
                            if nrm == bound:
                                k = state[1]
                                if k < out.shape[0]:
                                    for j in range(n):
                                        out[k, j] = x[j]
                                state[1] = k + 1
                # next sibling at this level
                if half[i]:
                    x[i] += 1
                else:
                    t[i] += 1
                    tt = t[i]
                    if tt % 2 == 1:
                        x[i] = base[i] + sgn[i] * ((tt + 1) // 2)
                    else:
                        x[i] = base[i] - sgn[i] * (tt // 2)
                continue
            l[i] = li
            za = half[i] and x[i] == 0
            i -= 1
            ci = 0.0
            for j in range(i + 1, n):
                ci -= mu[i, j] * x[j]
            c[i] = ci
            half[i] = za
            if za:
                x[i] = 1 if i == 0 else 0
            else:
                base[i] = np.int64(np.floor(ci + 0.5))
                t[i] = 0
                sgn[i] = 1 if ci >= base[i] else -1
                x[i] = base[i]
        else:
            # siblings come in order of increasing |x - c|, so the rest fail too
            i += 1
            if i > start:
                break
            if half[i]:
                x[i] += 1
            else:
                t[i] += 1
                tt = t[i]
                if tt % 2 == 1:
                    x[i] = base[i] + sgn[i] * ((tt + 1) // 2)
                else:
                    x[i] = base[i] - sgn[i] * (tt // 2)
    state[2] += nodes


@dataclass
class EnumResult:
    min_norm: Fraction
    count: int
    vectors: list[tuple[int, ...]] | None = None
    runtime_ms: int = 0
    nodes: int = 0
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"min_norm": str(self.min_norm), "kissing": self.count, "runtime_ms": self.runtime_ms}


class _Prepared:
    """LLL-reduced integral Gram with its float factorization."""

    def __init__(self, lat: DyadicLattice):
        if lat.dim > MAX_DIM:
            raise EnumerationError(f"dimension {lat.dim} exceeds {MAX_DIM}")
        self.lat = lat
        Gr, H = lll_gram(lat.gram_num)
        self.H = np.array(H, dtype=np.int64)
        self.G = np.array(Gr, dtype=np.int64)
        self.r, self.mu = _cholesky(self.G)
        self.n = lat.dim
        self.scale = lat.gram_exp

    def frac(self, v: int) -> Fraction:
        return Fraction(v, 1 << self.scale)

    def prefixes(self, bound: int, depth: int) -> np.ndarray:
        n = self.n
        depth = min(depth, n - 1)
        if depth <= 0:
            return np.zeros((1, n), dtype=np.int64)
        stop = n - depth
        state = np.array([0, 0, 0], dtype=np.int64)
        dummy_h = np.zeros(1, dtype=np.int64)
        out = np.zeros((0, n), dtype=np.int64)
        x0 = np.zeros(n, dtype=np.int64)
        _search(self.G, self.r, self.mu, float(bound), x0, n - 1, stop, 3, dummy_h, out, state)
        out = np.zeros((state[1], n), dtype=np.int64)
        state[:] = 0
        _search(self.G, self.r, self.mu, float(bound), x0, n - 1, stop, 3, dummy_h, out, state)
        return out

    def run(self, mode: int, bound: int, jobs: int = 1, hist_len: int = 1, cap: int = 0):
        """Returns (state totals, histogram, collected rows) over all prefixes."""
        n = self.n
        depth = 0 if jobs <= 1 or n < 4 else min(3, n - 2)
        tasks = self.prefixes(bound, depth) if depth else None

        def one(task_rows):
            state = np.array([bound if mode == MODE_MIN else 0, 0, 0], dtype=np.int64)
            hist = np.zeros(hist_len, dtype=np.int64)
            out = np.zeros((cap, n), dtype=np.int64)
            if task_rows is None:
                x0 = np.zeros(n, dtype=np.int64)
                _search(self.G, self.r, self.mu, float(bound), x0, n - 1, 0, mode, hist, out, state)
            else:
                start = n - depth - 1
                for row in task_rows:
                    _search(self.G, self.r, self.mu, float(bound), row, start, 0, mode, hist, out, state)
            return state, hist, out[: min(int(state[1]), cap)]

        if tasks is None:
            return [one(None)]
        chunks = [tasks[i::jobs] for i in range(jobs)]
        with ThreadPoolExecutor(jobs) as ex:
            return list(ex.map(one, chunks))


def shortest_vectors(lat: DyadicLattice, norm_bound=None, jobs: int = 1, collect: bool = False) -> EnumResult:
    """Exact minimum norm and the number of vectors attaining it (both signs).

    With ``norm_bound`` the search starts from that bound instead of the first
    reduced basis norm; if no nonzero vector has norm <= bound the count is 0.
    """
    t0 = time.perf_counter()
    P = _Prepared(lat)
    if norm_bound is None:
        bound = int(min(P.G[i, i] for i in range(P.n)))
    else:
        bound = int(Fraction(norm_bound) * (1 << P.scale))
    parts = P.run(MODE_MIN, bound, jobs)
    best = min(int(s[0]) for s, _, _ in parts)
    count = sum(int(s[1]) for s, _, _ in parts if int(s[0]) == best)
    nodes = sum(int(s[2]) for s, _, _ in parts)
    if norm_bound is not None and count == 0:
        return EnumResult(Fraction(0), 0, [] if collect else None, int((time.perf_counter() - t0) * 1000), nodes)
    vecs = None
    if collect:
        vecs = vectors_of_norm(lat, Fraction(best, 1 << P.scale), jobs, _prepared=P)
    return EnumResult(Fraction(best, 1 << P.scale), 2 * count, vecs, int((time.perf_counter() - t0) * 1000), nodes)


def vectors_of_norm(lat: DyadicLattice, norm, jobs: int = 1, _prepared: _Prepared | None = None) -> list[tuple[int, ...]]:
    """All lattice vectors of the given norm as coefficient tuples in the
    lattice's own basis (both signs, deterministic order)."""
    P = _prepared or _Prepared(lat)
    target = Fraction(norm) * (1 << P.scale)
    if target.denominator != 1:
        return []
    target = int(target)
    counts = P.run(MODE_COLLECT, target, jobs, cap=0)
    total = sum(int(s[1]) for s, _, _ in counts)
    parts = P.run(MODE_COLLECT, target, jobs, cap=max(total, 1))
    rows = np.concatenate([o for _, _, o in parts]) if parts else np.zeros((0, P.n), dtype=np.int64)
    coeffs = rows @ P.H  # back to the original basis
    out = [tuple(int(v) for v in r) for r in coeffs]
    out += [tuple(-v for v in r) for r in out]
    return sorted(out)


def theta_prefix(lat: DyadicLattice, bound, jobs: int = 1) -> dict[Fraction, int]:
    """Number of lattice vectors of each norm <= bound (0 included)."""
    P = _Prepared(lat)
    B = Fraction(bound) * (1 << P.scale)
    B = int(B.numerator // B.denominator)
    parts = P.run(MODE_THETA, B, jobs, hist_len=B + 1)
    hist = sum(h for _, h, _ in parts)
    out = {Fraction(0): 1}
    for v in range(1, B + 1):
        if hist[v]:
            out[Fraction(v, 1 << P.scale)] = 2 * int(hist[v])
    return out


def brute_force_shortest(G, radius: int = 6) -> tuple[int, int]:
    """Min norm and count over all coefficient vectors in [-radius, radius]^m."""
    G = np.asarray(G, dtype=np.int64)
    n = G.shape[0]
    return _brute(G, n, radius)


@njit(cache=True)
def _brute(G, n, radius):
    x = np.full(n, -radius, dtype=np.int64)
    best = np.int64(1) << np.int64(62)
    cnt = 0
    side = 2 * radius + 1
    total = side**n
    for _ in range(total):
        nz = False
        for a in range(n):
            if x[a] != 0:
                nz = True
                break
        if nz:
            s = 0
            for a in range(n):
                if x[a] != 0:
                    sa = 0
                    for b in range(n):
                        sa += G[a, b] * x[b]
                    s += x[a] * sa
            if s < best:
                best = s
                cnt = 1
            elif s == best:
                cnt += 1
        j = 0
        while j < n:
            x[j] += 1
            if x[j] > radius:
                x[j] = -radius
                j += 1
            else:
                break
    return best, cnt
