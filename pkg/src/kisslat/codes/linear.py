"""Linear codes over GF(q) with exhaustive weight enumeration."""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from ..algebra.field import FiniteField
from ..algebra.matrix import in_row_space, matrix_rref, null_space
from . import kernels

ENUMERATION_BUDGET = 1 << 24


class EnumerationBudgetError(RuntimeError):
    """Raised instead of estimating when exhaustive work exceeds the budget."""


@dataclass(frozen=True)
class LinearCode:
    """A linear [n, k] code given by a full-rank k x n generator matrix.

    Symbols are field-element indices of ``field``.  The weight distribution
    is computed once and cached on the instance.
    """

    field: FiniteField
    generator: tuple[tuple[int, ...], ...]
    length: int
    name: str = ""

    def __post_init__(self):
        gen = tuple(tuple(int(x) for x in r) for r in self.generator)
        if any(len(r) != self.length for r in gen):
            raise ValueError("generator rows must all have the code length")
        object.__setattr__(self, "generator", gen)
        if gen and matrix_rref(gen, self.field)[1] != len(gen):
            raise ValueError("generator matrix is not of full rank")

    @classmethod
    def from_rows(cls, field: FiniteField, rows: Sequence[Sequence[int]], length: int | None = None, name: str = "") -> "LinearCode":
        """Code spanned by ``rows``; dependent rows are dropped (order kept)."""
        rows = [list(r) for r in rows]
        n = length if length is not None else len(rows[0])
        kept: list[list[int]] = []
        for r in rows:
            if matrix_rref(kept + [r], field)[1] > len(kept):
                kept.append(r)
        return cls(field, tuple(tuple(r) for r in kept), n, name)

    @classmethod
    def full_space(cls, field: FiniteField, n: int) -> "LinearCode":
        return cls(field, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n, f"F_{field.q}^{n}")

    @classmethod
    def zero(cls, field: FiniteField, n: int) -> "LinearCode":
        return cls(field, (), n, "zero")

    @property
    def n(self) -> int:
        return self.length

    @property
    def k(self) -> int:
        return len(self.generator)

    @property
    def q(self) -> int:
        return self.field.q

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"LinearCode[{self.n},{self.k}]_{self.q}{label}"

    @cached_property
    def _rref(self) -> tuple[list[list[int]], list[int]]:
        R, rk, piv = matrix_rref(self.generator, self.field)
        return R[:rk], piv

    def contains(self, word: Sequence[int]) -> bool:
        R, piv = self._rref
        return in_row_space(word, R, piv, self.field)

    def is_subcode_of(self, other: "LinearCode") -> bool:
        return all(other.contains(r) for r in self.generator)

    def encode(self, msg: Sequence[int]) -> tuple[int, ...]:
        F = self.field
        out = [0] * self.n
        for m, row in zip(msg, self.generator):
            if m:
                out = [F.add(o, F.mul(m, x)) for o, x in zip(out, row)]
        return tuple(out)

    def codewords(self) -> Iterator[tuple[int, ...]]:
        self._check_budget()
        for msg in itertools.product(range(self.q), repeat=self.k):
            yield self.encode(msg)

    def dual(self) -> "LinearCode":
        if self.k == 0:
            return LinearCode.full_space(self.field, self.n)
        basis = null_space(self.generator, self.field, self.n)
        return LinearCode(self.field, tuple(tuple(r) for r in basis), self.n, f"dual({self.name})" if self.name else "")

    def _check_budget(self):
        if self.q**self.k > ENUMERATION_BUDGET:
            raise EnumerationBudgetError(
                f"{self!r} has {self.q}^{self.k} codewords, over the 2^24 enumeration budget"
            )

    # -- F_p expansion used by the kernels --------------------------------
    def fp_rows(self) -> np.ndarray:
        """F_p-basis rows (w^t g_i) as digit arrays of shape (k*h, n, h)."""
        F = self.field
        h = F.h
        out = np.zeros((self.k * h, self.n, h), dtype=np.int64)
        for i, row in enumerate(self.generator):
            for t in range(h):
                w = F.pow(F.gen, t) if h > 1 else 1
                for s, x in enumerate(row):
                    out[i * h + t, s, :] = F.coords(F.mul(w, x))
        return out

    def binary_masks(self) -> np.ndarray:
        return np.array([sum(1 << j for j, x in enumerate(r) if x) for r in self.generator], dtype=np.uint64)

    @cached_property
    def weight_distribution(self) -> tuple[int, ...]:
        return tuple(int(x) for x in weight_distribution(self))

    @cached_property
    def min_distance(self) -> int:
        return min_distance(self)

    def minimum_weight_words(self, weight: int | None = None) -> list[tuple[int, ...]]:
        """All codewords of the given weight (default: the minimum distance)."""
        self._check_budget()
        w = self.min_distance if weight is None else weight
        A = self.weight_distribution[w]
        if self.field.q == 2 and self.n <= 64:
            out = np.zeros(max(A, 1), dtype=np.uint64)
            kernels.gray_binary_collect(self.binary_masks(), self.n, self.k, w, out)
            return [tuple((int(x) >> j) & 1 for j in range(self.n)) for x in out[:A]]
        R = self.fp_rows()
        out = np.zeros((max(A, 1), R.shape[0]), dtype=np.int64)
        kernels.odometer_collect(R, self.field.p, w, out)
        return [self._from_fp_digits(d) for d in out[:A]]

    def _from_fp_digits(self, digits) -> tuple[int, ...]:
        F = self.field
        h = F.h
        msg = [F.from_coords(digits[i * h : (i + 1) * h]) for i in range(self.k)]
        return self.encode(msg)


def weight_distribution(code: LinearCode, jobs: int = 1) -> np.ndarray:
    """Exact weight distribution A_0..A_n by exhaustive enumeration.

    Binary codes of length <= 64 take the Gray-code path (optionally split
    over ``jobs`` threads by Gray index range); all others use the F_p
    odometer.  Refuses codes with more than 2^24 codewords.
    """
    code._check_budget()
    if code.k == 0:
        h = np.zeros(code.n + 1, dtype=np.int64)
        h[0] = 1
        return h
    if code.q == 2 and code.n <= 64:
        rows = code.binary_masks()
        total = 1 << code.k
        jobs = max(1, min(jobs, total))
        if jobs == 1:
            return kernels.gray_binary_histogram(rows, code.n, 0, total)
        edges = [total * i // jobs for i in range(jobs + 1)]
        with ThreadPoolExecutor(jobs) as ex:
            parts = ex.map(lambda ab: kernels.gray_binary_histogram(rows, code.n, ab[0], ab[1]), zip(edges, edges[1:]))
            return sum(parts)
    return kernels.odometer_histogram(code.fp_rows(), code.field.p)


def _binary_min_distance_dual(code: LinearCode) -> int:
    """Smallest number of parity-check columns summing to zero."""
    n = code.n
    H = code.dual().generator
    cols = [sum(((H[i][j] & 1) << i) for i in range(len(H))) for j in range(n)]
    where: dict[int, list[int]] = {}
    for j, c in enumerate(cols):
        where.setdefault(c, []).append(j)
    for w in range(1, n + 1):
        if math.comb(n, w - 1) > ENUMERATION_BUDGET:
            raise EnumerationBudgetError(
                f"dual search for {code!r} would scan C({n},{w - 1}) column sets"
            )
        for combo in itertools.combinations(range(n), w - 1):
            x = 0
            for j in combo:
                x ^= cols[j]
            last = combo[-1] if combo else -1
            if any(j > last for j in where.get(x, ())):
                return w
    raise AssertionError("unreachable: columns of a full-length check matrix are dependent")


def min_distance(code: LinearCode) -> int:
    """Exact minimum Hamming weight of a nonzero codeword.

    Exhaustive when q^k fits the budget; otherwise, for binary codes, the
    smallest dependent set of parity-check columns.
    """
    if code.k == 0:
        raise ValueError("the zero code has no nonzero codewords")
    if code.k == code.n:
        return 1
    if code.q**code.k <= ENUMERATION_BUDGET:
        wd = code.weight_distribution
        return next(w for w in range(1, code.n + 1) if wd[w])
    if code.q == 2:
        return _binary_min_distance_dual(code)
    raise EnumerationBudgetError(f"{code!r} is too large for exhaustive distance")


def weight_count(code: LinearCode, w: int, budget: int = ENUMERATION_BUDGET) -> int:
    """Exact A_w without enumerating the whole code.

    A word of weight w has exactly one zero set Z of size n - w, so A_w sums,
    over all such Z, the words of the subcode vanishing on Z that are nonzero
    everywhere else.  Cost is C(n, w) times the largest such subcode.
    """
    F, n, k = code.field, code.n, code.k
    if w == 0:
        return 1
    if not 0 < w <= n or k == 0:
        return 0
    G = code.generator
    mul = F.mul_table()
    add = np.array([[F.add(a, b) for b in range(code.q)] for a in range(code.q)], dtype=np.int64)
    rows = np.array(G, dtype=np.int64)
    ident = [[int(i == j) for j in range(k)] for i in range(k)]
    total = work = 0
    for Z in itertools.combinations(range(n), n - w):
        kern = null_space([[G[i][j] for i in range(k)] for j in Z], F, k) if Z else ident
        work += code.q ** len(kern)
        if work > budget:
            raise EnumerationBudgetError(f"zero-set count for A_{w} of {code!r} exceeds the budget")
        support = np.array([j for j in range(n) if j not in Z], dtype=np.int64)
        # codewords of the kernel basis, restricted to the support
        basis = []
        for m in kern:
            word = np.zeros(n, dtype=np.int64)
            for c, r in zip(m, rows):
                if c:
                    word = add[word, mul[c, r]]
            basis.append(word[support])
        for coeffs in itertools.product(range(code.q), repeat=len(basis)):
            word = np.zeros(len(support), dtype=np.int64)
            for c, b in zip(coeffs, basis):
                if c:
                    word = add[word, mul[c, b]]
            if word.all():
                total += 1
    return total
