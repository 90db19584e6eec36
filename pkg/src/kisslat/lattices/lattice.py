"""Lattices with dyadic bases or dyadic Gram matrices."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import mpmath

from ..algebra.dyadic import DyadicMatrix
from ..algebra.matrix import hnf_rows, int_det


class DegenerateLatticeError(ValueError):
    pass


def _canon_gram(g: Sequence[Sequence[int]], e: int) -> tuple[tuple[tuple[int, ...], ...], int]:
    g = tuple(tuple(int(x) for x in r) for r in g)
    while e > 0 and all(x % 2 == 0 for r in g for x in r):
        g = tuple(tuple(x // 2 for x in r) for r in g)
        e -= 1
    return g, e


def _leading_minors_positive(g: Sequence[Sequence[int]]) -> bool:
    """Sylvester's criterion through fraction-free elimination."""
    A = [list(r) for r in g]
    n = len(A)
    prev = 1
    for k in range(n):
        if A[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return True


@dataclass(frozen=True, eq=False)
class DyadicLattice:
    """A full-rank lattice in R^m.

    Either ``basis`` (rows generate, entries dyadic) or an integral Gram
    numerator ``gram_num`` with scale ``2^-gram_exp`` is given; the other is
    derived when possible.  Norms are exact ``Fraction`` values.
    """

    basis: DyadicMatrix | None = None
    gram_num: tuple[tuple[int, ...], ...] | None = None
    gram_exp: int = 0
    name: str = ""
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.basis is None and self.gram_num is None:
            raise ValueError("a lattice needs a basis or a Gram matrix")
        if self.basis is not None:
            B = self.basis
            if B.nrows != B.ncols:
                raise DegenerateLatticeError("basis must be square (full rank)")
            G = B @ B.T()
            gn, ge = _canon_gram(G.num, G.exp)
            if self.gram_num is not None:
                mine, me = _canon_gram(self.gram_num, self.gram_exp)
                if (mine, me) != (gn, ge):
                    raise ValueError("given Gram matrix does not match the basis")
        else:
            gn, ge = _canon_gram(self.gram_num, self.gram_exp)
            if any(gn[i][j] != gn[j][i] for i in range(len(gn)) for j in range(len(gn))):
                raise DegenerateLatticeError("Gram matrix is not symmetric")
        if not _leading_minors_positive(gn):
            raise DegenerateLatticeError("Gram matrix is not positive definite")
        object.__setattr__(self, "gram_num", gn)
        object.__setattr__(self, "gram_exp", ge)

    @classmethod
    def from_basis(cls, rows, exp: int = 0, name: str = "") -> "DyadicLattice":
        return cls(basis=DyadicMatrix(tuple(tuple(r) for r in rows), exp), name=name)

    @classmethod
    def from_generators(cls, rows: Sequence[Sequence[int]], exp: int = 0, name: str = "") -> "DyadicLattice":
        """Lattice generated by integer rows at scale 2^-exp (HNF basis)."""
        H = hnf_rows(rows)
        if not H or len(H) != len(H[0]):
            raise DegenerateLatticeError(f"generators span rank {len(H)}, need full rank")
        return cls(basis=DyadicMatrix(tuple(tuple(r) for r in H), exp), name=name)

    @classmethod
    def from_gram(cls, gram, exp: int = 0, name: str = "") -> "DyadicLattice":
        return cls(gram_num=tuple(tuple(r) for r in gram), gram_exp=exp, name=name)

    @property
    def dim(self) -> int:
        return len(self.gram_num)

    def gram(self) -> list[list[Fraction]]:
        d = 1 << self.gram_exp
        return [[Fraction(x, d) for x in r] for r in self.gram_num]

    @cached_property
    def det(self) -> Fraction:
        """Determinant of the Gram matrix (the squared covolume)."""
        return Fraction(int_det(self.gram_num), 1 << (self.gram_exp * self.dim))

    def norm(self, coeffs: Sequence[int]) -> Fraction:
        G = self.gram_num
        s = sum(c * G[i][j] * d for i, c in enumerate(coeffs) if c for j, d in enumerate(coeffs) if d)
        return Fraction(s, 1 << self.gram_exp)

    def vector(self, coeffs: Sequence[int]) -> tuple[Fraction, ...]:
        if self.basis is None:
            raise ValueError(f"{self.name or 'lattice'} is Gram-only")
        B = self.basis.to_fractions()
        m = self.dim
        return tuple(sum((c * B[i][j] for i, c in enumerate(coeffs) if c), Fraction(0)) for j in range(m))

    def scaled(self, k: int) -> "DyadicLattice":
        """Lattice scaled by 2^k (norms by 4^k)."""
        if self.basis is not None:
            return DyadicLattice(basis=self.basis.scale(Fraction(2) ** k), name=self.name)
        n = self.gram_num
        if 2 * k >= self.gram_exp:
            sh = 2 * k - self.gram_exp
            return DyadicLattice(gram_num=tuple(tuple(x << sh for x in r) for r in n), name=self.name)
        return DyadicLattice(gram_num=n, gram_exp=self.gram_exp - 2 * k, name=self.name)

    def center_density_squared(self, min_norm: Fraction) -> Fraction:
        """((d/2)^m / sqrt(det))^2 = (min_norm/4)^m / det, exact."""
        return (Fraction(min_norm) / 4) ** self.dim / self.det

    def center_density(self, min_norm: Fraction):
        return mpmath.sqrt(mpmath.mpf(self.center_density_squared(min_norm).numerator)
                           / self.center_density_squared(min_norm).denominator)

    def __repr__(self) -> str:
        tag = f" {self.name}" if self.name else ""
        form = "basis" if self.basis is not None else "gram"
        return f"DyadicLattice(dim={self.dim},{tag} {form})"


def contains(outer: DyadicLattice, vectors: DyadicMatrix) -> bool:
    """True iff every row of ``vectors`` lies in ``outer`` (basis form)."""
    from ..algebra.matrix import solve_rational

    B = outer.basis.to_fractions()
    for row in vectors.to_fractions():
        x = solve_rational(B, row)
        if x is None or any(c.denominator != 1 for c in x):
            return False
    return True


def same_lattice(a: DyadicLattice, b: DyadicLattice) -> bool:
    if a.basis is None or b.basis is None:
        raise ValueError("both lattices need bases")
    e = max(a.basis.exp, b.basis.exp)
    return hnf_rows(a.basis.at_exp(e)) == hnf_rows(b.basis.at_exp(e))
