"""Exact dyadic rationals n / 2^e and matrices over them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class NotDyadicError(ValueError):
    pass


def _v2(n: int) -> int:
    return (n & -n).bit_length() - 1


@dataclass(frozen=True, order=False)
class Dyadic:
    """Canonical n / 2^e: odd numerator, or 0 with e = 0.  e may not be negative;
    even integers are stored with e = 0."""

    num: int
    exp: int = 0

    def __post_init__(self):
        n, e = self.num, self.exp
        if n == 0:
            e = 0
        else:
            k = min(_v2(n), e) if e > 0 else 0
            n >>= k
            e -= k
            if e < 0:
                n <<= -e
                e = 0
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "exp", e)

    @classmethod
    def of(cls, x) -> "Dyadic":
        if isinstance(x, Dyadic):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        fr = Fraction(x)
        d = fr.denominator
        if d & (d - 1):
            raise NotDyadicError(f"{fr} is not dyadic")
        return cls(fr.numerator, d.bit_length() - 1)

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def _align(self, other: "Dyadic") -> tuple[int, int, int]:
        e = max(self.exp, other.exp)
        return self.num << (e - self.exp), other.num << (e - other.exp), e

    def __add__(self, other):
        other = Dyadic.of(other)
        a, b, e = self._align(other)
        return Dyadic(a + b, e)

    __radd__ = __add__

    def __neg__(self):
        return Dyadic(-self.num, self.exp)

    def __sub__(self, other):
        return self + (-Dyadic.of(other))

    def __rsub__(self, other):
        return Dyadic.of(other) - self

    def __mul__(self, other):
        other = Dyadic.of(other)
        return Dyadic(self.num * other.num, self.exp + other.exp)

    __rmul__ = __mul__

    def half(self, k: int = 1) -> "Dyadic":
        return Dyadic(self.num, self.exp + k)

    def __eq__(self, other) -> bool:
        try:
            o = Dyadic.of(other)
        except (NotDyadicError, TypeError, ValueError):
            return NotImplemented
        return (self.num, self.exp) == (o.num, o.exp)

    def __hash__(self) -> int:
        return hash((self.num, self.exp))

    def __lt__(self, other) -> bool:
        a, b, _ = self._align(Dyadic.of(other))
        return a < b

    def __le__(self, other) -> bool:
        return self == other or self < other

    def __repr__(self) -> str:
        return f"{self.num}/2^{self.exp}" if self.exp else str(self.num)


@dataclass(frozen=True)
class DyadicMatrix:
    """Matrix num / 2^exp with integer numerators, kept in lowest terms."""

    num: tuple[tuple[int, ...], ...]
    exp: int = 0

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.num)
        e = self.exp
        while e > 0 and all(x % 2 == 0 for r in rows for x in r):
            rows = tuple(tuple(x // 2 for x in r) for r in rows)
            e -= 1
        if e < 0:
            rows = tuple(tuple(x << -e for x in r) for r in rows)
            e = 0
        object.__setattr__(self, "num", rows)
        object.__setattr__(self, "exp", e)

    @classmethod
    def of(cls, rows: Sequence[Sequence]) -> "DyadicMatrix":
        ds = [[Dyadic.of(x) for x in r] for r in rows]
        e = max((d.exp for r in ds for d in r), default=0)
        return cls(tuple(tuple(d.num << (e - d.exp) for d in r) for r in ds), e)

    @classmethod
    def identity(cls, m: int) -> "DyadicMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(m)) for i in range(m)), 0)

    @classmethod
    def block_diag(cls, blocks: Sequence["DyadicMatrix"]) -> "DyadicMatrix":
        e = max(b.exp for b in blocks)
        size = sum(b.nrows for b in blocks)
        rows = []
        off = 0
        for b in blocks:
            sh = e - b.exp
            for r in b.num:
                row = [0] * size
                for j, x in enumerate(r):
                    row[off + j] = x << sh
                rows.append(tuple(row))
            off += b.ncols
        return cls(tuple(rows), e)

    @property
    def nrows(self) -> int:
        return len(self.num)

    @property
    def ncols(self) -> int:
        return len(self.num[0]) if self.num else 0

    def entries(self) -> list[list[Dyadic]]:
        return [[Dyadic(x, self.exp) for x in r] for r in self.num]

    def to_fractions(self) -> list[list[Fraction]]:
        d = 1 << self.exp
        return [[Fraction(x, d) for x in r] for r in self.num]

    def __matmul__(self, other: "DyadicMatrix") -> "DyadicMatrix":
        cols = list(zip(*other.num))
        rows = tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.num)
        return DyadicMatrix(rows, self.exp + other.exp)

    def __add__(self, other: "DyadicMatrix") -> "DyadicMatrix":
        e = max(self.exp, other.exp)
        a, b = e - self.exp, e - other.exp
        return DyadicMatrix(
            tuple(tuple((x << a) + (y << b) for x, y in zip(r, s)) for r, s in zip(self.num, other.num)),
            e,
        )

    def __neg__(self) -> "DyadicMatrix":
        return DyadicMatrix(tuple(tuple(-x for x in r) for r in self.num), self.exp)

    def __sub__(self, other: "DyadicMatrix") -> "DyadicMatrix":
        return self + (-other)

    def scale(self, c) -> "DyadicMatrix":
        c = Dyadic.of(c)
        return DyadicMatrix(tuple(tuple(x * c.num for x in r) for r in self.num), self.exp + c.exp)

    def __pow__(self, k: int) -> "DyadicMatrix":
        r = DyadicMatrix.identity(self.nrows)
        for _ in range(k):
            r = r @ self
        return r

    def T(self) -> "DyadicMatrix":
        return DyadicMatrix(tuple(zip(*self.num)), self.exp)

    def apply_rows(self, vectors: "DyadicMatrix") -> "DyadicMatrix":
        """Apply this map to each row vector: v -> M v, returned as rows."""
        return vectors @ self.T()

    def at_exp(self, e: int) -> tuple[tuple[int, ...], ...]:
        """Numerators at scale 2^-e (e must be >= self.exp)."""
        if e < self.exp:
            raise ValueError("cannot lower the exponent below the canonical one")
        sh = e - self.exp
        return tuple(tuple(x << sh for x in r) for r in self.num)

    def det(self) -> Fraction:
        from .matrix import int_det

        return Fraction(int_det(self.num), 1 << (self.exp * self.nrows))
