"""Univariate polynomials over a FiniteField.

Coefficients are field-element ints, stored low degree first and trimmed so the
leading coefficient is nonzero.  Serialized as comma-separated decimals,
low degree first: ``1,1,0,1`` is 1 + T + T^3.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .field import FiniteField, gf

MAX_ENUMERATION = 1 << 20


def _trimmed(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    field: FiniteField
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trimmed(self.coeffs))

    @classmethod
    def monomial(cls, field: FiniteField, d: int, c: int = 1) -> "Polynomial":
        return cls(field, (0,) * d + (c,))

    @classmethod
    def parse(cls, field: FiniteField, text: str) -> "Polynomial":
        return cls(field, tuple(int(t) for t in text.split(",") if t.strip()))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def pretty(self, var: str = "T") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
            coef = str(c) if (c != 1 or i == 0) else ""
            terms.append(coef + mono)
        return " + ".join(terms)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: "Polynomial") -> "Polynomial":
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a = a + (0,) * (n - len(a))
        b = b + (0,) * (n - len(b))
        return Polynomial(F, tuple(F.add(x, y) for x, y in zip(a, b)))

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, tuple(self.field.neg(x) for x in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        F = self.field
        if not self.coeffs or not other.coeffs:
            return Polynomial(F, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Polynomial(F, tuple(out))

    def __pow__(self, e: int) -> "Polynomial":
        r = Polynomial(self.field, (1,))
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def __divmod__(self, other: "Polynomial"):
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dq = len(r) - len(other.coeffs)
        if dq < 0:
            return Polynomial(F, ()), self
        quo = [0] * (dq + 1)
        inv_lead = F.inv(other.coeffs[-1])
        dm = other.degree
        for shift in range(dq, -1, -1):
            c = F.mul(r[shift + dm], inv_lead)
            quo[shift] = c
            if c:
                for i, m in enumerate(other.coeffs):
                    r[shift + i] = F.sub(r[shift + i], F.mul(c, m))
        return Polynomial(F, tuple(quo)), Polynomial(F, tuple(r))

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __call__(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def monic(self) -> "Polynomial":
        F = self.field
        inv = F.inv(self.coeffs[-1])
        return Polynomial(F, tuple(F.mul(c, inv) for c in self.coeffs))

    def roots(self) -> list[int]:
        return [x for x in self.field.elements() if self(x) == 0]


def all_monic(field: FiniteField, d: int) -> Iterator[Polynomial]:
    q = field.q
    for idx in range(q**d):
        c = []
        for _ in range(d):
            c.append(idx % q)
            idx //= q
        yield Polynomial(field, tuple(c) + (1,))


def find_factor(f: Polynomial) -> Polynomial | None:
    """A monic factor of degree 1..deg(f)//2 by trial division, or None."""
    for e in range(1, f.degree // 2 + 1):
        for g in all_monic(f.field, e):
            if (f % g).is_zero():
                return g
    return None


def is_irreducible(f: Polynomial) -> bool:
    return f.degree >= 1 and find_factor(f) is None


def irreducible_monics(q: int, s: int, field: FiniteField | None = None) -> list[Polynomial]:
    """All monic irreducible degree-s polynomials over GF(q).

    Sieve: every reducible monic is a product of a monic irreducible of degree
    e <= s/2 and a monic of degree s-e, so marking those products leaves
    exactly the irreducibles.  Output is in increasing integer order.
    """
    if s < 1:
        raise ValueError("degree must be >= 1")
    if q**s > MAX_ENUMERATION:
        raise ValueError(f"q^s = {q}^{s} exceeds the 2^20 enumeration budget")
    F = field if field is not None else gf(q)
    if s == 1:
        return list(all_monic(F, 1))

    def index(p: Polynomial) -> int:
        v = 0
        for c in reversed(p.coeffs[:-1]):
            v = v * q + c
        return v

    reducible = bytearray(q**s)
    for e in range(1, s // 2 + 1):
        for g in irreducible_monics(q, e, F):
            for h in all_monic(F, s - e):
                reducible[index(g * h)] = 1
    return [p for i, p in enumerate(all_monic(F, s)) if not reducible[i]]


def count_irreducible(q: int, s: int) -> int:
    """Necklace formula (1/s) sum_{d|s} mu(d) q^(s/d), as an independent count."""
    def mobius(n: int) -> int:
        res, f = 1, 2
        while f * f <= n:
            if n % f == 0:
                n //= f
                if n % f == 0:
                    return 0
                res = -res
            f += 1
        return -res if n > 1 else res

    return sum(mobius(d) * q ** (s // d) for d in range(1, s + 1) if s % d == 0) // s
