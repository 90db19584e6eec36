"""Finite fields GF(p^h) in a polynomial basis.

Elements are plain ints: the element c_0 + c_1 w + ... + c_{h-1} w^{h-1}
(w a root of the modulus) is stored as sum(c_i * p**i).  This index is also
the symbol encoding used in code files.

Multiplication goes through exp/log tables, built lazily the first time a
product is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

MAX_FIELD_ORDER = 1 << 16


class ReducibleModulusError(ValueError):
    def __init__(self, modulus, factor):
        self.modulus = tuple(modulus)
        self.factor = tuple(factor)
        super().__init__(
            f"modulus {_fmt(modulus)} is reducible: divisible by {_fmt(factor)}"
        )


def _fmt(coeffs) -> str:
    return ",".join(str(c) for c in coeffs)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p**h; raise if q is not a prime power."""
    ps = prime_factors(q) if q > 1 else []
    if len(ps) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = ps[0]
    h = 0
    while q > 1:
        q //= p
        h += 1
    return p, h


# -- raw GF(p)[x] helpers on low-first coefficient lists ---------------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = [x % p for x in a]
    _trim(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        shift = len(a) - 1 - dm
        c = a[-1] * inv_lead % p
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def monic_polys(p: int, d: int) -> Iterator[tuple[int, ...]]:
    """All monic degree-d polynomials over GF(p), in increasing integer order."""
    for idx in range(p**d):
        c = []
        for _ in range(d):
            c.append(idx % p)
            idx //= p
        yield tuple(c) + (1,)


def find_factor_prime_field(f: Sequence[int], p: int) -> tuple[int, ...] | None:
    """Trial division over GF(p): a monic factor of degree <= deg/2, or None."""
    d = len(f) - 1
    for e in range(1, d // 2 + 1):
        for g in monic_polys(p, e):
            if not _pmod(f, g, p):
                return g
    return None


@lru_cache(maxsize=None)
def least_irreducible(p: int, h: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree h over GF(p) in integer order.

    The integer order compares coefficient lists from the leading term down,
    which is the lexicographic order on the written polynomial.
    """
    for f in monic_polys(p, h):
        if h == 1 or find_factor_prime_field(f, p) is None:
            return f
    raise AssertionError("no irreducible polynomial found")


class FiniteField:
    """GF(p^h) with a fixed monic irreducible modulus over GF(p)."""

    def __init__(self, p: int, h: int, modulus: Sequence[int]):
        self.p = p
        self.h = h
        self.modulus = tuple(modulus)
        self.q = p**h

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.h}; {_fmt(self.modulus)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.h, self.modulus) == (
            other.p,
            other.h,
            other.modulus,
        )

    def __hash__(self) -> int:
        return hash((self.p, self.h, self.modulus))

    def __reduce__(self):
        return (field_make, (self.p, self.h, self.modulus))

    # -- encoding -----------------------------------------------------------
    def coords(self, a: int) -> tuple[int, ...]:
        """Polynomial-basis coordinates (c_0, ..., c_{h-1})."""
        p = self.p
        out = []
        for _ in range(self.h):
            out.append(a % p)
            a //= p
        return tuple(out)

    def from_coords(self, c: Sequence[int]) -> int:
        v = 0
        for x in reversed(list(c)):
            v = v * self.p + (x % self.p)
        return v

    def elements(self) -> range:
        return range(self.q)

    def __call__(self, a: int) -> "FieldElem":
        return FieldElem(self, a % self.q if self.h == 1 else a)

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def gen(self) -> int:
        """The class of x, i.e. w in the polynomial basis (1 in GF(p))."""
        return self.p if self.h > 1 else 1

    # -- additive structure ---------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.h == 1:
            return (a + b) % self.p
        ca, cb = self.coords(a), self.coords(b)
        return self.from_coords([x + y for x, y in zip(ca, cb)])

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.h == 1:
            return (-a) % self.p
        return self.from_coords([-x for x in self.coords(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def scale(self, c: int, a: int) -> int:
        """Multiply by an integer (an element of the prime field)."""
        c %= self.p
        if self.h == 1:
            return c * a % self.p
        return self.from_coords([c * x for x in self.coords(a)])

    # -- multiplicative structure -------------------------------------------
    def _mul_raw(self, a: int, b: int) -> int:
        if self.h == 1:
            return a * b % self.p
        if self.p == 2:
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a >> self.h & 1:
                    a ^= self._mod_int
            return r
        ca, cb = self.coords(a), self.coords(b)
        prod = [0] * (2 * self.h - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        return self.from_coords(_pmod(prod, self.modulus, self.p) + [0] * self.h)

    @cached_property
    def _mod_int(self) -> int:
        return sum(c << i for i, c in enumerate(self.modulus))

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    @cached_property
    def generator(self) -> int:
        """Least element (by index) generating the multiplicative group."""
        n = self.q - 1
        if n == 1:
            return 1
        fs = prime_factors(n)
        for g in range(2, self.q):
            if all(self._pow_raw(g, n // f) != 1 for f in fs):
                return g
        raise AssertionError("multiplicative group is not cyclic; bad modulus")

    @cached_property
    def _tables(self) -> tuple[list[int], list[int]]:
        n = self.q - 1
        exp = [0] * (2 * n)
        log = [0] * self.q
        x = 1
        g = self.generator
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._mul_raw(x, g)
        if x != 1:
            raise AssertionError("generator order mismatch")
        exp[n:] = exp[:n]
        return exp, log

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.h == 1:
            return a * b % self.p
        exp, log = self._tables
        return exp[log[a] + log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.h == 1:
            return pow(a, self.p - 2, self.p)
        exp, log = self._tables
        return exp[(self.q - 1 - log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        if self.h == 1:
            return pow(a, e, self.p)
        exp, log = self._tables
        return exp[log[a] * e % (self.q - 1)]

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def subfield_elements(self, order: int) -> list[int]:
        """Elements of the subfield of the given order: roots of x^order - x."""
        return [a for a in self.elements() if self.pow(a, order) == a]

    def mul_table(self):
        import numpy as np

        t = np.zeros((self.q, self.q), dtype=np.int64)
        for a in range(1, self.q):
            for b in range(1, self.q):
                t[a, b] = self.mul(a, b)
        return t


@dataclass(frozen=True)
class FieldElem:
    """An element of a FiniteField with arithmetic operators."""

    field: FiniteField
    value: int

    def _v(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.value
        return self.field.scale(int(other), 1)

    def __add__(self, other):
        return FieldElem(self.field, self.field.add(self.value, self._v(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.field, self.field.sub(self.value, self._v(other)))

    def __rsub__(self, other):
        return FieldElem(self.field, self.field.sub(self._v(other), self.value))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return FieldElem(self.field, self.field.mul(self.value, self._v(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElem(self.field, self.field.div(self.value, self._v(other)))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow(self.value, e))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def coords(self) -> tuple[int, ...]:
        return self.field.coords(self.value)

    def frobenius(self):
        return self ** self.field.p

    def __repr__(self) -> str:
        return f"{self.value}@GF({self.field.q})"


@lru_cache(maxsize=None)
def _field_cached(p: int, h: int, modulus: tuple[int, ...]) -> FiniteField:
    return FiniteField(p, h, modulus)


def field_make(p: int, h: int = 1, modulus: Sequence[int] | None = None) -> FiniteField:
    """Build GF(p^h).

    Parameters
    ----------
    p, h : int
        Characteristic and extension degree, with p**h <= 2**16.
    modulus : sequence of int, optional
        Monic degree-h polynomial over GF(p), low degree first.  Defaults to
        the least monic irreducible in integer (lexicographic) order.

    Raises
    ------
    ReducibleModulusError
        If the supplied modulus has a nontrivial factor; the error carries it.
    """
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if h < 1:
        raise ValueError("extension degree must be >= 1")
    if p**h > MAX_FIELD_ORDER:
        raise ValueError(f"field order {p}^{h} exceeds the 2^16 limit")
    if modulus is None:
        modulus = least_irreducible(p, h)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != h + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {h}")
        if h > 1:
            fac = find_factor_prime_field(modulus, p)
            if fac is not None:
                raise ReducibleModulusError(modulus, fac)
    return _field_cached(p, h, tuple(modulus))


def gf(q: int) -> FiniteField:
    """Default field of order q."""
    p, h = prime_power(q)
    return field_make(p, h)
