"""Nested code chains C_0 ⊇ C_1 ⊇ ... ⊇ C_a with certified distance floors."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from ..algebra.field import FiniteField
from ..algebra.matrix import GF2Basis, matrix_rref
from .linear import ENUMERATION_BUDGET, EnumerationBudgetError, LinearCode


class ChainError(ValueError):
    pass


@dataclass
class ChainReport:
    inclusions: list[bool] = field(default_factory=list)
    distances: list[int] = field(default_factory=list)
    floors_ok: list[bool] = field(default_factory=list)
    joint_basis_ok: bool = False

    @property
    def ok(self) -> bool:
        return all(self.inclusions) and all(self.floors_ok) and self.joint_basis_ok

    def lines(self) -> list[str]:
        out = []
        for i, (d, ok) in enumerate(zip(self.distances, self.floors_ok)):
            inc = "" if i == 0 else f" inclusion={'ok' if self.inclusions[i - 1] else 'FAIL'}"
            out.append(f"level {i}: d={d} floor={'ok' if ok else 'FAIL'}{inc}")
        out.append(f"joint basis: {'ok' if self.joint_basis_ok else 'FAIL'}")
        return out


def _joint_basis(codes: Sequence[LinearCode]) -> tuple[tuple[int, ...], ...]:
    """Basis c_1..c_n of F^n with c_1..c_{k_i} spanning C_i, built from the
    deepest code outwards."""
    F = codes[0].field
    n = codes[0].n
    basis: list[list[int]] = []
    for code in reversed(codes):
        for r in code.generator:
            if matrix_rref(basis + [list(r)], F)[1] > len(basis):
                basis.append(list(r))
    for j in range(n):
        e = [int(i == j) for i in range(n)]
        if len(basis) == n:
            break
        if matrix_rref(basis + [e], F)[1] > len(basis):
            basis.append(e)
    return tuple(tuple(r) for r in basis)


@dataclass(frozen=True)
class NestedCodeChain:
    """Codes C_0 ⊇ ... ⊇ C_a over one field and length, certified
    distance floors d_0 <= ... <= d_a, and a joint basis."""

    codes: tuple[LinearCode, ...]
    profile: tuple[int, ...]
    joint_basis: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, codes: Sequence[LinearCode], profile: Sequence[int] | None = None) -> "NestedCodeChain":
        """Check inclusions, certify min-distance(C_i) >= d_i and attach the
        joint basis.  Without a profile the exact distances are used."""
        codes = tuple(codes)
        if not codes:
            raise ChainError("empty chain")
        F, n = codes[0].field, codes[0].n
        for c in codes:
            if c.field != F or c.n != n:
                raise ChainError("all codes in a chain need the same field and length")
        for i in range(1, len(codes)):
            if not codes[i].is_subcode_of(codes[i - 1]):
                raise ChainError(f"C_{i} is not contained in C_{i - 1}")
        dists = [c.min_distance if c.k else c.n + 1 for c in codes]
        if profile is None:
            profile = dists
        profile = tuple(int(d) for d in profile)
        if len(profile) != len(codes):
            raise ChainError("profile length must match the number of codes")
        if any(b < a for a, b in zip(profile, profile[1:])):
            raise ChainError("distance profile must be non-decreasing")
        for i, (d, dd) in enumerate(zip(dists, profile)):
            if d < dd:
                raise ChainError(f"C_{i} has minimum distance {d} < floor {dd}")
        return cls(codes, profile, _joint_basis(codes))

    @property
    def field(self) -> FiniteField:
        return self.codes[0].field

    @property
    def n(self) -> int:
        return self.codes[0].n

    @property
    def depth(self) -> int:
        """a, the index of the deepest code."""
        return len(self.codes) - 1

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(c.k for c in self.codes)

    def top_is_full(self) -> bool:
        return self.codes[0].k == self.n

    def verify(self) -> ChainReport:
        rep = ChainReport()
        for i in range(1, len(self.codes)):
            rep.inclusions.append(self.codes[i].is_subcode_of(self.codes[i - 1]))
        for c, d in zip(self.codes, self.profile):
            dist = c.min_distance if c.k else c.n + 1
            rep.distances.append(dist)
            rep.floors_ok.append(dist >= d)
        F = self.field
        jb = [list(r) for r in self.joint_basis]
        ok = matrix_rref(jb, F)[1] == self.n if jb else self.n == 0
        for c in self.codes:
            head = jb[: c.k]
            ok = ok and all(c.contains(r) for r in head)
        rep.joint_basis_ok = ok
        return rep

    def __repr__(self) -> str:
        parts = " ⊇ ".join(f"[{c.n},{c.k},{d}]" for c, d in zip(self.codes, self.profile))
        return f"NestedCodeChain({parts} over GF({self.field.q}))"


# -- greedy completion -------------------------------------------------------

def check_chain(codes: Sequence[LinearCode], profile: Sequence[int] | None = None) -> ChainReport:
    """Level-by-level report for codes that may not form a valid chain."""
    rep = ChainReport()
    dists = [c.min_distance if c.k else c.n + 1 for c in codes]
    floors = list(profile) if profile is not None else dists
    if len(floors) != len(codes):
        raise ChainError("profile length must match the number of codes")
    for i in range(1, len(codes)):
        same = codes[i].field == codes[i - 1].field and codes[i].n == codes[i - 1].n
        rep.inclusions.append(same and codes[i].is_subcode_of(codes[i - 1]))
    rep.distances = dists
    rep.floors_ok = [d >= f for d, f in zip(dists, floors)]
    if all(rep.inclusions) and all(b >= a for a, b in zip(floors, floors[1:])):
        rep.joint_basis_ok = NestedCodeChain(tuple(codes), tuple(floors), _joint_basis(codes)).verify().joint_basis_ok
    return rep


def _candidates(F: FiniteField, n: int, w_min: int) -> Iterator[tuple[int, ...]]:
    """Vectors by increasing weight, supports in lexicographic order, first
    nonzero symbol normalized to 1."""
    nonzero = list(range(1, F.q))
    for w in range(max(w_min, 1), n + 1):
        for supp in itertools.combinations(range(n), w):
            for vals in itertools.product(nonzero, repeat=w - 1):
                v = [0] * n
                v[supp[0]] = 1
                for j, x in zip(supp[1:], vals):
                    v[j] = x
                yield tuple(v)


class _BinaryCosets:
    """Coset bookkeeping for a binary code via its reduced basis on bitmasks."""

    def __init__(self, code_rows: Sequence[Sequence[int]], n: int, floor: int):
        self.n = n
        self.floor = floor
        self.basis = GF2Basis()
        for r in code_rows:
            self.basis.add(sum(1 << j for j, x in enumerate(r) if x))
        self.ball = sum(math.comb(n, w) for w in range(floor))
        self._refresh()

    def _refresh(self):
        if self.ball <= 1 << 22:
            self.bad = {
                self.basis.reduce(sum(1 << j for j in S))
                for w in range(self.floor)
                for S in itertools.combinations(range(self.n), w)
            }
        else:
            k = len(self.basis)
            if 1 << k > ENUMERATION_BUDGET:
                raise EnumerationBudgetError("coset check too large for this floor")
            self.bad = None

    def key(self, v: int) -> int:
        return self.basis.reduce(v)

    def valid(self, v: int) -> bool:
        if self.bad is not None:
            return self.key(v) not in self.bad
        rows = list(self.basis.rows.values())
        best = self.n
        for mask in range(1 << len(rows)):
            x = v
            for i, r in enumerate(rows):
                if mask >> i & 1:
                    x ^= r
            best = min(best, bin(x).count("1"))
            if best < self.floor:
                return False
        return True

    def add(self, v: int):
        self.basis.add(v)
        self._refresh()

    @property
    def k(self) -> int:
        return len(self.basis)


def _extend_binary(code: LinearCode, floor: int, target: int | None) -> LinearCode:
    n = code.n
    cos = _BinaryCosets(code.generator, n, floor)
    rows = [list(r) for r in code.generator]
    while target is None or cos.k < target:
        seen: set[int] = set()
        n_cosets = 1 << (n - cos.k)
        found = None
        for w in range(floor, n + 1):
            for supp in itertools.combinations(range(n), w):
                v = sum(1 << j for j in supp)
                key = cos.key(v)
                if key in seen:
                    continue
                seen.add(key)
                if cos.valid(v):
                    found = supp
                    break
                if len(seen) + (len(cos.bad) if cos.bad is not None else 0) >= n_cosets:
                    break
            if found is not None or len(seen) + (len(cos.bad) if cos.bad is not None else 0) >= n_cosets:
                break
        if found is None:
            break
        vec = [0] * n
        for j in found:
            vec[j] = 1
        rows.append(vec)
        cos.add(sum(1 << j for j in found))
    return LinearCode(code.field, tuple(tuple(r) for r in rows), n)


def _extend_generic(code: LinearCode, floor: int, target: int | None) -> LinearCode:
    F = code.field
    rows = [list(r) for r in code.generator]
    cur = code
    while target is None or cur.k < target:
        if F.q ** (cur.k + 1) > ENUMERATION_BUDGET:
            raise EnumerationBudgetError("greedy extension beyond the enumeration budget")
        found = None
        for v in _candidates(F, code.n, floor):
            if cur.contains(v):
                continue
            trial = LinearCode(F, tuple(tuple(r) for r in rows + [list(v)]), code.n)
            if trial.min_distance >= floor:
                found = v
                break
        if found is None:
            break
        rows.append(list(found))
        cur = LinearCode(F, tuple(tuple(r) for r in rows), code.n)
    return cur


def chain_complete(top: LinearCode, profile: Sequence[int], dims: Sequence[int | None] | None = None) -> NestedCodeChain:
    """Grow a chain upward from ``top`` (the deepest code C_a).

    Each C_i (0 < i < a) is C_{i+1} plus greedily chosen vectors, scanned by
    weight and then lexicographic support, accepted while the distance floor
    d_i survives; ``dims`` optionally caps each level's dimension.  C_0 is the
    full space, so d_0 must be 1.
    """
    profile = list(profile)
    a = len(profile) - 1
    if a < 1:
        raise ChainError("profile needs at least two levels")
    if profile[0] != 1:
        raise ChainError("d_0 must be 1 (C_0 is the full space)")
    if any(b < a_ for a_, b in zip(profile, profile[1:])):
        raise ChainError("distance profile must be non-decreasing")
    if top.k and top.min_distance < profile[-1]:
        raise ChainError(f"top code has distance {top.min_distance} < d_a = {profile[-1]}")
    dims = list(dims) if dims is not None else [None] * (a + 1)
    levels = [top]
    cur = top
    for i in range(a - 1, 0, -1):
        if cur.field.q == 2:
            cur = _extend_binary(cur, profile[i], dims[i])
        else:
            cur = _extend_generic(cur, profile[i], dims[i])
        levels.append(cur)
    levels.append(LinearCode.full_space(top.field, top.n))
    return NestedCodeChain.build(list(reversed(levels)), profile)
