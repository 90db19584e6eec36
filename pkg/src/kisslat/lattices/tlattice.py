"""Lattices with a norm-shrinking map T, and an exact checker for the
properties Construction E relies on."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from ..algebra.dyadic import DyadicMatrix
from ..algebra.field import FiniteField, field_make
from ..algebra.matrix import GF2Basis, hnf_rows, solve_rational
from .enum import shortest_vectors, theta_prefix, vectors_of_norm
from .lattice import DyadicLattice


def _common_exp(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    """Integer numerators at the smallest common power-of-two denominator."""
    e = 0
    for r in rows:
        for x in r:
            d = x.denominator
            if d & (d - 1):
                raise ValueError(f"entry {x} is not dyadic")
            e = max(e, d.bit_length() - 1)
    return [[int(x * (1 << e)) for x in r] for r in rows], e


def lattice_from_rows(rows: Sequence[Sequence[Fraction]], name: str = "") -> DyadicLattice:
    nums, e = _common_exp(rows)
    return DyadicLattice.from_generators(nums, e, name)


def _coords(basis: list[list[Fraction]], v: Sequence[Fraction]) -> list[Fraction] | None:
    return solve_rational(basis, list(v))


def _mask(bits: Sequence[int]) -> int:
    return sum((int(b) & 1) << i for i, b in enumerate(bits))


@dataclass(eq=False)
class TLattice:
    """Lattice Lambda (basis form) with map T acting on column vectors
    (rows are mapped by v -> v T^t), period nu with T^nu = A/2, and the
    chosen minimal vectors v_{r_1..r_b} whose images generate T Lambda / Lambda."""

    lattice: DyadicLattice
    T: DyadicMatrix
    nu: int
    name: str = ""
    min_norm: Fraction | None = None
    vr: list[tuple[Fraction, ...]] | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.lattice.basis is None:
            raise ValueError("a T-lattice needs an explicit basis")
        m = self.lattice.dim
        if self.T.nrows != m or self.T.ncols != m:
            raise ValueError("T must be m x m")
        if self.nu < 1 or m % self.nu:
            raise ValueError(f"nu={self.nu} must divide m={m}")

    @property
    def m(self) -> int:
        return self.lattice.dim

    @property
    def b(self) -> int:
        return self.m // self.nu

    @property
    def q(self) -> int:
        return 1 << self.b

    @cached_property
    def field(self) -> FiniteField:
        return field_make(2, self.b)

    @cached_property
    def M(self) -> Fraction:
        if self.min_norm is not None:
            return Fraction(self.min_norm)
        return shortest_vectors(self.lattice).min_norm

    @cached_property
    def A(self) -> DyadicMatrix:
        return (self.T ** self.nu).scale(2)

    @cached_property
    def basis_rows(self) -> list[list[Fraction]]:
        return self.lattice.basis.to_fractions()

    @cached_property
    def image(self) -> DyadicLattice:
        """T Lambda."""
        TB = self.T.apply_rows(self.lattice.basis)
        return lattice_from_rows(TB.to_fractions(), f"T({self.name})")

    def apply(self, v: Sequence[Fraction], power: int = 1) -> tuple[Fraction, ...]:
        Tp = (self.T ** power).to_fractions()
        return tuple(sum((Tp[i][j] * v[j] for j in range(len(v))), Fraction(0)) for i in range(len(v)))

    @cached_property
    def minimal_vectors(self) -> list[tuple[Fraction, ...]]:
        coeffs = vectors_of_norm(self.lattice, self.M)
        B = self.basis_rows
        m = self.m
        return [tuple(sum((c * B[i][j] for i, c in enumerate(cf) if c), Fraction(0)) for j in range(m)) for cf in coeffs]

    @cached_property
    def _quotient(self):
        """(TLambda basis, GF(2) basis of Lambda's image mod 2 in TLambda coords)."""
        TB = self.image.basis.to_fractions()
        lam = GF2Basis()
        for row in self.basis_rows:
            x = _coords(TB, row)
            if x is None or any(c.denominator != 1 for c in x):
                return TB, None
            lam.add(_mask([int(c) for c in x]))
        return TB, lam

    def coset_key(self, w: Sequence[Fraction]) -> int | None:
        """Canonical class of w in T Lambda / Lambda (elementary abelian case)."""
        TB, lam = self._quotient
        if lam is None:
            return None
        x = _coords(TB, w)
        if x is None or any(c.denominator != 1 for c in x):
            raise ValueError("vector is not in T Lambda")
        return lam.reduce(_mask([int(c) for c in x]))

    def select_vr(self) -> list[tuple[Fraction, ...]]:
        """Greedy scan of minimal vectors, keeping those whose T-images are
        independent in T Lambda / Lambda, until b of them are found."""
        if self.vr is not None:
            return self.vr
        _, lam = self._quotient
        if lam is None:
            raise ValueError("Lambda is not contained in T Lambda")
        span = GF2Basis()
        for top, row in lam.rows.items():
            span.add(row)
        chosen = []
        for v in self.minimal_vectors:
            key = self.coset_key(self.apply(v))
            if span.add(key):
                chosen.append(v)
                if len(chosen) == self.b:
                    break
        self.vr = chosen
        return chosen

    def coset_minima(self, bound: Fraction | None = None) -> dict[int, tuple[Fraction, tuple[Fraction, ...]]]:
        """Shortest vector of T Lambda in each class of T Lambda / Lambda that
        has one of norm <= bound (default R^2): key -> (norm, vector)."""
        bound = self.R2() if bound is None else Fraction(bound)
        img = self.image
        basis = img.basis.to_fractions()
        out: dict[int, tuple[Fraction, tuple[Fraction, ...]]] = {}
        for nrm in sorted(theta_prefix(img, bound)):
            if nrm == 0:
                continue
            for cf in vectors_of_norm(img, nrm):
                w = tuple(sum((c * basis[i][j] for i, c in enumerate(cf) if c), Fraction(0)) for j in range(self.m))
                out.setdefault(self.coset_key(w), (nrm, w))
        out.pop(0, None)
        return out

    def R2(self) -> Fraction:
        v = self.select_vr()[0]
        Tv = self.apply(v)
        return sum((x * x for x in Tv), Fraction(0))

    def sigma(self, i: int, elem: int) -> tuple[Fraction, ...]:
        """sigma_i(elem) = sum_j alpha_j T^i v_{r_j}, alpha = polynomial-basis
        coordinates of elem in GF(2^b)."""
        if i < 1:
            raise ValueError("level must be >= 1")
        vr = self.select_vr()
        out = [Fraction(0)] * self.m
        for a, v in zip(self.field.coords(elem), vr):
            if a:
                Tv = self.apply(v, i)
                out = [x + y for x, y in zip(out, Tv)]
        return tuple(out)


def sigma_map(base: TLattice, i: int, elem: int) -> tuple[Fraction, ...]:
    return base.sigma(i, elem)


@dataclass
class AxiomReport:
    checks: dict[str, bool] = field(default_factory=dict)
    notes: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": self.checks, "notes": self.notes}


def verify_t_axioms(cand: TLattice) -> AxiomReport:
    rep = AxiomReport()
    m, b = cand.m, cand.b
    M = cand.M
    rep.notes["M"] = str(M)
    rep.notes["b"] = str(b)

    # (i) minimal vectors span Lambda
    mins = vectors_of_norm(cand.lattice, M)
    H = hnf_rows([list(c) for c in mins])
    rep.checks["minimal_vectors_span"] = len(H) == m and all(H[i][i] == 1 for i in range(m))

    # (v) |det T| = 2^-b
    dT = abs(cand.T.det())
    rep.checks["det_T"] = dT == Fraction(1, 1 << b)
    rep.notes["det_T"] = str(dT)

    # (iii) T^nu = A/2 with A an automorphism
    A = cand.A
    Af = A.to_fractions()
    ident = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
    orth = (A @ A.T()).to_fractions() == ident
    AB = A.apply_rows(cand.lattice.basis).to_fractions()
    B = cand.basis_rows
    keeps = True
    for row in AB:
        x = solve_rational(B, row)
        if x is None or any(c.denominator != 1 for c in x):
            keeps = False
            break
    rep.checks["T_power_half_automorphism"] = orth and keeps
    rep.notes["A"] = str([[str(x) for x in r] for r in Af])

    # (iv) Lambda inside T Lambda with index q; quotient elementary abelian
    TB, lam = cand._quotient
    contained = lam is not None
    rep.checks["contained_in_image"] = contained
    img = cand.image
    index = (cand.lattice.det / img.det) if contained else Fraction(0)
    rep.notes["index_squared"] = str(index)
    rep.checks["index_q"] = contained and index == Fraction(cand.q) ** 2
    if contained:
        two_img = [[2 * x for x in r] for r in TB]
        elem = all(
            (lambda s: s is not None and all(c.denominator == 1 for c in s))(solve_rational(B, r)) for r in two_img
        )
        rep.checks["quotient_elementary_abelian"] = elem
    else:
        rep.checks["quotient_elementary_abelian"] = False

    if not contained or not rep.checks["quotient_elementary_abelian"]:
        rep.checks["images_at_distance_R"] = False
        rep.checks["vr_generate_quotient"] = False
        return rep

    # (ii) every minimal v: |Tv|^2 = R^2 and no vector of Tv + Lambda is shorter
    vr = cand.select_vr()
    R2 = cand.R2()
    rep.notes["R2"] = str(R2)
    short_keys = {0}
    theta = theta_prefix(img, R2)
    for nrm in theta:
        if 0 < nrm < R2:
            basis = img.basis.to_fractions()
            for cf in vectors_of_norm(img, nrm):
                w = [sum((c * basis[i][j] for i, c in enumerate(cf) if c), Fraction(0)) for j in range(m)]
                short_keys.add(cand.coset_key(w))
    ok2 = True
    for v in cand.minimal_vectors:
        Tv = cand.apply(v)
        if sum((x * x for x in Tv), Fraction(0)) != R2 or cand.coset_key(Tv) in short_keys:
            ok2 = False
            break
    rep.checks["images_at_distance_R"] = ok2

    # the chosen images generate T Lambda / Lambda
    rep.checks["vr_generate_quotient"] = len(vr) == b

    # scaling factor t = R / sqrt(M): t^m should be 2^-b, i.e. (R^2/M)^m = 4^-b
    t2 = R2 / M
    rep.notes["t_squared"] = str(t2)
    rep.checks["t_power_matches_det"] = t2**m == Fraction(1, 1 << (2 * b))
    if t2 ** cand.nu == Fraction(1, 4):
        rep.notes["t_exponent"] = "t = 2^(-1/nu); a positive exponent would contradict |det T| = 2^-b"
    return rep
