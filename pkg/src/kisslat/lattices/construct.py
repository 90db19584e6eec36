"""Lattices from binary codes (A, D) and from codes over GF(2^b) on a
T-lattice (E)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..algebra.dyadic import DyadicMatrix
from ..codes.chain import NestedCodeChain
from ..codes.linear import LinearCode
from .lattice import DyadicLattice
from .tlattice import TLattice, lattice_from_rows


class ConstructionError(ValueError):
    pass


def construction_a(code: LinearCode) -> DyadicLattice:
    """(2Z)^n plus 0/1 lifts of the codewords."""
    if code.q != 2:
        raise ConstructionError("Construction A needs a binary code")
    n = code.n
    gens = [[2 * int(i == j) for j in range(n)] for i in range(n)] + [list(r) for r in code.generator]
    return DyadicLattice.from_generators(gens, 0, f"A({code.name or code})")


def _levels(chain) -> list[LinearCode]:
    """C_1..C_a: a NestedCodeChain contributes every code after C_0."""
    if isinstance(chain, NestedCodeChain):
        return list(chain.codes[1:])
    return list(chain)


def construction_d(chain: NestedCodeChain, check: bool = True) -> DyadicLattice:
    """(2Z)^n plus c_j 2^{1-i} for i = 1..a and k_{i+1} < j <= k_i, with the
    c_j taken from the chain's joint basis.  The basis is returned at scale
    2^{-(a-1)} so its numerators are integers."""
    levels = list(chain.codes[1:])
    a = len(levels)
    n = chain.n
    if chain.field.q != 2:
        raise ConstructionError("Construction D needs binary codes")
    if check:
        for i, (c, d) in enumerate(zip(levels, chain.profile[1:]), start=1):
            if d < 4**i:
                raise ConstructionError(f"level {i} floor d={d} < 4^{i}; the minimum-norm guarantee needs d_i >= 4^i")
    e = max(a - 1, 0)
    gens = [[(2 << e) * int(i == j) for j in range(n)] for i in range(n)]
    ks = [c.k for c in levels] + [0]
    jb = chain.joint_basis
    for i in range(1, a + 1):
        for j in range(ks[i], ks[i - 1]):
            gens.append([x << (e + 1 - i) for x in jb[j]])
    lat = DyadicLattice.from_generators(gens, e, f"D(n={n},a={a})")
    lat.meta.update({"K": sum(ks[:-1]), "n": n, "a": a})
    return lat


def construction_d_expected_det(chain: NestedCodeChain) -> Fraction:
    """Gram determinant 2^{2n - 2K}, K = k_1 + ... + k_a."""
    K = sum(c.k for c in chain.codes[1:])
    return Fraction(2) ** (2 * chain.n - 2 * K)


def m_bar(base: TLattice, distances: Sequence[int]) -> Fraction:
    """min(M, min_i d_i R^{2i} M^{1-i}) over levels i = 1..a."""
    M = base.M
    R2 = base.R2()
    vals = [M] + [d * R2**i * M ** (1 - i) for i, d in enumerate(distances, start=1)]
    return min(vals)


def construction_e_generators(base: TLattice, levels: Sequence[LinearCode], bases: Sequence[Sequence[Sequence[int]]] | None = None) -> list[list[Fraction]]:
    m = base.m
    F = base.field
    n = levels[0].n if levels else 0
    B = base.basis_rows
    gens: list[list[Fraction]] = []
    for s in range(n):
        for row in B:
            v = [Fraction(0)] * (m * n)
            v[s * m:(s + 1) * m] = row
            gens.append(v)
    omegas = [F.pow(F.gen, t) if F.h > 1 else 1 for t in range(F.h)]
    for i, code in enumerate(levels, start=1):
        rows = bases[i - 1] if bases is not None else code.generator
        for c in rows:
            for w in omegas:
                v: list[Fraction] = []
                for x in c:
                    v.extend(base.sigma(i, F.mul(w, x)))
                gens.append(v)
    return gens


def construction_e(base: TLattice, chain) -> DyadicLattice:
    """Lambda^n plus sigma_i(omega^t c_j) for each level i, with c_j spanning
    C_i (the joint basis when a NestedCodeChain is given)."""
    levels = _levels(chain)
    if not levels:
        raise ConstructionError("Construction E needs at least one code")
    for c in levels:
        if c.field.q != base.q or c.field.p != 2:
            raise ConstructionError(f"code over GF({c.field.q}) does not match the base field GF({base.q})")
        if c.n != levels[0].n:
            raise ConstructionError("codes must share one length")
    n = levels[0].n
    if base.m * n > 64:
        raise ConstructionError(f"dimension {base.m * n} beyond the supported range")
    bases = None
    if isinstance(chain, NestedCodeChain):
        jb = chain.joint_basis
        bases = [jb[: c.k] for c in levels]
    gens = construction_e_generators(base, levels, bases)
    lat = lattice_from_rows(gens, f"E({base.name},n={n},a={len(levels)})")
    dists = [c.min_distance for c in levels]
    lat.meta.update({"m_bar": m_bar(base, dists), "distances": dists})
    return lat


def construction_e_tlattice(base: TLattice, chain, name: str = "") -> TLattice:
    """Construction E output as a T-lattice with T applied blockwise; b
    becomes n*b."""
    lat = construction_e(base, chain)
    n = lat.dim // base.m
    T = DyadicMatrix.block_diag([base.T] * n)
    return TLattice(DyadicLattice(basis=lat.basis, name=name or lat.name, meta=lat.meta), T, base.nu,
                    name=name or lat.name)


def construction_d_lifts(chain: NestedCodeChain) -> list[tuple[Fraction, ...]]:
    """2^{1-a} c for every minimum-weight c in the last code C_a."""
    a = chain.depth
    s = Fraction(1, 1 << (a - 1))
    return [tuple(s * x for x in c) for c in chain.codes[-1].minimum_weight_words()]


def construction_e_lifts(base: TLattice, code: LinearCode) -> list[tuple[Fraction, ...]]:
    """Shortest vector of sigma_1(c) + Lambda^n for every minimum-weight c of
    a single-level code, assembled blockwise from coset minima."""
    mins = base.coset_minima()
    out = []
    for c in code.minimum_weight_words():
        v: list[Fraction] = []
        for x in c:
            if x:
                key = base.coset_key(base.sigma(1, x))
                if key not in mins:
                    raise ConstructionError("a symbol's coset has no vector of norm <= R^2")
                v.extend(mins[key][1])
            else:
                v.extend([Fraction(0)] * base.m)
        out.append(tuple(v))
    return out


def norm(v) -> Fraction:
    return sum((Fraction(x) ** 2 for x in v), Fraction(0))
