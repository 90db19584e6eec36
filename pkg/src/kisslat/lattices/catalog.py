"""Named lattices: the planar T-lattice, the Construction E ladder built from
it, the D4-based family in dimensions 4m, and Gram-only classics."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from importlib import resources

from ..algebra.dyadic import DyadicMatrix
from ..algebra.field import field_make
from ..algebra.matrix import hnf_rows
from ..codes.constructions import golay_code, parity_check_code, repetition_code
from .construct import construction_e_tlattice
from .lattice import DyadicLattice
from .tlattice import TLattice

E8_CARTAN = (
    (2, -1, 0, 0, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0, -1),
    (0, 0, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, 0),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, 0),
    (0, 0, -1, 0, 0, 0, 0, 2),
)


def z2() -> TLattice:
    """2Z^2 with T = rotation by pi/4 scaled by 1/sqrt 2, so T^2 = rot90 / 2."""
    h = Fraction(1, 2)
    T = DyadicMatrix.of([[h, -h], [h, h]])
    return TLattice(DyadicLattice.from_basis([[2, 0], [0, 2]], name="Z2"), T, 2, name="Z2")


@lru_cache(maxsize=None)
def _ladder(level: int) -> TLattice:
    """level 0: Z2, 1: D4, 2: E8, 3: L16, 4: L32bar; each step uses the
    [2,1,2] repetition code over the base's field."""
    if level == 0:
        return z2()
    base = _ladder(level - 1)
    names = {1: "D4", 2: "E8", 3: "L16", 4: "L32bar"}
    code = repetition_code(field_make(2, base.b), 2)
    return construction_e_tlattice(base, [code], names[level])


@lru_cache(maxsize=None)
def lambda_tilde(m: int) -> TLattice:
    """D4 with the [m, m-1, 2] parity-check code over GF(4): dimension 4m."""
    if m == 1:
        return _ladder(1)
    if not 2 <= m <= 6:
        raise ValueError("m must be in 1..6")
    code = parity_check_code(field_make(2, 2), m)
    return construction_e_tlattice(_ladder(1), [code], f"Lt{4 * m}")


def leech_generators() -> list[list[int]]:
    """Integer generators of sqrt(8) * Leech: 2c for Golay codewords c,
    4(e_i +- e_j), and (-3, 1, ..., 1)."""
    gens = [[2 * x for x in r] for r in golay_code().generator]
    for j in range(1, 24):
        for s in (1, -1):
            v = [0] * 24
            v[0], v[j] = 4, 4 * s
            gens.append(v)
    gens.append([-3] + [1] * 23)
    return gens


def leech_gram_from_golay() -> tuple[tuple[int, ...], ...]:
    H = hnf_rows(leech_generators())
    G = []
    for a in H:
        row = []
        for b in H:
            s = sum(x * y for x, y in zip(a, b))
            if s % 8:
                raise ArithmeticError("Leech Gram is not integral at scale 1/8")
            row.append(s // 8)
        G.append(tuple(row))
    return tuple(G)


def leech_gram_shipped() -> tuple[tuple[int, ...], ...]:
    from .io import parse_gram

    text = resources.files("kisslat.data").joinpath("leech.gram").read_text()
    return parse_gram(text)


def leech() -> DyadicLattice:
    return DyadicLattice.from_gram(leech_gram_shipped(), name="Leech")


def e8_cartan() -> DyadicLattice:
    return DyadicLattice.from_gram(E8_CARTAN, name="E8-cartan")


NAMES = ("Z2", "D4", "E8", "L16", "L32bar", "Lt4", "Lt8", "Lt12", "Lt16", "Lt20", "Lt24", "E8-cartan", "Leech")


def catalog(name: str) -> TLattice | DyadicLattice:
    ladder = {"Z2": 0, "D4": 1, "E8": 2, "L16": 3, "L32bar": 4}
    if name in ladder:
        return _ladder(ladder[name])
    if name.startswith("Lt") and name[2:].isdigit() and int(name[2:]) % 4 == 0:
        return lambda_tilde(int(name[2:]) // 4)
    if name == "E8-cartan":
        return e8_cartan()
    if name == "Leech":
        return leech()
    raise KeyError(f"unknown lattice {name!r}; known: {', '.join(NAMES)}")
