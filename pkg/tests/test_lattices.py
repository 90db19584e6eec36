from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from kisslat.algebra import DyadicMatrix, gf, int_det
from kisslat.codes import LinearCode, NestedCodeChain, extended_hamming_8, reed_muller
from kisslat.codes.constructions import parity_check_code, repetition_code
from kisslat.lattices import (
    DegenerateLatticeError,
    DyadicLattice,
    brute_force_shortest,
    catalog,
    construction_a,
    construction_d,
    construction_d_expected_det,
    construction_e,
    contains,
    format_lattice,
    format_tlattice,
    lambda_tilde,
    leech_gram_from_golay,
    lll_reduce,
    parse_lattice,
    parse_tlattice,
    same_lattice,
    shortest_vectors,
    theta_prefix,
    vectors_of_norm,
    verify_t_axioms,
)
from kisslat.lattices.catalog import E8_CARTAN, leech_gram_shipped
from kisslat.lattices.construct import construction_d_lifts, construction_e_lifts, norm
from kisslat.lattices.lll import DELTA, lll_gram


@st.composite
def int_bases(draw, lo=4, hi=6, entries=4):
    n = draw(st.integers(lo, hi))
    B = draw(st.lists(st.lists(st.integers(-entries, entries), min_size=n, max_size=n), min_size=n, max_size=n))
    if int_det(B) == 0:
        B = [[int(i == j) * (1 + abs(B[i][j])) for j in range(n)] for i in range(n)]
    return B


@st.composite
def unimodular(draw, n):
    """Product of random elementary integer row operations."""
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(draw(st.integers(1, 3 * n))):
        i, j = draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))
        if i != j:
            c = draw(st.integers(-2, 2))
            U[i] = [a + c * b for a, b in zip(U[i], U[j])]
    return U


# -- enumeration -------------------------------------------------------------

@given(int_bases())
def test_enumeration_matches_brute_force(B):
    lat = lll_reduce(DyadicLattice.from_basis(B))
    r = shortest_vectors(lat)
    bm, bc = brute_force_shortest([list(x) for x in lat.gram_num], 6)
    assert (r.min_norm, r.count) == (bm, bc)


@given(int_bases(4, 5), st.data())
def test_kissing_invariant_under_unimodular_change(B, data):
    base = DyadicLattice.from_basis(B)
    ref = shortest_vectors(base)
    for _ in range(5):
        U = data.draw(unimodular(len(B)))
        other = DyadicLattice.from_basis((DyadicMatrix.of(U) @ base.basis).num)
        r = shortest_vectors(other)
        assert (r.min_norm, r.count) == (ref.min_norm, ref.count)


@given(int_bases())
def test_lll_output_is_reduced(B):
    G = DyadicLattice.from_basis(B).gram_num
    R, H = lll_gram(G)
    Hf = np.array(H, dtype=object)
    assert abs(int_det(H)) == 1
    assert (Hf @ np.array(G, dtype=object) @ Hf.T).tolist() == R
    # size reduction and Lovasz condition through exact Gram-Schmidt
    n = len(R)
    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            mu[i][j] = (Fraction(R[i][j]) - sum(mu[j][k] * mu[i][k] * bstar[k] for k in range(j))) / bstar[j]
        bstar[i] = Fraction(R[i][i]) - sum(mu[i][k] ** 2 * bstar[k] for k in range(i))
    for i in range(n):
        for j in range(i):
            assert abs(mu[i][j]) <= Fraction(1, 2)
    for k in range(1, n):
        assert bstar[k] >= (DELTA - mu[k][k - 1] ** 2) * bstar[k - 1]


def test_jobs_do_not_change_results():
    L = catalog("L16").lattice
    a, b = shortest_vectors(L, jobs=1), shortest_vectors(L, jobs=4)
    assert (a.min_norm, a.count) == (b.min_norm, b.count) == (4, 4320)


def test_e8_theta_prefix():
    th = theta_prefix(DyadicLattice.from_gram(E8_CARTAN), 6)
    assert th == {0: 1, 2: 240, 4: 2160, 6: 6720}


def test_vectors_of_norm_are_correct():
    lat = DyadicLattice.from_gram(E8_CARTAN)
    vs = vectors_of_norm(lat, 2)
    assert len(vs) == 240 == len(set(vs))
    assert all(lat.norm(v) == 2 for v in vs)


def test_degenerate_inputs():
    with pytest.raises(DegenerateLatticeError):
        DyadicLattice.from_gram([[1, 2], [2, 1]])
    with pytest.raises(DegenerateLatticeError):
        DyadicLattice.from_basis([[1, 2], [2, 4]])


# -- Leech -------------------------------------------------------------------

def test_shipped_leech_gram_matches_golay_construction():
    G = leech_gram_from_golay()
    assert G == leech_gram_shipped()
    assert int_det([list(r) for r in G]) == 1
    assert min(G[i][i] for i in range(24)) == 4
    assert all(x % 2 == 0 for i in range(24) for x in [G[i][i]])


def test_leech_kissing():
    r = shortest_vectors(catalog("Leech"), jobs=2)
    assert (r.min_norm, r.count) == (4, 196560)


# -- Construction A / D ---------------------------------------------------------

def _e8_chain():
    return NestedCodeChain.build([LinearCode.full_space(gf(2), 8), extended_hamming_8()], [1, 4])


def test_construction_a_e8():
    L = construction_a(extended_hamming_8())
    r = shortest_vectors(L)
    assert (r.min_norm, r.count, L.det) == (4, 240, 256)


def _sandwich(L, n, a):
    outer = DyadicLattice.from_basis([[int(i == j) for j in range(n)] for i in range(n)]).scaled(1 - a)
    two = DyadicMatrix.of([[2 * int(i == j) for j in range(n)] for i in range(n)])
    return contains(L, two) and contains(outer, L.basis)


@pytest.mark.parametrize("chain", [
    _e8_chain,
    lambda: NestedCodeChain.build([LinearCode.full_space(gf(2), 16), reed_muller(2, 4), reed_muller(1, 4)],
                                  [1, 4, 8]),
    lambda: NestedCodeChain.build([LinearCode.full_space(gf(2), 32), reed_muller(3, 5), reed_muller(1, 5)],
                                  [1, 4, 16]),
])
def test_construction_d_sandwich_and_det(chain):
    ch = chain()
    L = construction_d(ch, check=False)
    assert _sandwich(L, ch.n, ch.depth)
    assert L.det == construction_d_expected_det(ch)


def test_construction_d_e8_density():
    ch = _e8_chain()
    L = construction_d(ch)
    r = shortest_vectors(L)
    assert (r.min_norm, r.count) == (4, 240)
    assert L.center_density_squared(r.min_norm) == Fraction(1, 256)


def test_construction_d_floor_check():
    ch = NestedCodeChain.build([LinearCode.full_space(gf(2), 16), reed_muller(2, 4), reed_muller(1, 4)])
    with pytest.raises(ValueError, match="4\\^2"):
        construction_d(ch)


@pytest.mark.parametrize("chain,kiss", [(_e8_chain, 240)])
def test_construction_d_lifts(chain, kiss):
    ch = chain()
    L = construction_d(ch)
    lifts = construction_d_lifts(ch)
    assert len(lifts) == 14 and {norm(v) for v in lifts} == {4}
    assert contains(L, DyadicMatrix.of([list(v) for v in lifts]))
    assert shortest_vectors(L).count >= 2 * len(lifts)


# -- T-lattices and Construction E ---------------------------------------------

@pytest.mark.parametrize("name", ["Z2", "D4", "E8"])
def test_t_axioms_hold(name):
    rep = verify_t_axioms(catalog(name))
    assert rep.ok, rep.failures()


def test_t_axioms_detect_a_bad_map():
    t = catalog("Z2")
    bad = type(t)(t.lattice, DyadicMatrix.of([[1, 0], [0, Fraction(1, 2)]]), 2, name="bad")
    assert not verify_t_axioms(bad).ok


@pytest.mark.parametrize("name,dim,kiss,det", [
    ("D4", 4, 24, 64), ("E8", 8, 240, 256), ("L16", 16, 4320, 256),
])
def test_e_ladder(name, dim, kiss, det):
    t = catalog(name)
    r = shortest_vectors(t.lattice)
    assert (t.m, r.min_norm, r.count, t.lattice.det) == (dim, 4, kiss, det)
    assert t.lattice.meta["m_bar"] == 4


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_lambda_tilde_family(m):
    t = lambda_tilde(m)
    r = shortest_vectors(t.lattice)
    assert r.min_norm == 4 == t.lattice.meta["m_bar"]
    assert r.count == 24 * m + 96 * m * (m - 1)


@pytest.mark.parametrize("base,q,n", [("Z2", 2, 4), ("Z2", 2, 8), ("D4", 4, 4)])
def test_two_level_construction_e_meets_m_bar(base, q, n):
    F = gf(q)
    ch = NestedCodeChain.build([LinearCode.full_space(F, n), parity_check_code(F, n), repetition_code(F, n)])
    L = construction_e(catalog(base), ch)
    assert shortest_vectors(L).min_norm == L.meta["m_bar"]


@pytest.mark.parametrize("base,q,n", [("Z2", 2, 2), ("D4", 4, 2), ("D4", 4, 3), ("D4", 4, 4), ("E8", 16, 2)])
def test_construction_e_lifts(base, q, n):
    b = catalog(base)
    code = parity_check_code(gf(q), n)
    L = construction_e(b, [code])
    lifts = construction_e_lifts(b, code)
    assert len(lifts) == code.weight_distribution[2]
    assert {norm(v) for v in lifts} == {L.meta["m_bar"]}
    assert contains(L, DyadicMatrix.of([list(v) for v in lifts]))
    assert shortest_vectors(L).count >= 2 * len(lifts)


def test_construction_e_field_mismatch():
    with pytest.raises(ValueError):
        construction_e(catalog("D4"), [parity_check_code(gf(2), 3)])


# -- IO ----------------------------------------------------------------------

def test_lattice_io_round_trip():
    L = catalog("E8").lattice
    back = parse_lattice(format_lattice(L))
    assert same_lattice(L, back)
    G = DyadicLattice.from_gram(E8_CARTAN)
    assert parse_lattice(format_lattice(G)).gram_num == G.gram_num


def test_tlattice_io_round_trip():
    t = catalog("D4")
    t.select_vr()
    back = parse_tlattice(format_tlattice(t))
    assert same_lattice(t.lattice, back.lattice)
    assert back.vr == t.vr and back.nu == t.nu
    assert verify_t_axioms(back).ok
