import math

import pytest
from hypothesis import given, strategies as st

from kisslat.algebra import gf, matrix_rref
from kisslat.codes import (
    ChainError,
    EnumerationBudgetError,
    LinearCode,
    NestedCodeChain,
    ag_code,
    chain_complete,
    check_chain,
    elliptic_y2_y_x3_data,
    extended_hamming_8,
    golay_code,
    light_vector_bound,
    min_distance,
    parity_check_code,
    projective_line_data,
    reed_muller,
    reed_solomon,
    repetition_code,
    rs_nested,
    simplex_concat,
    simplex_inner,
    weight_count,
)
from kisslat.codes.io import read_chain, read_code, read_codes, weights_csv, write_chain, write_code


def random_code(draw_rows, q, n):
    F = gf(q)
    rows = [r for r in draw_rows if any(r)]
    if not rows:
        rows = [[1] + [0] * (n - 1)]
    return LinearCode.from_rows(F, rows, n)


@st.composite
def codes(draw, qs=(2, 3, 4), max_n=16):
    q = draw(st.sampled_from(qs))
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, min(n, 4 if q > 2 else 8)))
    rows = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n), min_size=k, max_size=k))
    return random_code(rows, q, n)


def same_row_space(a: LinearCode, b: LinearCode) -> bool:
    return a.k == b.k and a.is_subcode_of(b)


@given(codes())
def test_dual_is_an_involution(c):
    assert same_row_space(c.dual().dual(), c)
    assert c.dual().k == c.n - c.k


@given(codes())
def test_singleton_bound(c):
    assert c.min_distance <= c.n - c.k + 1


@given(codes())
def test_distribution_sums_to_code_size(c):
    dist = c.weight_distribution
    assert sum(dist) == c.q**c.k and dist[0] == 1
    assert c.min_distance == next(w for w in range(1, c.n + 1) if dist[w])


@given(codes(max_n=10))
def test_zero_set_count_matches_distribution(c):
    w = c.min_distance
    assert weight_count(c, w) == c.weight_distribution[w]


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9])
def test_reed_solomon_is_mds(q):
    for a in range(q - 1):
        if q ** (a + 1) > 2**24:
            break
        c = reed_solomon(q, a)
        assert (c.n, c.k) == (q, a + 1)
        assert c.min_distance == q - a


def test_frozen_distributions():
    # independent values: MDS weight formula and classical tables
    assert reed_solomon(8, 4).weight_distribution[4] == 490
    assert extended_hamming_8().weight_distribution == (1, 0, 0, 0, 14, 0, 0, 0, 1)
    g = golay_code().weight_distribution
    assert {w: c for w, c in enumerate(g) if c} == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}
    assert reed_muller(3, 5).k == 26 and reed_muller(3, 5).min_distance == 4
    assert reed_muller(1, 5).weight_distribution[16] == 62


def test_mds_weight_formula():
    # A_d = (q - 1) C(n, d) for MDS codes of dimension k (weight d = n - k + 1)
    for q in (4, 8):
        for a in (1, 2, 3):
            c = reed_solomon(q, a)
            d = q - a
            assert c.weight_distribution[d] == (q - 1) * math.comb(q, d)


def test_rs16_over_budget_uses_zero_sets():
    c = reed_solomon(16, 8)
    with pytest.raises(EnumerationBudgetError):
        c.weight_distribution
    assert weight_count(c, 8) == 15 * math.comb(16, 8)


def test_ag_codes():
    line = ag_code(projective_line_data(4, 2))
    assert (line.n, line.k, line.min_distance) == (4, 3, 2)
    e3 = ag_code(elliptic_y2_y_x3_data(3))
    assert (e3.n, e3.k, e3.min_distance) == (8, 3, 5)
    e7 = ag_code(elliptic_y2_y_x3_data(7))
    assert e7.k == 7 and e7.min_distance >= 1


@pytest.mark.parametrize("s", [1, 2, 3])
def test_simplex_inner_is_one_weight(s):
    c = simplex_inner(s)
    q = 1 << (2 * s)
    assert (c.n, c.k) == (q, 2 * s)
    assert {w: n for w, n in enumerate(c.weight_distribution) if n and w} == {q // 2: q - 1}


@pytest.mark.parametrize("outer", [
    lambda: reed_solomon(4, 1),
    lambda: parity_check_code(gf(4), 3),
    lambda: LinearCode.from_rows(gf(16), [[1, 2, 3, 5], [0, 1, 7, 9]]),
])
def test_concatenation_weight_law(outer):
    C = outer()
    s = C.field.h // 2
    half = C.q // 2
    B = simplex_concat(s, outer=C)
    assert B.n == C.q * C.n and B.k == C.k * C.field.h
    expected = [0] * (B.n + 1)
    for w, count in enumerate(C.weight_distribution):
        expected[w * half] += count
    assert list(B.weight_distribution) == expected


def test_chain_build_and_reverify():
    F = gf(2)
    ch = NestedCodeChain.build([LinearCode.full_space(F, 32), reed_muller(3, 5), reed_muller(1, 5)], [1, 4, 16])
    rep = ch.verify()
    assert rep.ok and rep.distances == [1, 4, 16]
    jb = ch.joint_basis
    assert matrix_rref([list(r) for r in jb], F)[1] == 32
    assert all(reed_muller(1, 5).contains(r) for r in jb[:6])
    assert all(reed_muller(3, 5).contains(r) for r in jb[:26])


def test_chain_rejects_bad_input():
    F = gf(2)
    with pytest.raises(ChainError):
        NestedCodeChain.build([reed_muller(1, 5), reed_muller(3, 5)])
    with pytest.raises(ChainError):
        NestedCodeChain.build([LinearCode.full_space(F, 8), extended_hamming_8()], [1, 5])
    rep = check_chain([reed_muller(1, 3), LinearCode.full_space(F, 8)])
    assert not rep.ok and rep.inclusions == [False]


def test_rs_nested_chain():
    ch = rs_nested(8, 4)
    assert ch.dims == (5, 4, 3, 2, 1)
    assert ch.verify().ok and ch.profile == (4, 5, 6, 7, 8)


def test_chain_complete_rm():
    ch = chain_complete(reed_muller(1, 5), [1, 4, 16])
    assert ch.verify().ok
    assert ch.dims[0] == 32 and ch.dims[2] == 6
    assert ch.codes[1].min_distance >= 4 and ch.dims[1] >= 20


def test_chain_complete_nonbinary():
    F = gf(4)
    ch = chain_complete(repetition_code(F, 4), [1, 2, 4])
    assert ch.verify().ok
    assert ch.codes[1].min_distance >= 2


def test_light_vectors_elliptic():
    c = ag_code(elliptic_y2_y_x3_data(4))
    rep = light_vector_bound(c, 1, 4)
    assert rep.details["A_d"] == 18
    assert rep.details["holds"]


@pytest.mark.parametrize("q", [4, 8])
def test_light_vectors_rs(q):
    rep = light_vector_bound(reed_solomon(q, q // 2), 0, q // 2)
    assert rep.details["A_d"] == (q - 1) * math.comb(q, q // 2)
    assert rep.details["holds"]


def test_io_round_trip(tmp_path):
    c = golay_code()
    write_code(c, tmp_path / "g.code")
    d = read_code(tmp_path / "g.code")
    assert d.generator == c.generator and d.q == 2
    ch = rs_nested(4, 2)
    write_chain(ch, tmp_path / "r.chain")
    back = read_chain(tmp_path / "r.chain")
    assert [x.generator for x in back.codes] == [x.generator for x in ch.codes]
    assert len(read_codes(tmp_path / "r.chain")) == 3
    assert weights_csv((1, 0, 2)).splitlines() == ["w,count", "0,1", "1,0", "2,2"]


def test_code_file_comments(tmp_path):
    p = tmp_path / "c.code"
    p.write_text("# parity check\n2 3 2\n1 0 1  # first\n0 1 1\n")
    c = read_code(p)
    assert (c.n, c.k, c.min_distance) == (3, 2, 2)


def test_min_distance_beyond_budget_binary():
    # 2^26 words: exact distance through the dual-column route
    assert min_distance(reed_muller(3, 5)) == 4
