import itertools

import pytest
from hypothesis import given, strategies as st

from kisslat.algebra import Polynomial, gf, irreducible_monics
from kisslat.curves import (
    PreconditionError,
    densify_ladder,
    densify_level,
    drinfeld_genus,
    elkies_points,
    genus_ratios,
    gs_genus,
    gs_points,
    points_csv,
    supersingular_roots,
    x0m_invariants,
    x0m_raw,
)
from kisslat.curves.towers import elkies_relation_holds, gs_relation_holds

GRID = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)]


@pytest.mark.parametrize("q,k", GRID)
def test_supersingular_count_is_q_to_the_k(q, k):
    _, ss = elkies_points(q, k)
    assert len(ss) == q**k


@pytest.mark.parametrize("q,k", GRID)
def test_tower_points_satisfy_relations(q, k):
    allp, ss = elkies_points(q, k)
    roots = supersingular_roots(gf(q * q), q)
    for p in allp:
        assert all(elkies_relation_holds(q, a, b) for a, b in zip(p.coords, p.coords[1:]))
        assert p.supersingular == all(x in roots for x in p.coords)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_supersingular_roots_are_phi_roots(q):
    F = gf(q * q)
    roots = supersingular_roots(F, q)
    assert len(roots) == q
    for x in roots:
        assert F.pow(x, q + 1) == F.one and x != F.one


@pytest.mark.parametrize("q,k", [(2, 2), (2, 3), (3, 2), (4, 2)])
def test_walk_matches_brute_force(q, k):
    """Independent oracle: test every tuple in GF(q^2)^k."""
    F = gf(q * q)
    brute = sorted(
        c for c in itertools.product(F.elements(), repeat=k)
        if all(elkies_relation_holds(q, a, b) for a, b in zip(c, c[1:]))
    )
    allp, _ = elkies_points(q, k)
    assert sorted(p.coords for p in allp) == brute


def test_frozen_affine_counts():
    assert [len(elkies_points(q, k)[0]) for q, k in GRID] == [6, 10, 18, 15, 33, 28]


@pytest.mark.parametrize("q,n", [(2, 2), (2, 3), (3, 2), (4, 2)])
def test_gs_points_brute_force(q, n):
    F = gf(q * q)
    brute = sorted(
        c for c in itertools.product(F.elements(), repeat=n)
        if all(gs_relation_holds(q, a, b) for a, b in zip(c, c[1:]))
    )
    assert sorted(p.coords for p in gs_points(q, n)) == brute


def test_gs_genus_values():
    assert [gs_genus(2, n).genus for n in range(1, 6)] == [0, 1, 3, 9, 21]
    assert [gs_genus(3, n).genus for n in range(1, 5)] == [0, 4, 16, 64]


@pytest.mark.parametrize("q", [2, 3, 4])
@pytest.mark.parametrize("k", range(2, 7))
def test_genus_cross_identity(q, k):
    T = Polynomial.monomial(gf(q), 1)
    assert x0m_invariants(q, [(T, k + 1)]).genus == drinfeld_genus(q, k).genus


def test_drinfeld_values():
    assert [drinfeld_genus(2, k).genus for k in range(1, 7)] == [0, 1, 3, 9, 21, 49]
    assert drinfeld_genus(3, 4).point_bound == 85


def test_x0m_preconditions():
    F = gf(2)
    T = Polynomial.monomial(F, 1)
    T1 = Polynomial(F, (1, 1))
    with pytest.raises(PreconditionError, match="M\\(1\\) = 0"):
        x0m_invariants(2, [(T, 3), (T1, 1)])
    with pytest.raises(PreconditionError, match="deg M"):
        x0m_invariants(2, [(T, 2)])
    with pytest.raises(PreconditionError, match="repeated"):
        x0m_invariants(2, [(T, 2), (T, 1)])
    with pytest.raises(PreconditionError, match="irreducible"):
        x0m_invariants(2, [(Polynomial(F, (1, 0, 1)), 2)])
    with pytest.raises(PreconditionError, match="odd"):
        x0m_invariants(2, [(Polynomial(F, (1, 1, 1)), 2)])


def test_inadmissible_example_raw_values():
    # T^3 (T+1): evaluated only without the checks
    assert x0m_raw(2, [(1, 3), (1, 1)]) == (36, 8, 5, 12)
    rec = x0m_invariants(2, [(Polynomial.monomial(gf(2), 1), 3), (Polynomial(gf(2), (1, 1, 1)), 1)])
    assert rec.genus == 13 and rec.extra["epsilon"] == 60


@st.composite
def admissible_M(draw):
    q = draw(st.sampled_from([2, 3, 4]))
    F = gf(q)
    one = F.one
    pool = [P for s in (1, 2, 3) for P in irreducible_monics(q, s, F) if P(one) != 0]
    picks = draw(st.lists(st.sampled_from(range(len(pool))), min_size=1, max_size=3, unique=True))
    factors = [(pool[i], draw(st.integers(1, 4))) for i in picks]
    return q, factors


@given(admissible_M())
def test_supersingular_bound_dominates_genus(args):
    q, factors = args
    try:
        rec = x0m_invariants(q, factors)
    except PreconditionError:
        return
    eps = rec.extra["epsilon"]
    assert eps >= (q + 1) * (q - 1) * rec.genus
    assert rec.point_bound * (q + 1) >= eps


@pytest.mark.parametrize("q", [2, 3])
def test_densify_ladder_is_increasing(q):
    recs = densify_ladder(q, 6, 10)
    gs = [r.genus for r in recs]
    assert gs == sorted(set(gs))
    for r in recs:
        if r.family == "X0(M)":
            assert r.extra["epsilon"] >= (q + 1) * (q - 1) * r.genus
    assert max(genus_ratios(recs)) < q + 1


def test_densify_level_stays_between_levels():
    lo, hi = drinfeld_genus(2, 8).genus, drinfeld_genus(2, 9).genus
    recs = densify_level(2, 8)
    assert recs and all(lo < r.genus < hi for r in recs)


def test_points_csv():
    _, ss = elkies_points(2, 2)
    lines = points_csv(ss).splitlines()
    assert lines[0] == "x1,x2,supersingular" and len(lines) == 5
    assert all(line.endswith(",1") for line in lines[1:])
