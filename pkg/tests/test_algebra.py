from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kisslat.algebra import (
    Dyadic,
    DyadicMatrix,
    GF2Basis,
    NotDyadicError,
    Polynomial,
    ReducibleModulusError,
    count_irreducible,
    field_make,
    gf,
    hnf_rows,
    int_det,
    irreducible_monics,
    is_irreducible,
    null_space,
    prime_power,
    solve_rational,
)

SMALL_FIELDS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32]


@pytest.mark.parametrize("q", SMALL_FIELDS + [64, 81, 128, 256])
def test_frobenius_is_additive_exhaustively(q):
    F = gf(q)
    p = F.p
    for a in F.elements():
        fa = F.pow(a, p)
        for b in F.elements():
            assert F.pow(F.add(a, b), p) == F.add(fa, F.pow(b, p))


@pytest.mark.parametrize("q", SMALL_FIELDS)
def test_field_axioms(q):
    F = gf(q)
    for a in F.elements():
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == F.one
    # multiplicative group is cyclic of order q - 1
    g = F.generator
    assert len({F.pow(g, i) for i in range(q - 1)}) == q - 1


def test_default_modulus_is_least_irreducible():
    assert gf(4).modulus == (1, 1, 1)
    assert gf(8).modulus == (1, 1, 0, 1)
    assert gf(9).modulus == (1, 0, 1)


def test_reducible_modulus_reports_factor():
    with pytest.raises(ReducibleModulusError) as e:
        field_make(2, 2, (1, 0, 1))  # T^2 + 1 = (T + 1)^2
    assert e.value.factor == (1, 1)


def test_prime_power():
    assert prime_power(64) == (2, 6)
    assert prime_power(81) == (3, 4)
    with pytest.raises(ValueError):
        prime_power(12)


@pytest.mark.parametrize("q,s", [(2, s) for s in range(1, 11)] + [(3, s) for s in range(1, 7)] + [(4, s) for s in range(1, 6)])
def test_irreducible_count_and_bounds(q, s):
    P = len(irreducible_monics(q, s))
    assert P == count_irreducible(q, s)
    assert P * s <= q**s
    # divisor terms of the necklace sum total at most q^{s//2} q/(q-1)
    assert P * s >= q**s - 2 * q ** (s // 2)


def test_half_power_lower_bound_counterexamples():
    """s P(s) >= q^s - q^{ceil(s/2)} fails in exactly these tested cases."""
    bad = [(q, s) for q, smax in ((2, 10), (3, 6), (4, 5)) for s in range(1, smax + 1)
           if len(irreducible_monics(q, s)) * s < q**s - q ** ((s + 1) // 2)]
    assert bad == [(2, 6), (2, 10), (3, 6)]


def test_irreducibility_agrees_with_sieve():
    F = gf(3)
    sieve = {P.coeffs for P in irreducible_monics(3, 4, F)}
    for c in range(3**4):
        coeffs = tuple((c // 3**i) % 3 for i in range(4)) + (1,)
        assert is_irreducible(Polynomial(F, coeffs)) == (coeffs in sieve)


dyadics = st.builds(lambda n, e: Dyadic(n, e), st.integers(-10**6, 10**6), st.integers(0, 40))


@given(dyadics, dyadics, dyadics)
def test_dyadic_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - b).to_fraction() == a.to_fraction() - b.to_fraction()


@given(dyadics)
def test_dyadic_canonical_form(a):
    assert a == Dyadic.of(a.to_fraction())
    assert a.num % 2 == 1 or a.exp == 0


def test_non_dyadic_rejected():
    with pytest.raises(NotDyadicError):
        Dyadic.of(Fraction(1, 3))


small_int_matrix = st.integers(2, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n))


@given(small_int_matrix)
def test_int_det_matches_fraction_elimination(M):
    n = len(M)
    A = [[Fraction(x) for x in r] for r in M]
    det = Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if A[r][i]), None)
        if piv is None:
            det = Fraction(0)
            break
        if piv != i:
            A[i], A[piv] = A[piv], A[i]
            det = -det
        det *= A[i][i]
        for r in range(i + 1, n):
            f = A[r][i] / A[i][i]
            A[r] = [x - f * y for x, y in zip(A[r], A[i])]
    assert int_det(M) == det


@given(small_int_matrix)
def test_hnf_preserves_lattice(M):
    if int_det(M) == 0:
        return
    H = hnf_rows(M)
    assert abs(int_det(H)) == abs(int_det(M))
    # each original row is an integer combination of H
    for r in M:
        x = solve_rational(H, r)
        assert x is not None and all(c.denominator == 1 for c in x)
    # upper triangular with positive pivots
    for i, row in enumerate(H):
        assert row[i] > 0 and all(v == 0 for v in row[:i])


@given(st.lists(st.integers(0, 2**12 - 1), min_size=1, max_size=20))
def test_gf2_basis_reduce_is_a_coset_invariant(vs):
    B = GF2Basis()
    for v in vs:
        B.add(v)
    span = {0}
    for r in B.rows.values():
        span |= {s ^ r for s in span}
    for w in range(0, 2**12, 37):
        key = B.reduce(w)
        assert all(B.reduce(w ^ s) == key for s in list(span)[:16])


def test_dyadic_matrix_algebra():
    h = Fraction(1, 2)
    T = DyadicMatrix.of([[h, -h], [h, h]])
    T2 = T ** 2
    assert T2.to_fractions() == [[0, -h], [h, 0]]
    assert T.det() == h
    assert (T @ T.T()).to_fractions() == [[h, 0], [0, h]]


def test_null_space_over_gf4():
    F = gf(4)
    rows = [[1, 1, 1, 1]]
    ker = null_space(rows, F, 4)
    assert len(ker) == 3
    for v in ker:
        assert F.add(F.add(v[0], v[1]), F.add(v[2], v[3])) == 0
