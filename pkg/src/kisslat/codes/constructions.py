"""Code families: Reed-Solomon, one-point evaluation codes, the augmented
simplex code and its concatenation map, Reed-Muller, Golay, parity checks."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from ..algebra.field import FiniteField, field_make, gf
from .linear import LinearCode


def reed_solomon(q: int, a: int, field: FiniteField | None = None) -> LinearCode:
    """Evaluations of polynomials of degree <= a at all q field points
    (in element-index order): an [q, a+1, q-a] code."""
    F = field if field is not None else gf(q)
    if not 0 <= a < F.q:
        raise ValueError(f"degree bound a={a} must satisfy 0 <= a < q={F.q}")
    rows = [tuple(F.pow(x, i) for x in F.elements()) for i in range(a + 1)]
    return LinearCode(F, tuple(rows), F.q, f"RS(q={F.q},a={a})")


def rs_nested(q: int, a_max: int) -> "NestedCodeChain":
    """RS(q, a_max) ⊇ RS(q, a_max - 1) ⊇ ... ⊇ RS(q, 0) with profile q - a."""
    from .chain import NestedCodeChain

    F = gf(q)
    if not 0 <= a_max < q:
        raise ValueError(f"a_max={a_max} must satisfy 0 <= a_max < q={q}")
    codes = [reed_solomon(q, a, F) for a in range(a_max, -1, -1)]
    return NestedCodeChain.build(codes, [q - a for a in range(a_max, -1, -1)])


@dataclass(frozen=True)
class EvaluationData:
    """Points, a monomial function basis and divisor data for an evaluation code.

    ``basis`` entries are exponent tuples: (i, j) stands for x^i y^j evaluated
    at a point (x, y).  ``a`` is the divisor degree, ``genus`` that of the curve.
    """

    field: FiniteField
    points: tuple[tuple[int, ...], ...]
    basis: tuple[tuple[int, ...], ...]
    a: int
    genus: int

    @property
    def N(self) -> int:
        return len(self.points)

    def evaluate(self, mono: Sequence[int], pt: Sequence[int]) -> int:
        F = self.field
        v = 1
        for e, x in zip(mono, pt):
            v = F.mul(v, F.pow(x, e))
        return v

    def matrix(self) -> list[list[int]]:
        return [[self.evaluate(m, P) for P in self.points] for m in self.basis]


class InvalidFunctionBasisError(ValueError):
    pass


def ag_code(ev: EvaluationData, name: str = "") -> LinearCode:
    """Image of the evaluation map.  The dimension must reach the
    Riemann-Roch floor a - g + 1."""
    if ev.a >= ev.N:
        raise ValueError(f"a={ev.a} must be < N={ev.N} for an injective evaluation")
    code = LinearCode.from_rows(ev.field, ev.matrix(), ev.N, name or f"AG(N={ev.N},a={ev.a},g={ev.genus})")
    if code.k < ev.a - ev.genus + 1:
        raise InvalidFunctionBasisError(
            f"evaluation rank {code.k} < a - g + 1 = {ev.a - ev.genus + 1}"
        )
    return code


def projective_line_data(q: int, a: int) -> EvaluationData:
    F = gf(q)
    return EvaluationData(F, tuple((x,) for x in F.elements()), tuple((i,) for i in range(a + 1)), a, 0)


def elliptic_y2_y_x3_data(a: int) -> EvaluationData:
    """Genus-1 curve y^2 + y = x^3 over GF(4): its 8 affine points and the
    one-point basis {x^i y^j : 2i + 3j <= a, j <= 1} (pole orders at infinity)."""
    from ..curves.towers import affine_plane_points

    F = field_make(2, 2)
    pts = affine_plane_points(F, lambda x, y: F.add(F.add(F.mul(y, y), y), F.pow(x, 3)))
    basis = tuple((i, j) for j in (0, 1) for i in range(a + 1) if 2 * i + 3 * j <= a)
    return EvaluationData(F, tuple(pts), basis, a, 1)


# -- binary building blocks -------------------------------------------------

def repetition_code(field: FiniteField, n: int) -> LinearCode:
    return LinearCode(field, ((1,) * n,), n, f"rep[{n}]")


def parity_check_code(field: FiniteField, n: int) -> LinearCode:
    """[n, n-1, 2] code {c : sum c_i = 0}."""
    minus1 = field.neg(1)
    rows = tuple(tuple(1 if j == i else (minus1 if j == n - 1 else 0) for j in range(n)) for i in range(n - 1))
    return LinearCode(field, rows, n, f"parity[{n},{n - 1}]_{field.q}")


def reed_muller(r: int, m: int) -> LinearCode:
    """Binary RM(r, m): evaluations of monomials of degree <= r on F_2^m,
    points ordered by integer value."""
    F = gf(2)
    pts = list(range(1 << m))
    rows = []
    for d in range(r + 1):
        for S in itertools.combinations(range(m), d):
            rows.append(tuple(int(all(x >> i & 1 for i in S)) for x in pts))
    return LinearCode(F, tuple(rows), 1 << m, f"RM({r},{m})")


def extended_hamming_8() -> LinearCode:
    rm = reed_muller(1, 3)
    return LinearCode(rm.field, rm.generator, 8, "[8,4,4] extended Hamming")


_GOLAY_A = [
    [1, 0, 0, 1, 1, 1, 1, 1, 0, 0, 0, 1],
    [0, 1, 0, 0, 1, 1, 1, 1, 1, 0, 1, 0],
    [0, 0, 1, 0, 0, 1, 1, 1, 1, 1, 0, 1],
    [1, 0, 0, 1, 0, 0, 1, 1, 1, 1, 1, 0],
    [1, 1, 0, 0, 1, 0, 0, 1, 1, 1, 0, 1],
    [1, 1, 1, 0, 0, 1, 0, 0, 1, 1, 1, 0],
    [1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1],
    [1, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0],
    [0, 1, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1],
    [0, 0, 1, 1, 1, 1, 1, 0, 0, 1, 1, 0],
    [0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1],
    [1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1],
]


def golay_code() -> LinearCode:
    """Extended binary Golay [24, 12, 8] code in systematic form."""
    rows = tuple(tuple(int(i == j) for j in range(12)) + tuple(a) for i, a in enumerate(_GOLAY_A))
    return LinearCode(gf(2), rows, 24, "Golay[24,12,8]")


# -- simplex concatenation -----------------------------------------------------

def simplex_inner(s: int) -> LinearCode:
    """Binary [q, 2s, q/2] code, q = 2^{2s}: column j is the binary expansion of
    j, so column 0 is the augmented zero coordinate and the rest form the simplex
    code dual to the [q-1, q-1-2s] Hamming code."""
    if s < 1:
        raise ValueError("s must be >= 1")
    q = 1 << (2 * s)
    rows = tuple(tuple((j >> t) & 1 for j in range(q)) for t in range(2 * s))
    return LinearCode(gf(2), rows, q, f"simplex+0[{q},{2 * s},{q // 2}]")


def concat_symbol(field: FiniteField, inner: LinearCode, x: int) -> tuple[int, ...]:
    """phi: GF(q) -> inner code, sending polynomial-basis coordinates to the
    matching combination of inner generator rows (a linear bijection)."""
    return inner.encode(field.coords(x))


def simplex_concat(s: int, inner_only: bool = False, outer: LinearCode | None = None) -> LinearCode:
    """The inner code alone, or the binary image of ``outer`` over GF(2^{2s})
    under coordinatewise phi, of length q * N."""
    inner = simplex_inner(s)
    if inner_only or outer is None:
        return inner
    q = 1 << (2 * s)
    F = outer.field
    if F.q != q or F.p != 2:
        raise ValueError(f"outer code is over GF({F.q}); expected GF({q})")
    rows = []
    for g in outer.generator:
        for t in range(F.h):
            w = F.pow(F.gen, t)
            word: list[int] = []
            for x in g:
                word.extend(concat_symbol(F, inner, F.mul(w, x)))
            rows.append(word)
    return LinearCode.from_rows(gf(2), rows, q * outer.n, f"concat(s={s},{outer.name})")

