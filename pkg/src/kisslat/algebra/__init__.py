"""Exact arithmetic substrate: finite fields, polynomials, dyadic rationals,
exact matrices."""

from .dyadic import Dyadic, DyadicMatrix, NotDyadicError
from .field import FieldElem, FiniteField, ReducibleModulusError, field_make, gf, prime_power
from .matrix import GF2Basis, hnf_rows, int_det, matrix_rref, null_space, solve_rational
from .polynomial import Polynomial, count_irreducible, find_factor, irreducible_monics, is_irreducible

__all__ = [
    "Dyadic",
    "DyadicMatrix",
    "NotDyadicError",
    "FieldElem",
    "FiniteField",
    "ReducibleModulusError",
    "field_make",
    "gf",
    "prime_power",
    "GF2Basis",
    "hnf_rows",
    "int_det",
    "matrix_rref",
    "null_space",
    "solve_rational",
    "Polynomial",
    "count_irreducible",
    "find_factor",
    "irreducible_monics",
    "is_irreducible",
]
