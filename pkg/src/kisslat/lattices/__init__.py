"""Dyadic lattices, reduction, enumeration, T-lattices and constructions."""

from .catalog import NAMES, catalog, e8_cartan, lambda_tilde, leech, leech_gram_from_golay, z2
from .construct import (
    ConstructionError,
    construction_a,
    construction_d,
    construction_d_expected_det,
    construction_e,
    construction_e_tlattice,
    m_bar,
)
from .enum import EnumResult, brute_force_shortest, shortest_vectors, theta_prefix, vectors_of_norm
from .io import format_lattice, format_tlattice, parse_lattice, parse_tlattice, read_lattice, read_tlattice, write_lattice
from .lattice import DegenerateLatticeError, DyadicLattice, contains, same_lattice
from .lll import lll_reduce
from .tlattice import AxiomReport, TLattice, verify_t_axioms

__all__ = [n for n in dir() if not n.startswith("_")]
