"""Closed-form bound evaluators and their named constants."""

from .formulas import (
    bisect,
    center_density,
    density_exponent,
    e_s,
    e_s_zeros,
    effective_family,
    entropy,
    entropy_q,
    gilbert_varshamov,
    improved_family,
    liminf_equation,
    liminf_root,
    minimax_crossing,
    precision_bits,
    tilde_family_liminf,
    workprec,
)
from .report import BoundReport, REGISTRY, all_constants, constant, family_bound_m, m_scan, report
