"""Linear codes, nested chains and weight enumeration."""

from .chain import ChainError, ChainReport, NestedCodeChain, chain_complete, check_chain
from .constructions import (
    EvaluationData,
    InvalidFunctionBasisError,
    ag_code,
    concat_symbol,
    elliptic_y2_y_x3_data,
    extended_hamming_8,
    golay_code,
    parity_check_code,
    projective_line_data,
    reed_muller,
    reed_solomon,
    repetition_code,
    rs_nested,
    simplex_concat,
    simplex_inner,
)
from .light import light_vector_bound
from .linear import ENUMERATION_BUDGET, EnumerationBudgetError, LinearCode, min_distance, weight_count, weight_distribution
