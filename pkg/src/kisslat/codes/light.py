"""Light-vector counts against the Jacobian-averaging lower bound."""

from __future__ import annotations

import math

import mpmath

from ..bounds import formulas as fm
from ..bounds.report import BoundReport, report
from .linear import EnumerationBudgetError, LinearCode, weight_count


def light_vector_bound(code: LinearCode, g: int, a: int, bits: int | None = None) -> BoundReport:
    """Compare the measured A_d (d = N - a) with C(N, a)/(sqrt q + 1)^{2g}.

    ``value`` is the measured per-symbol exponent log(A_d)/N; the details carry
    the integer comparison and the Stirling-form lower estimate.
    """
    N, q = code.n, code.q
    d = N - a
    if not 1 <= a <= N - 1:
        raise ValueError(f"need 1 <= a <= N-1, got a={a}, N={N}")
    try:
        A_d = code.weight_distribution[d]
        d_min = code.min_distance
    except EnumerationBudgetError:
        A_d = weight_count(code, d)
        d_min = None
    with fm.workprec(bits):
        rhs = mpmath.mpf(math.comb(N, a)) / (mpmath.sqrt(q) + 1) ** (2 * g)
        measured = fm.log2(A_d) / N if A_d else mpmath.mpf("-inf")
        stirling = fm.light_vector_per_symbol(q, N, g, a, d)
        exact_ok = A_d * (mpmath.sqrt(q) + 1) ** (2 * g) >= math.comb(N, a)
        return report(
            "light_vectors",
            measured,
            {"q": q, "N": N, "g": g, "a": a, "d": d},
            details={
                "A_d": A_d,
                "min_distance": d_min,
                "rhs": mpmath.nstr(rhs, 20),
                "holds": bool(exact_ok),
                "stirling_form": mpmath.nstr(stirling, 20),
                "stirling_holds": bool(measured >= stirling),
            },
        )
