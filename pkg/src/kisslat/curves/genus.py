"""Genus and point-count formulas for the towers and for X_0(M)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Sequence

from ..algebra.field import gf
from ..algebra.polynomial import Polynomial, irreducible_monics, is_irreducible


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class GenusRecord:
    family: str
    q: int
    params: dict[str, Any]
    genus: int
    point_bound: int
    extra: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"family": self.family, "q": self.q, "params": self.params,
                "genus": self.genus, "point_bound": self.point_bound}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def gs_genus(q: int, n: int) -> GenusRecord:
    if n < 1:
        raise ValueError("level must be >= 1")
    m = (n + 1) // 2
    g = (q**m - 1) ** 2 if n % 2 == 0 else (q**m - 1) * (q ** (m - 1) - 1)
    return GenusRecord("GS", q, {"n": n}, g, (q - 1) * q**n)


def drinfeld_genus(q: int, k: int) -> GenusRecord:
    """Genus of X_0(T^{k+1}); the point bound is q^k + 4 from level 2 on."""
    if k < 1:
        raise ValueError("level must be >= 1")
    m = k // 2
    if k % 2 == 0:
        num = (q**m - 1) ** 2
    else:
        num = (q ** (m + 1) - 1) * (q**m - 1)
    assert num % (q - 1) == 0
    return GenusRecord("Drinfeld-T-power", q, {"k": k}, num // (q - 1), q**k + 4 if k >= 2 else q**k)


Factorization = Sequence[tuple[Polynomial, int]]


def epsilon_kappa(q: int, factors: Sequence[tuple[int, int]]) -> tuple[int, int]:
    """epsilon and kappa from (degree, multiplicity) pairs."""
    eps, kap = 1, 1
    for l, r in factors:
        qi = q**l
        eps *= qi ** (r - 1) * (qi + 1)
        kap *= qi ** (r // 2) + qi ** ((r - 1) // 2)
    return eps, kap


def x0m_raw(q: int, factors: Sequence[tuple[int, int]]) -> tuple[int, int, int, int]:
    """(epsilon, kappa, g_0, point bound) with no admissibility checks."""
    eps, kap = epsilon_kappa(q, factors)
    s = len(factors)
    num = eps - (q + 1) * kap - 2 ** (s - 1) * (q + 1) * (q - 2)
    g, rem = divmod(num, q * q - 1)
    if rem:
        raise ArithmeticError(f"genus numerator {num} not divisible by q^2 - 1 = {q * q - 1}")
    return eps, kap, 1 + g, -(-eps // (q + 1))


def _value_at_one(P: Polynomial) -> int:
    return P(P.field.one)


def x0m_invariants(q: int, factors: Factorization) -> GenusRecord:
    """GenusRecord of X_0(M) for M = prod P_i^{r_i} over GF(q).

    Requires distinct monic irreducible P_i, M(1) != 0, deg M >= 3 and at least
    one P_i of odd degree.
    """
    F = gf(q)
    seen = set()
    for P, r in factors:
        if P.field != F:
            raise PreconditionError(f"factor {P.pretty()} is not over GF({q})")
        if r < 1:
            raise PreconditionError("multiplicities must be >= 1")
        if not P.is_monic or not is_irreducible(P):
            raise PreconditionError(f"{P.pretty()} is not monic irreducible")
        if P.coeffs in seen:
            raise PreconditionError(f"repeated factor {P.pretty()}")
        seen.add(P.coeffs)
        if _value_at_one(P) == 0:
            raise PreconditionError(f"M(1) = 0: factor {P.pretty()} vanishes at 1")
    deg = sum(P.degree * r for P, r in factors)
    if deg < 3:
        raise PreconditionError(f"deg M = {deg} < 3")
    if all(P.degree % 2 == 0 for P, _ in factors):
        raise PreconditionError("every prime factor of M has even degree; the smooth-model genus formula needs an odd one")
    dr = [(P.degree, r) for P, r in factors]
    eps, kap, g, pb = x0m_raw(q, dr)
    label = " * ".join(f"({P.pretty()})^{r}" if r > 1 else f"({P.pretty()})" for P, r in factors)
    return GenusRecord("X0(M)", q, {"M": label, "factors": [[str(P), r] for P, r in factors]}, g, pb,
                       {"epsilon": eps, "kappa": kap})


def densify_level(q: int, k: int) -> list[GenusRecord]:
    """Records strictly between the genera of levels k and k+1.

    Start from M = T^{k+1}; repeatedly trade T^s for the next unused monic
    irreducible of degree s (skipping T and T - 1), taking the smallest s that
    still has candidates, while T keeps exponent >= 1.
    """
    F = gf(q)
    T = Polynomial.monomial(F, 1)
    T_minus_1 = Polynomial(F, (F.neg(1), 1))
    lo, hi = drinfeld_genus(q, k).genus, drinfeld_genus(q, k + 1).genus
    e = k + 1
    used: list[Polynomial] = []
    out: list[GenusRecord] = []
    s = 1
    pool: list[Polynomial] = []
    last = lo
    while True:
        if not pool:
            while s <= e - 1:
                pool = [P for P in irreducible_monics(q, s, F) if P.coeffs not in (T.coeffs, T_minus_1.coeffs)]
                if pool:
                    break
                s += 1
            if not pool:
                break
        P = pool.pop(0)
        if e - P.degree < 1:
            break
        e -= P.degree
        used.append(P)
        if not pool:
            s += 1
        rec = x0m_invariants(q, [(T, e)] + [(Q, 1) for Q in used])
        if rec.genus >= hi:
            break
        if rec.genus > last:
            out.append(rec)
            last = rec.genus
    return out


def densify_ladder(q: int, k_start: int, k_end: int) -> list[GenusRecord]:
    """Tower genera from level k_start to k_end with X_0(M) records inserted
    between consecutive levels; strictly increasing by construction."""
    if k_end <= k_start:
        raise ValueError("k_end must exceed k_start")
    out = [drinfeld_genus(q, k_start)]
    for k in range(k_start, k_end):
        out.extend(densify_level(q, k))
        out.append(drinfeld_genus(q, k + 1))
    return out


def genus_ratios(records: Sequence[GenusRecord]) -> list[float]:
    return [b.genus / a.genus for a, b in zip(records, records[1:]) if a.genus]
