"""Affine rational points on recursive towers over GF(q^2).

Both towers are walked coordinate by coordinate through a precomputed
transition table: for each x_j the list of admissible x_{j+1}.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from ..algebra.field import FiniteField, gf

POINT_BUDGET = 1 << 22


class TowerBudgetError(RuntimeError):
    pass


@dataclass(frozen=True)
class TowerPoint:
    coords: tuple[int, ...]
    supersingular: bool = False


def affine_plane_points(F: FiniteField, f: Callable[[int, int], int]) -> list[tuple[int, int]]:
    """All (x, y) in F^2 with f(x, y) = 0, x-major order."""
    return [(x, y) for x in F.elements() for y in F.elements() if f(x, y) == 0]


def supersingular_roots(F: FiniteField, q: int) -> frozenset[int]:
    """Roots of (t^{q+1} - 1)/(t - 1): t^{q+1} = 1 and t != 1."""
    return frozenset(x for x in F.elements() if x != 1 and F.pow(x, q + 1) == 1)


def _walk(table: Sequence[Sequence[int]], starts: Sequence[int], k: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    level = [(x,) for x in starts]
    for _ in range(k - 1):
        nxt = []
        for pt in level:
            for y in table[pt[-1]]:
                nxt.append(pt + (y,))
        if len(nxt) > POINT_BUDGET:
            raise TowerBudgetError(f"more than {POINT_BUDGET} partial points")
        level = nxt
    out.extend(level)
    return out


@lru_cache(maxsize=None)
def elkies_table(q: int) -> tuple[tuple[int, ...], ...]:
    """Successors of x under y (y-1)^{q-1} (x-1)^{q-1} = x^q over GF(q^2).

    In characteristic 2 the signs are immaterial.  In odd characteristic the
    minus signs are what make t = 1, the root excluded from the supersingular
    condition, the only degenerate coordinate; with plus signs t = -1 would be
    both supersingular and without successors."""
    F = gf(q * q)
    one = F.one
    by_value: dict[int, list[int]] = {}
    for y in F.elements():
        by_value.setdefault(F.mul(y, F.pow(F.sub(y, one), q - 1)), []).append(y)
    table = []
    for x in F.elements():
        c = F.pow(F.sub(x, one), q - 1)
        xq = F.pow(x, q)
        if c == 0:
            table.append(tuple(F.elements()) if xq == 0 else ())
        else:
            table.append(tuple(by_value.get(F.div(xq, c), ())))
    return tuple(table)


def elkies_points(q: int, k: int) -> tuple[list[TowerPoint], list[TowerPoint]]:
    """All affine points of level k over GF(q^2), and the supersingular ones
    (every coordinate a root of (t^{q+1} - 1)/(t - 1))."""
    if k < 1:
        raise ValueError("level must be >= 1")
    F = gf(q * q)
    ss = supersingular_roots(F, q)
    pts = [TowerPoint(c, all(x in ss for x in c)) for c in _walk(elkies_table(q), list(F.elements()), k)]
    return pts, [p for p in pts if p.supersingular]


def elkies_relation_holds(q: int, a: int, b: int) -> bool:
    F = gf(q * q)
    lhs = F.mul(F.mul(b, F.pow(F.sub(b, F.one), q - 1)), F.pow(F.sub(a, F.one), q - 1))
    return lhs == F.pow(a, q)


@lru_cache(maxsize=None)
def gs_table(q: int) -> tuple[tuple[int, ...], ...]:
    """Successors of x under y^q + y = x^q/(x^{q-1} + 1); x with
    x^{q-1} = -1 has none (the denominator vanishes)."""
    F = gf(q * q)
    by_value: dict[int, list[int]] = {}
    for y in F.elements():
        by_value.setdefault(F.add(F.pow(y, q), y), []).append(y)
    table = []
    for x in F.elements():
        den = F.add(F.pow(x, q - 1), F.one)
        table.append(() if den == 0 else tuple(by_value.get(F.div(F.pow(x, q), den), ())))
    return tuple(table)


def gs_points(q: int, n: int) -> list[TowerPoint]:
    if n < 1:
        raise ValueError("level must be >= 1")
    F = gf(q * q)
    return [TowerPoint(c) for c in _walk(gs_table(q), list(F.elements()), n)]


def gs_relation_holds(q: int, a: int, b: int) -> bool:
    F = gf(q * q)
    den = F.add(F.pow(a, q - 1), F.one)
    return den != 0 and F.add(F.pow(b, q), b) == F.div(F.pow(a, q), den)


def points_csv(points: Sequence[TowerPoint]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if points:
        w.writerow([f"x{i + 1}" for i in range(len(points[0].coords))] + ["supersingular"])
    for p in points:
        w.writerow(list(p.coords) + [int(p.supersingular)])
    return buf.getvalue()
