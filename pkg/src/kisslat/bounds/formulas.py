"""High-precision evaluators for the entropy-type bounds on kissing numbers.

Logarithms are base 2 throughout.  Precision is ``DEFAULT_BITS`` unless the
``KF_PRECISION_BITS`` environment variable or an explicit ``bits`` argument
says otherwise.
"""

from __future__ import annotations

import os
from typing import Callable

import mpmath
from mpmath import mpf

DEFAULT_BITS = 160


def precision_bits(bits: int | None = None) -> int:
    if bits is not None:
        return int(bits)
    env = os.environ.get("KF_PRECISION_BITS")
    return int(env) if env else DEFAULT_BITS


def workprec(bits: int | None = None):
    return mpmath.workprec(precision_bits(bits))


def log2(x) -> mpf:
    return mpmath.log(mpf(x), 2)


def entropy(d) -> mpf:
    """Binary entropy H(d), with H(0) = H(1) = 0."""
    d = mpf(d)
    if d < 0 or d > 1:
        raise ValueError(f"entropy argument {d} outside [0, 1]")
    if d == 0 or d == 1:
        return mpf(0)
    return -d * log2(d) - (1 - d) * log2(1 - d)


def entropy_q(q: int, d) -> mpf:
    d = mpf(d)
    return (d * log2(q - 1) + entropy(d)) / log2(q)


def bisect(f: Callable[[mpf], mpf], lo, hi, tol=mpf("1e-12"), max_iter: int = 400) -> mpf:
    """Root of f on [lo, hi] given a sign change; stops when the bracket is
    narrower than ``tol``."""
    lo, hi = mpf(lo), mpf(hi)
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if flo * fhi > 0:
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    for _ in range(max_iter):
        if hi - lo < tol:
            break
        mid = (lo + hi) / 2
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def sign_changes(f: Callable[[mpf], mpf], lo, hi, points: int = 10_000) -> int:
    """Number of strict sign changes of f on an evenly spaced open grid."""
    lo, hi = mpf(lo), mpf(hi)
    step = (hi - lo) / (points + 1)
    prev = None
    count = 0
    for i in range(1, points + 1):
        v = f(lo + i * step)
        s = (v > 0) - (v < 0)
        if s == 0:
            continue
        if prev is not None and s != prev:
            count += 1
        prev = s
    return count


# -- concatenated AG code exponent -------------------------------------------

def e_s(s: int, d) -> mpf:
    """H(d) - 2s/(2^s - 1) - log(2^{2s}/(2^{2s} - 1))."""
    Q = mpf(2) ** (2 * s)
    return entropy(d) - mpf(2 * s) / (2**s - 1) - log2(Q / (Q - 1))


def e_s_zeros(s: int, tol=mpf("1e-12")) -> tuple[mpf, mpf]:
    if s < 3:
        raise ValueError("E_s has no zeros for s < 3")
    f = lambda d: e_s(s, d)
    upper = 1 - mpf(2) ** (-2 * s)
    return bisect(f, tol, mpf(1) / 2, tol), bisect(f, mpf(1) / 2, upper, tol)


# -- lattice families from codes on the Drinfeld curves ---------------------

def finite_length_penalty(N) -> mpf:
    N = mpf(N)
    return (2 + 2 * log2(N)) / N


def effective_family(m: int, N=None) -> mpf:
    """(1/4m)(1 - 2 log(2^m+1)/(2^m-1)), minus (2 + 2 log N)/N when N is given."""
    v = (1 - 2 * log2(2**m + 1) / mpf(2**m - 1)) / (4 * m)
    return v - finite_length_penalty(N) if N is not None else v


def improved_family(m: int) -> mpf:
    """(1/4m)(1 - 2m/(2^m-1) - log(2^{2m}/(2^{2m}-1))), the leading term when
    the Jacobian estimate replaces the effective one."""
    Q = mpf(2) ** (2 * m)
    return (1 - mpf(2 * m) / (2**m - 1) - log2(Q / (Q - 1))) / (4 * m)


# -- lower limit via densified curves ----------------------------------------

def a_const() -> mpf:
    """A = log(4096/4095)."""
    return log2(mpf(4096) / 4095)


def liminf_equation(d) -> mpf:
    """21 H(d) - 2d(4 + 21A + (17 - 21A) d); its root in (1/2, 1) is delta_0."""
    A = a_const()
    d = mpf(d)
    return 21 * entropy(d) - 2 * d * (4 + 21 * A + (17 - 21 * A) * d)


def liminf_root(tol=mpf("1e-14"), grid: int = 10_000) -> tuple[mpf, mpf, int]:
    """(delta_0, bound, sign changes on the grid).  bound = (17 - 21A) delta_0 / 504."""
    d0 = bisect(liminf_equation, mpf(1) / 2, 1, tol)
    A = a_const()
    changes = sign_changes(liminf_equation, mpf(1) / 2, 1, grid) if grid else -1
    return d0, (17 - 21 * A) * d0 / 504, changes


def minimax_linear(d) -> mpf:
    """(1/24)(17/21 - A) d."""
    return (mpf(17) / 21 - a_const()) * mpf(d) / 24


def minimax_entropy(lam) -> mpf:
    """(1/24)(lam H(1/(2 lam)) - 4/21 - A)."""
    lam = mpf(lam)
    return (lam * entropy(1 / (2 * lam)) - mpf(4) / 21 - a_const()) / 24


def minimax_crossing(tol=mpf("1e-14")) -> tuple[mpf, mpf]:
    """The d in [1/2, 1] where the linear and entropy forms agree with
    lam = 1/(2d), and the common value there."""
    f = lambda d: minimax_entropy(1 / (2 * mpf(d))) - minimax_linear(d)
    d = bisect(f, mpf(1) / 2 + tol, 1, tol)
    return d, minimax_linear(d)


# -- remarks on alternative curve choices ------------------------------------

def gs_variant_per_symbol() -> tuple[mpf, mpf]:
    """(1/64)(H(32/63) - 6/7 - log(64/63)) against (1/64)(1/7 - log(64/63))."""
    tail = log2(mpf(64) / 63)
    return (entropy(mpf(32) / 63) - mpf(6) / 7 - tail) / 64, (mpf(1) / 7 - tail) / 64


def tilde_family_liminf(m: int, tol=mpf("1e-14")) -> tuple[mpf, mpf]:
    """Lower-limit analogue for the family built on the every-genus curves over
    GF(2^{2m}) with the lattices of dimension 4m.

    With the genus fraction gc = gamma*2m + log(4^m/(4^m - 1)), where
    gamma = (2 + 1/(2m))/(2^m - 1) is the reciprocal of the every-genus point
    ratio, the code exponent is H(d) - gc and the dimension loss factor is d.
    Balancing H(d) - gc = (1 - gc) d on (1/2, 1) gives d*, and the value is
    (1 - gc) d* / (4m).  Returns (d*, value).
    """
    gamma = (2 + mpf(1) / (2 * m)) / (mpf(2) ** m - 1)
    Q = mpf(4) ** m
    gc = gamma * 2 * m + log2(Q / (Q - 1))
    f = lambda d: entropy(d) - gc - (1 - gc) * d
    d = bisect(f, mpf(1) / 2, 1 - tol, tol)
    return d, (1 - gc) * d / (4 * m)


# -- auxiliary forms -----------------------------------------------------------

def gilbert_varshamov(q: int, d) -> mpf:
    return 1 - entropy_q(q, d)


def ag_rate_as_printed(q: int) -> mpf:
    """1 - 1/(sqrt q - 1), evaluated without a -delta term."""
    return 1 - 1 / (mpmath.sqrt(q) - 1)


def tsfasman_vladut_zink(q: int, d) -> mpf:
    """The full AG line 1 - d - 1/(sqrt q - 1), for comparison."""
    return 1 - mpf(d) - 1 / (mpmath.sqrt(q) - 1)


def jacobian_asymptotic(q: int) -> mpf:
    """Per-genus log size of the Jacobian on an optimal tower:
    log q + (sqrt q - 1) log(q/(q-1))."""
    return log2(q) + (mpmath.sqrt(q) - 1) * log2(mpf(q) / (q - 1))


def jacobian_effective_log(q: int, g: int) -> mpf:
    """log (sqrt q + 1)^{2g}."""
    return 2 * g * log2(mpmath.sqrt(q) + 1)


def light_vector_per_symbol(q: int, N: int, g: int, a: int, d: int) -> mpf:
    """H(d/N) - (2g/N) log(sqrt q + 1) - log(2 pi a d)/(2N) - 1/(12 a d)."""
    N = mpf(N)
    return (
        entropy(mpf(d) / N)
        - 2 * g / N * log2(mpmath.sqrt(q) + 1)
        - log2(2 * mpmath.pi * a * d) / (2 * N)
        - 1 / (mpf(12) * a * d)
    )


def light_vector_half_rate(q: int, N=None) -> mpf:
    """1 - 2 log(sqrt q + 1)/(sqrt q - 1), minus the finite-length term."""
    r = mpmath.sqrt(q)
    v = 1 - 2 * log2(r + 1) / (r - 1)
    return v - finite_length_penalty(N) if N is not None else v


def every_genus_ratio(q: int) -> mpf:
    """(sqrt q - 1)/(2 + 1/log q) for an even square q."""
    return (mpmath.sqrt(q) - 1) / (2 + 1 / log2(q))


# -- packing quantities --------------------------------------------------------

def center_density(min_norm, det, dim: int) -> mpf:
    """(d/2)^m / sqrt(det) with d = sqrt(min_norm)."""
    return (mpmath.sqrt(mpf(min_norm)) / 2) ** dim / mpmath.sqrt(mpf(det))


def density_exponent(min_norm, det, dim: int) -> mpf:
    """lambda = -log(Delta)/m, where Delta = V_m * center density."""
    Vm = mpmath.pi ** (mpf(dim) / 2) / mpmath.gamma(mpf(dim) / 2 + 1)
    return -log2(Vm * center_density(min_norm, det, dim)) / dim


def random_packing_kissing_exponent() -> mpf:
    return log2(2 / mpmath.sqrt(3))
