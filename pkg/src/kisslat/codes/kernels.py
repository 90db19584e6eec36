"""Compiled codeword-enumeration loops.

Binary codes of length <= 64 use a Gray-code walk over uint64 words (one row
XOR per codeword).  Everything else walks F_p coordinates with an odometer,
keeping per-symbol nonzero-digit counts so the Hamming weight updates in O(1)
per touched digit.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _popcount64(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@njit(cache=True, nogil=True)
def _trailing_zeros(i):
    c = 0
    while (i & 1) == 0:
        i >>= 1
        c += 1
    return c


@njit(cache=True, nogil=True)
def gray_binary_histogram(rows, n, lo, hi):
    """Weight histogram of codewords with Gray index in [lo, hi).

    Codeword for index i is XOR of rows over the set bits of gray(i) = i ^ (i >> 1).
    """
    hist = np.zeros(n + 1, dtype=np.int64)
    g = lo ^ (lo >> 1)
    word = np.uint64(0)
    b = 0
    while g:
        if g & 1:
            word ^= rows[b]
        g >>= 1
        b += 1
    hist[_popcount64(word)] += 1
    for i in range(lo + 1, hi):
        word ^= rows[_trailing_zeros(i)]
        hist[_popcount64(word)] += 1
    return hist


@njit(cache=True, nogil=True)
def gray_binary_collect(rows, n, k, target_weight, out):
    """Store every codeword of the given weight into ``out``; returns count."""
    cnt = 0
    word = np.uint64(0)
    if target_weight == 0:
        out[0] = word
        return 1
    total = 1 << k
    for i in range(1, total):
        word ^= rows[_trailing_zeros(i)]
        if _popcount64(word) == target_weight:
            if cnt < out.shape[0]:
                out[cnt] = word
            cnt += 1
    return cnt


@njit(cache=True, nogil=True)
def odometer_histogram(R, p):
    """Weight histogram over the F_p-span of rows R (shape r x n x h).

    The message digits run through F_p^r as an odometer; bumping digit j adds
    row j once, and a wrap p-1 -> 0 is also a single addition since p*row = 0.
    """
    r, n, h = R.shape
    hist = np.zeros(n + 1, dtype=np.int64)
    word = np.zeros((n, h), dtype=np.int64)
    nz = np.zeros(n, dtype=np.int64)
    digits = np.zeros(r, dtype=np.int64)
    weight = 0
    hist[0] += 1
    while True:
        j = 0
        while j < r:
            for s in range(n):
                for t in range(h):
                    d = R[j, s, t]
                    if d:
                        old = word[s, t]
                        new = (old + d) % p
                        word[s, t] = new
                        if old == 0:
                            if nz[s] == 0:
                                weight += 1
                            nz[s] += 1
                        elif new == 0:
                            nz[s] -= 1
                            if nz[s] == 0:
                                weight -= 1
            digits[j] += 1
            if digits[j] == p:
                digits[j] = 0
                j += 1
            else:
                break
        if j == r:
            break
        hist[weight] += 1
    return hist


@njit(cache=True, nogil=True)
def odometer_collect(R, p, target_weight, out):
    """Store message digit vectors of codewords with the given weight."""
    r, n, h = R.shape
    word = np.zeros((n, h), dtype=np.int64)
    nz = np.zeros(n, dtype=np.int64)
    digits = np.zeros(r, dtype=np.int64)
    weight = 0
    cnt = 0
    while True:
        j = 0
        while j < r:
            for s in range(n):
                for t in range(h):
                    d = R[j, s, t]
                    if d:
                        old = word[s, t]
                        new = (old + d) % p
                        word[s, t] = new
                        if old == 0:
                            if nz[s] == 0:
                                weight += 1
                            nz[s] += 1
                        elif new == 0:
                            nz[s] -= 1
                            if nz[s] == 0:
                                weight -= 1
            digits[j] += 1
            if digits[j] == p:
                digits[j] = 0
                j += 1
            else:
                break
        if j == r:
            break
        if weight == target_weight:
            if cnt < out.shape[0]:
                out[cnt, :] = digits
            cnt += 1
    return cnt
