"""Scalar Montgomery kernels compiled with numba.

All arithmetic is on ``uint64``; 128-bit products are assembled from
32-bit limbs so every intermediate fits a machine word.  Values stay in
Montgomery form (x * 2^64 mod p) throughout a computation.
"""

from __future__ import annotations

import numpy as np
from numba import njit, uint64


@njit(cache=True, inline="always")
def _mul(a, b, p, npinv):
    # full 128-bit product of a and b via 32-bit limbs
    a_hi = a >> uint64(32)
    a_lo = a & uint64(0xFFFFFFFF)
    b_hi = b >> uint64(32)
    b_lo = b & uint64(0xFFFFFFFF)
    ll = a_lo * b_lo
    lh = a_lo * b_hi
    hl = a_hi * b_lo
    mid = (ll >> uint64(32)) + (lh & uint64(0xFFFFFFFF)) + (hl & uint64(0xFFFFFFFF))
    t_lo = (ll & uint64(0xFFFFFFFF)) | ((mid & uint64(0xFFFFFFFF)) << uint64(32))
    t_hi = a_hi * b_hi + (lh >> uint64(32)) + (hl >> uint64(32)) + (mid >> uint64(32))
    # Montgomery reduction: add m*p with m = t_lo * (-p^-1) mod 2^64,
    # making the low word vanish, then divide by 2^64.
    m = t_lo * npinv
    m_hi = m >> uint64(32)
    m_lo = m & uint64(0xFFFFFFFF)
    p_hi = p >> uint64(32)
    p_lo = p & uint64(0xFFFFFFFF)
    ll2 = m_lo * p_lo
    lh2 = m_lo * p_hi
    hl2 = m_hi * p_lo
    mid2 = (ll2 >> uint64(32)) + (lh2 & uint64(0xFFFFFFFF)) + (hl2 & uint64(0xFFFFFFFF))
    mp_hi = m_hi * p_hi + (lh2 >> uint64(32)) + (hl2 >> uint64(32)) + (mid2 >> uint64(32))
    carry = uint64(1) if t_lo != uint64(0) else uint64(0)
    r = t_hi + mp_hi + carry
    if r >= p:
        r -= p
    return r


@njit(cache=True, inline="always")
def _add(a, b, p):
    r = a + b
    if r >= p:
        r -= p
    return r


@njit(cache=True, inline="always")
def _sub(a, b, p):
    if a >= b:
        return a - b
    return a + (p - b)


@njit(cache=True)
def _pow(a, e, p, npinv, one):
    acc = one
    base = a
    while e:
        if e & uint64(1):
            acc = _mul(acc, base, p, npinv)
        base = _mul(base, base, p, npinv)
        e >>= uint64(1)
    return acc


@njit(cache=True)
def det_samples(letters, n, neg, ts, p, npinv, r2, one):
    """t^neg * det(burau(letters)(t) - I) mod p at every t in ts."""
    k = n - 1
    count = ts.shape[0]
    out = np.empty(count, dtype=np.uint64)
    M = np.empty((k, k), dtype=np.uint64)
    col_copy = np.empty(k, dtype=np.uint64)
    for s in range(count):
        t_m = _mul(ts[s], r2, p, npinv)
        tinv_m = _pow(t_m, p - uint64(2), p, npinv, one)
        for r in range(k):
            for c in range(k):
                M[r, c] = uint64(0)
            M[r, r] = one
        for idx in range(letters.shape[0]):
            g = letters[idx]
            i = g if g > 0 else -g
            col = i - 1
            for r in range(k):
                col_copy[r] = M[r, col]
            if g > 0:
                diag = p - t_m
                left = t_m
                right = one
            else:
                diag = p - tinv_m
                left = one
                right = tinv_m
            for r in range(k):
                M[r, col] = _mul(col_copy[r], diag, p, npinv)
            if i >= 2:
                for r in range(k):
                    M[r, col - 1] = _add(M[r, col - 1],
                                         _mul(col_copy[r], left, p, npinv), p)
            if i <= n - 2:
                for r in range(k):
                    M[r, col + 1] = _add(M[r, col + 1],
                                         _mul(col_copy[r], right, p, npinv), p)
        for r in range(k):
            M[r, r] = _sub(M[r, r], one, p)
        # determinant by elimination with exact pivots
        det = one
        negate = False
        singular = False
        for col in range(k):
            piv_row = -1
            for r in range(col, k):
                if M[r, col] != uint64(0):
                    piv_row = r
                    break
            if piv_row < 0:
                singular = True
                break
            if piv_row != col:
                for c in range(col, k):
                    tmp = M[col, c]
                    M[col, c] = M[piv_row, c]
                    M[piv_row, c] = tmp
                negate = not negate
            piv = M[col, col]
            det = _mul(det, piv, p, npinv)
            piv_inv = _pow(piv, p - uint64(2), p, npinv, one)
            for r in range(col + 1, k):
                if M[r, col] != uint64(0):
                    factor = _mul(M[r, col], piv_inv, p, npinv)
                    for c in range(col, k):
                        M[r, c] = _sub(M[r, c],
                                       _mul(factor, M[col, c], p, npinv), p)
        if singular:
            out[s] = uint64(0)
            continue
        if negate:
            det = p - det
        if neg > 0:
            det = _mul(det, _pow(t_m, uint64(neg), p, npinv, one), p, npinv)
        out[s] = _mul(det, uint64(1), p, npinv)
    return out


@njit(cache=True)
def interpolate(ys, p, npinv, r2, one):
    """Coefficients mod p of the polynomial through (j+1, ys[j])."""
    count = ys.shape[0]
    dd = np.empty(count, dtype=np.uint64)
    for i in range(count):
        dd[i] = _mul(ys[i], r2, p, npinv)
    # divided differences over the consecutive nodes 1..count
    for level in range(1, count):
        step_m = _mul(uint64(level), r2, p, npinv)
        inv_m = _pow(step_m, p - uint64(2), p, npinv, one)
        for i in range(count - 1, level - 1, -1):
            dd[i] = _mul(_sub(dd[i], dd[i - 1], p), inv_m, p, npinv)
    coeffs = np.zeros(count, dtype=np.uint64)
    for idx in range(count - 1, -1, -1):
        node_m = _mul(uint64(idx + 1), r2, p, npinv)
        for e in range(count - 1, 0, -1):
            coeffs[e] = _sub(coeffs[e - 1], _mul(coeffs[e], node_m, p, npinv), p)
        coeffs[0] = _sub(dd[idx], _mul(coeffs[0], node_m, p, npinv), p)
    out = np.empty(count, dtype=np.uint64)
    for i in range(count):
        out[i] = _mul(coeffs[i], uint64(1), p, npinv)
    return out
