"""Pure-NumPy Montgomery kernels, vectorized across sample points.

Same algorithm and same exact uint64 limb arithmetic as the numba
backend; the sample-point axis is the vector axis.  Deliberate uint64
wraparound stands in for the mod-2^64 arithmetic of the reduction.
"""

from __future__ import annotations

import numpy as np

_SH = np.uint64(32)
_LO = np.uint64(0xFFFFFFFF)
_ZERO = np.uint64(0)
_ONE = np.uint64(1)


def _mul(a, b, p, npinv):
    a = np.asarray(a, dtype=np.uint64)
    b = np.asarray(b, dtype=np.uint64)
    a_hi = a >> _SH
    a_lo = a & _LO
    b_hi = b >> _SH
    b_lo = b & _LO
    ll = a_lo * b_lo
    lh = a_lo * b_hi
    hl = a_hi * b_lo
    mid = (ll >> _SH) + (lh & _LO) + (hl & _LO)
    t_lo = (ll & _LO) | ((mid & _LO) << _SH)
    t_hi = a_hi * b_hi + (lh >> _SH) + (hl >> _SH) + (mid >> _SH)
    m = t_lo * npinv
    m_hi = m >> _SH
    m_lo = m & _LO
    p_hi = p >> _SH
    p_lo = p & _LO
    ll2 = m_lo * p_lo
    lh2 = m_lo * p_hi
    hl2 = m_hi * p_lo
    mid2 = (ll2 >> _SH) + (lh2 & _LO) + (hl2 & _LO)
    mp_hi = m_hi * p_hi + (lh2 >> _SH) + (hl2 >> _SH) + (mid2 >> _SH)
    r = t_hi + mp_hi + (t_lo != _ZERO).astype(np.uint64)
    # branchless reductions below never wrap: all sums stay under 2^63
    return r - (r >= p) * p


def _add(a, b, p):
    r = a + b
    return r - (r >= p) * p


def _sub(a, b, p):
    return a + (a < b) * p - b


def _pow(base, exponent: int, p, npinv, one):
    """base**exponent elementwise; exponent is a plain nonnegative int."""
    acc = np.broadcast_to(one, np.shape(base)).copy()
    cur = np.array(base, dtype=np.uint64, copy=True)
    e = int(exponent)
    while e:
        if e & 1:
            acc = _mul(acc, cur, p, npinv)
        cur = _mul(cur, cur, p, npinv)
        e >>= 1
    return acc


def det_samples(letters, n, neg, ts, p, npinv, r2, one):
    """t^neg * det(burau(letters)(t) - I) mod p at every t in ts."""
    p = np.uint64(p)
    npinv = np.uint64(npinv)
    one = np.uint64(one)
    k = int(n) - 1
    count = ts.shape[0]
    t_m = _mul(ts, np.uint64(r2), p, npinv)
    tinv_m = _pow(t_m, int(p) - 2, p, npinv, one)

    M = np.zeros((count, k, k), dtype=np.uint64)
    idx = np.arange(k)
    M[:, idx, idx] = one
    ones_col = np.full(count, one, dtype=np.uint64)
    for g in letters:
        g = int(g)
        i = abs(g)
        col = i - 1
        u = M[:, :, col].copy()
        if g > 0:
            diag, left, right = p - t_m, t_m, ones_col
        else:
            diag, left, right = p - tinv_m, ones_col, tinv_m
        M[:, :, col] = _mul(u, diag[:, None], p, npinv)
        if i >= 2:
            M[:, :, col - 1] = _add(M[:, :, col - 1],
                                    _mul(u, left[:, None], p, npinv), p)
        if i <= int(n) - 2:
            M[:, :, col + 1] = _add(M[:, :, col + 1],
                                    _mul(u, right[:, None], p, npinv), p)
    M[:, idx, idx] = _sub(M[:, idx, idx], one, p)

    # Division-free batched elimination: rows below the pivot become
    # piv*row - elem*pivot_row, which scales the determinant by
    # piv^(rows below); one inverse at the end undoes the accumulation.
    det = np.full(count, one, dtype=np.uint64)
    corr = np.full(count, one, dtype=np.uint64)
    flip = np.zeros(count, dtype=bool)
    rows = np.arange(count)
    for col in range(k):
        nz = M[:, col:, col] != _ZERO
        first = np.argmax(nz, axis=1)
        found = nz.any(axis=1)
        piv_row = col + first
        swap = (piv_row != col) & found
        if swap.any():
            tmp = M[rows, col, :].copy()
            M[rows, col, :] = M[rows, piv_row, :]
            M[rows, piv_row, :] = tmp
            flip ^= swap
        piv = np.where(found, M[:, col, col], _ZERO)
        det = _mul(det, piv, p, npinv)
        below = k - 1 - col
        if below > 0:
            elems = M[:, col + 1:, col].copy()
            block = M[:, col + 1:, col:]
            M[:, col + 1:, col:] = _sub(
                _mul(block, piv[:, None, None], p, npinv),
                _mul(M[:, col:col + 1, col:], elems[:, :, None], p, npinv), p)
            corr = _mul(corr, _pow(piv, below, p, npinv, one), p, npinv)
    det = _mul(det, _pow(corr, int(p) - 2, p, npinv, one), p, npinv)
    det = np.where(flip & (det != _ZERO), p - det, det)
    if int(neg) > 0:
        det = _mul(det, _pow(t_m, int(neg), p, npinv, one), p, npinv)
    return _mul(det, np.full(count, _ONE), p, npinv)


def interpolate(ys, p, npinv, r2, one):
    """Coefficients mod p of the polynomial through (j+1, ys[j])."""
    p = np.uint64(p)
    npinv = np.uint64(npinv)
    r2 = np.uint64(r2)
    one = np.uint64(one)
    count = ys.shape[0]
    dd = _mul(ys, r2, p, npinv)
    nodes_m = _mul(np.arange(1, count + 1, dtype=np.uint64), r2, p, npinv)
    inv_m = _pow(nodes_m, int(p) - 2, p, npinv, one)
    for level in range(1, count):
        dd[level:] = _mul(_sub(dd[level:], dd[level - 1:count - 1], p),
                          inv_m[level - 1], p, npinv)
    coeffs = np.zeros(count, dtype=np.uint64)
    pad = np.zeros(1, dtype=np.uint64)
    for idx in range(count - 1, -1, -1):
        shifted = np.concatenate((pad, coeffs[:-1]))
        coeffs = _sub(shifted, _mul(coeffs, nodes_m[idx], p, npinv), p)
        coeffs[0:1] = _add(coeffs[0:1], dd[idx:idx + 1], p)
    return _mul(coeffs, np.full(count, _ONE), p, npinv)
