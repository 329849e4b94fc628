"""Compiled hot loops for signature computation.

The two kernels are deliberately asymmetric.  The random-parameter kernel
pays one multiply and one modulo per (hash, feature) visit.  The
incremental kernel advances each feature's hash walk by repeated addition
with a conditional subtract: no multiplication and no division inside the
sweep.  The timing harness measures exactly this contrast, so keep the
inner loops as they are.

Both kernels require ids, parameters and prime to be canonical residues
with prime <= MAX_VECTOR_PRIME; callers fall back to the exact scalar path
beyond that.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def sign_random(ids, a, b, p):
    """Per-hash argmin feature id under h_i(x) = (a[i]*x + b[i]) % p.

    ids must be sorted ascending; strict less-than keeps the smallest
    feature id on ties.
    """
    n = a.shape[0]
    out = np.empty(n, np.int64)
    for i in range(n):
        ai = a[i]
        bi = b[i]
        best = (ai * ids[0] + bi) % p
        arg = ids[0]
        for j in range(1, ids.shape[0]):
            hv = (ai * ids[j] + bi) % p
            if hv < best:
                best = hv
                arg = ids[j]
        out[i] = arg
    return out


@njit(cache=True)
def sign_iterative(ids, a, b, p, n):
    """Per-hash argmin feature id under h_i(x) = ((a+i)*x + i*b) % p.

    For each feature the walk starts at (a*x) % p and advances by
    dh = (x+b) % p per hash index; the inner loop is add/compare only.
    """
    best = np.empty(n, np.int64)
    arg = np.empty(n, np.int64)
    x = ids[0]
    dh = (x + b) % p
    h = (a * x) % p
    for i in range(n):
        best[i] = h
        arg[i] = x
        h += dh
        if h >= p:
            h -= p
    for j in range(1, ids.shape[0]):
        x = ids[j]
        dh = (x + b) % p
        h = (a * x) % p
        for i in range(n):
            if h < best[i]:
                best[i] = h
                arg[i] = x
            h += dh
            if h >= p:
                h -= p
    return arg
