"""Compiled branch-and-bound kernel for exhaustive class searches.

Wirings are enumerated column by column.  After the first k columns are
fixed, pressing only those buttons already reaches every state in their
span, and the remaining columns cannot reduce that reach.  So the best lit
count over the partial span is a lower bound on M for every completion,
and a subtree is dropped as soon as that bound meets the incumbent.
"""

from __future__ import annotations

import numpy as np
from numba import njit

MODE_MU = 0
MODE_NU = 1


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return (x * 0x0101010101010101) >> 56


@njit(cache=True)
def search(n, choices, nchoices, first_lo, first_hi, mode, prune):
    """Minimise M(W, 0) (mode 0) or min_c M(W, c) (mode 1) over the class.

    Column 0 ranges over choice indices [first_lo, first_hi).  Returns
    (value, choice index per column of the first minimiser, minimising c,
    number of complete wirings evaluated).
    """
    size = 1 << n
    span = np.zeros(size, dtype=np.int64)
    inspan = np.zeros(size, dtype=np.bool_)
    sz = np.zeros(n + 1, dtype=np.int64)
    filled = np.zeros(n + 1, dtype=np.int64)
    bound = np.zeros(n + 1, dtype=np.int64)
    ci = np.zeros(n + 1, dtype=np.int64)
    # mode 1: per-level max over span of |s ^ c| for every c
    ncfg = size if mode == MODE_NU else 1
    reach = np.zeros((n + 1, ncfg), dtype=np.int64)

    best = n + 1
    best_ci = np.zeros(n, dtype=np.int64)
    best_c = 0
    examined = 0

    if n == 0:
        return 0, best_ci, 0, 1

    span[0] = 0
    inspan[0] = True
    sz[0] = 1
    bound[0] = 0
    if mode == MODE_NU:
        for c in range(ncfg):
            reach[0, c] = _popcount(c)
        bound[0] = 0  # min_c |c| over c = 0

    k = 0
    ci[0] = first_lo - 1
    filled[0] = 1
    while k >= 0:
        ci[k] += 1
        # undo the previous choice at this depth
        for t in range(sz[k], filled[k]):
            inspan[span[t]] = False
        filled[k] = sz[k]
        limit = first_hi if k == 0 else nchoices[k]
        if ci[k] >= limit:
            k -= 1
            continue
        v = choices[k, ci[k]]
        s0 = sz[k]
        if inspan[v]:
            sz[k + 1] = s0
            bound[k + 1] = bound[k]
            if mode == MODE_NU:
                for c in range(ncfg):
                    reach[k + 1, c] = reach[k, c]
        else:
            for t in range(s0):
                u = span[t] ^ v
                span[s0 + t] = u
                inspan[u] = True
            sz[k + 1] = 2 * s0
            filled[k] = 2 * s0
            if mode == MODE_MU:
                b = bound[k]
                for t in range(s0, 2 * s0):
                    w = _popcount(span[t])
                    if w > b:
                        b = w
                bound[k + 1] = b
            else:
                lo = n + 1
                for c in range(ncfg):
                    r = reach[k, c]
                    for t in range(s0, 2 * s0):
                        w = _popcount(span[t] ^ c)
                        if w > r:
                            r = w
                    reach[k + 1, c] = r
                    if r < lo:
                        lo = r
                bound[k + 1] = lo
        if k + 1 == n:
            examined += 1
            if bound[n] < best:
                best = bound[n]
                for j in range(n):
                    best_ci[j] = ci[j]
                if mode == MODE_NU:
                    for c in range(ncfg):
                        if reach[n, c] == best:
                            best_c = c
                            break
            continue
        if prune and bound[k + 1] >= best:
            continue
        k += 1
        ci[k] = -1
        filled[k] = sz[k]
    return best, best_ci, best_c, examined
