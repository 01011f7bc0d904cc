"""Compiled inner loop of the exhaustive search.

Mirrors `search.solve_for_C_coeffs` over every (A, B) pair of one degree
block, in int64. Callers must check `int64_safe` first; anything the kernel
reports is re-verified with exact integers by the caller.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None

INT64_LIMIT = 2**62


def int64_safe(max_deg: int, cap: int, c: int) -> bool:
    # every intermediate is bounded by a coefficient of A^2 + q B^2 or by c^2
    return 2 * (max_deg + 1) * cap * cap < INT64_LIMIT and c * c < INT64_LIMIT


def norm_tables(c: int) -> tuple[np.ndarray, np.ndarray]:
    """Which N <= c^2 can be |C(i)|^2 and |C(w)|^2 for some C with C(1) = c.

    C(i) = u + v i with u + v = c (mod 2); C(w) = x + y w (w a primitive cube
    root of unity) with x + y = c (mod 3). Both follow from z = 1 modulo 1 - z.
    """
    lim = c * c
    r = np.arange(-c, c + 1, dtype=np.int64)
    u, v = np.meshgrid(r, r, indexing="ij")
    gauss = np.zeros(lim + 1, np.bool_)
    eis = np.zeros(lim + 1, np.bool_)
    n = u * u + v * v
    sel = (n <= lim) & ((u + v - c) % 2 == 0)
    gauss[n[sel]] = True
    n = u * u - u * v + v * v
    sel = (n <= lim) & ((u + v - c) % 3 == 0)
    eis[n[sel]] = True
    return gauss, eis


def _block_search(As, Bs, c, cap, gauss, eis, out):
    nA, D1 = As.shape
    D = D1 - 1
    nB = Bs.shape[0]
    L = 2 * D + 1
    S = np.zeros(L, np.int64)
    qB2 = np.zeros((nB, L), np.int64)
    for ib in range(nB):
        for i in range(D):
            for j in range(D):
                qB2[ib, i + j + 1] += Bs[ib, i] * Bs[ib, j]
    C = np.zeros(D1, np.int64)
    xs = np.zeros(D1 + 1, np.int64)
    his = np.zeros(D1 + 1, np.int64)
    sums = np.zeros(D1 + 1, np.int64)
    used = np.zeros(D1 + 2, np.int64)
    sq = np.zeros(D1 + 2, np.int64)
    nout = 0
    overflow = False
    for ia in range(nA):
        for ib in range(nB):
            for k in range(L):
                S[k] = qB2[ib, k]
            for i in range(D1):
                ai = As[ia, i]
                for j in range(D1):
                    S[i + j] += ai * As[ia, j]
            if S[0] != 1:
                continue
            total = 0
            for k in range(L):
                total += S[k]
            if total != c * c:
                continue
            # S(i) i^-D = |C(i)|^2
            r0 = r1 = r2 = r3 = 0
            for k in range(L):
                m = k % 4
                if m == 0:
                    r0 += S[k]
                elif m == 1:
                    r1 += S[k]
                elif m == 2:
                    r2 += S[k]
                else:
                    r3 += S[k]
            u = r0 - r2
            v = r1 - r3
            for _ in range((4 - D % 4) % 4):
                u, v = -v, u
            if v != 0 or u < 0 or u > c * c or not gauss[u]:
                continue
            # S(w) w^-D = |C(w)|^2, in the basis 1, w with w^2 = -1 - w
            r0 = r1 = r2 = 0
            for k in range(L):
                m = k % 3
                if m == 0:
                    r0 += S[k]
                elif m == 1:
                    r1 += S[k]
                else:
                    r2 += S[k]
            u = r0 - r2
            v = r1 - r2
            for _ in range((3 - D % 3) % 3):
                u, v = -v, u - v
            if v != 0 or u < 0 or u > c * c or not eis[u]:
                continue
            C[:] = 0
            C[0] = 1
            C[D] = 1
            target_sq = S[D]
            k = 1
            used[1] = 2
            sq[1] = 2
            fresh = True
            while k >= 1:
                j = D - k
                if fresh:
                    fresh = False
                    free = D - 1 - 2 * (k - 1)
                    if used[k] + free > c or sq[k] + free > target_sq:
                        k -= 1
                        continue
                    if k > j:
                        ok = True
                        for kk in range(k, D + 1):
                            acc = 0
                            for i in range(kk + 1):
                                acc += C[i] * C[D - kk + i]
                            if acc != S[kk]:
                                ok = False
                                break
                        if ok and used[k] == c:
                            # keep C only if it is <= its reversal
                            le = True
                            for i in range(D1):
                                if C[i] != C[D - i]:
                                    le = C[i] < C[D - i]
                                    break
                            if le:
                                if nout < out.shape[0]:
                                    out[nout, 0] = ia
                                    out[nout, 1] = ib
                                    for i in range(D1):
                                        out[nout, 2 + i] = C[i]
                                    nout += 1
                                else:
                                    overflow = True
                        k -= 1
                        continue
                    s = S[k]
                    for i in range(1, k):
                        s -= C[i] * C[D - k + i]
                    if k == j:
                        if s % 2 != 0 or s // 2 < 1 or s // 2 > cap:
                            k -= 1
                            continue
                        x = s // 2
                        C[k] = x
                        xs[k] = x
                        his[k] = x
                        sums[k] = s
                        used[k + 1] = used[k] + x
                        sq[k + 1] = sq[k] + x * x
                        k += 1
                        fresh = True
                        continue
                    lo = s - cap
                    if lo < 1:
                        lo = 1
                    hi = s - 1
                    if hi > cap:
                        hi = cap
                    if lo > hi:
                        k -= 1
                        continue
                    xs[k] = lo - 1
                    his[k] = hi
                    sums[k] = s
                # advance the split at level k
                xs[k] += 1
                if xs[k] > his[k]:
                    C[k] = 0
                    if k != D - k:
                        C[D - k] = 0
                    k -= 1
                    continue
                x = xs[k]
                y = sums[k] - x
                C[k] = x
                C[D - k] = y
                used[k + 1] = used[k] + sums[k]
                sq[k + 1] = sq[k] + x * x + y * y
                k += 1
                fresh = True
    return nout, overflow


if njit is not None:
    _block_search_jit = njit(cache=True)(_block_search)
else:  # pragma: no cover
    _block_search_jit = None


def block_search(As: np.ndarray, Bs: np.ndarray, c: int, cap: int):
    """Run the kernel on one degree block; returns rows (ia, ib, C...)."""
    D1 = As.shape[1]
    size = 256
    fn = _block_search_jit or _block_search
    gauss, eis = norm_tables(c)
    while True:
        out = np.zeros((size, 2 + D1), np.int64)
        n, overflow = fn(As, Bs, c, cap, gauss, eis, out)
        if not overflow:
            return out[:n]
        size *= 8
