"""Batch integer kernels: tree-level expansion and the brute-force PPT sieve.

Both kernels exist twice, a numba ``@njit`` loop and a vectorised numpy
version.  ``PPTREE_DISABLE_NUMBA=1`` (or numba being unavailable) selects
the numpy path.  Inputs are int64; callers must keep values below
``INT64_SAFE`` so that no intermediate product overflows.
"""

from __future__ import annotations

import os
from math import isqrt

import numpy as np

INT64_SAFE = 1 << 59

_DISABLED = os.environ.get("PPTREE_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    if _DISABLED:
        raise ImportError("numba disabled by PPTREE_DISABLE_NUMBA")
    from numba import njit
except ImportError:
    njit = None

USING_NUMBA = njit is not None


def expand_level_numpy(nodes: np.ndarray, mats: np.ndarray) -> np.ndarray:
    """Children of every row of ``nodes`` (shape ``(n, 3)``), in row-major letter order."""
    # out[i, k] = mats[k] @ nodes[i]
    out = np.einsum("kij,nj->nki", mats, nodes)
    return out.reshape(-1, 3)


def ppt_sieve_numpy(max_c: int) -> np.ndarray:
    """All PPTs with ``c <= max_c`` from coprime, opposite-parity ``p > q``."""
    if max_c < 5:
        return np.empty((0, 3), dtype=np.int64)
    top = isqrt(max_c) + 1
    p, q = np.meshgrid(np.arange(2, top + 1, dtype=np.int64),
                       np.arange(1, top + 1, dtype=np.int64), indexing="ij")
    p, q = p.ravel(), q.ravel()
    keep = (q < p) & ((p - q) % 2 == 1) & (np.gcd(p, q) == 1) & (p * p + q * q <= max_c)
    p, q = p[keep], q[keep]
    out = np.stack([p * p - q * q, 2 * p * q, p * p + q * q], axis=1)
    order = np.lexsort((out[:, 0], out[:, 2]))
    return out[order]


if USING_NUMBA:

    @njit(cache=True)
    def _expand_level_jit(nodes, mats):
        n = nodes.shape[0]
        out = np.empty((3 * n, 3), dtype=np.int64)
        for i in range(n):
            a = nodes[i, 0]
            b = nodes[i, 1]
            c = nodes[i, 2]
            for k in range(3):
                row = 3 * i + k
                for r in range(3):
                    out[row, r] = mats[k, r, 0] * a + mats[k, r, 1] * b + mats[k, r, 2] * c
        return out

    @njit(cache=True)
    def _gcd(x, y):
        while y:
            x, y = y, x % y
        return x

    @njit(cache=True)
    def _ppt_sieve_jit(max_c):
        cap = max_c // 4 + 8
        out = np.empty((cap, 3), dtype=np.int64)
        m = 0
        p = 2
        while p * p + 1 <= max_c:
            q = 1 + p % 2
            while q < p and p * p + q * q <= max_c:
                if _gcd(p, q) == 1:
                    out[m, 0] = p * p - q * q
                    out[m, 1] = 2 * p * q
                    out[m, 2] = p * p + q * q
                    m += 1
                q += 2
            p += 1
        return out[:m]

    def expand_level(nodes: np.ndarray, mats: np.ndarray) -> np.ndarray:
        return _expand_level_jit(np.ascontiguousarray(nodes, dtype=np.int64),
                                 np.ascontiguousarray(mats, dtype=np.int64))

    def ppt_sieve(max_c: int) -> np.ndarray:
        if max_c < 5:
            return np.empty((0, 3), dtype=np.int64)
        out = _ppt_sieve_jit(np.int64(max_c))
        order = np.lexsort((out[:, 0], out[:, 2]))
        return out[order]

else:
    expand_level = expand_level_numpy
    ppt_sieve = ppt_sieve_numpy
