"""JIT-compiled kernel implementations (default backend)."""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _els_scan(s, p, skip):
    n = s.shape[0]
    plen = p.shape[0]
    span = (plen - 1) * abs(skip)
    m = n - span
    if m <= 0:
        return np.empty(0, dtype=np.int64)
    base = 0 if skip > 0 else span
    # Early-exit scalar scan: ~1.05 letter compares per start on a
    # 22-letter alphabet.
    out = np.empty(m, dtype=np.int64)
    found = 0
    for start in range(base, base + m):
        idx = start
        ok = True
        for k in range(plen):
            if s[idx] != p[k]:
                ok = False
                break
            idx += skip
        if ok:
            out[found] = start
            found += 1
    return out[:found].copy()


@njit(cache=True)
def _ngram_counts(s, n, skip, alphabet_size):
    size = 1
    for _ in range(n):
        size *= alphabet_size
    counts = np.zeros(size, dtype=np.int64)
    m = s.shape[0] - (n - 1) * skip
    for i in range(m):
        gram = 0
        for k in range(n):
            gram = gram * alphabet_size + s[i + k * skip]
        counts[gram] += 1
    return counts


def els_scan(symbols, pattern, skip):
    s = np.ascontiguousarray(symbols, dtype=np.uint8)
    p = np.ascontiguousarray(pattern, dtype=np.uint8)
    return _els_scan(s, p, skip)


def ngram_counts(symbols, n, skip, alphabet_size):
    s = np.ascontiguousarray(symbols, dtype=np.int64)
    return _ngram_counts(s, n, skip, alphabet_size)
