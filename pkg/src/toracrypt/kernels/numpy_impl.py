"""Pure-numpy kernel implementations (fallback backend)."""

from __future__ import annotations

import numpy as np


def els_scan(symbols, pattern, skip):
    s = np.asarray(symbols, dtype=np.uint8)
    p = np.asarray(pattern, dtype=np.uint8)
    n = s.size
    span = (p.size - 1) * abs(skip)
    m = n - span  # number of candidate starts
    if m <= 0:
        return np.empty(0, dtype=np.int64)
    if skip > 0:
        mask = s[:m] == p[0]
        for k in range(1, p.size):
            off = k * skip
            mask &= s[off : off + m] == p[k]
        return np.flatnonzero(mask).astype(np.int64)
    # Negative skip: starts live in [span, n); index start - k*|skip|.
    step = -skip
    mask = s[span:] == p[0]
    for k in range(1, p.size):
        off = span - k * step
        mask &= s[off : off + m] == p[k]
    return (np.flatnonzero(mask) + span).astype(np.int64)


def ngram_counts(symbols, n, skip, alphabet_size):
    s = np.asarray(symbols, dtype=np.int64)
    m = s.size - (n - 1) * skip
    if m <= 0:
        return np.zeros(alphabet_size**n, dtype=np.int64)
    ids = s[:m].copy()
    for k in range(1, n):
        off = k * skip
        ids *= alphabet_size
        ids += s[off : off + m]
    return np.bincount(ids, minlength=alphabet_size**n).astype(np.int64)
