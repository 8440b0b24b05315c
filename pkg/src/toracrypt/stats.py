"""Max-frequency n-gram statistics and approximate entropy.

Grams at stride d are formed at *every* start index (all residue classes
pooled), so stride 1 reduces to plain contiguous n-grams.  A per-class
variant is provided for comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .corpus import ALPHABET_SIZE, LetterStream

# Above this table size the dense bincount kernel gives way to a sparse path.
_DENSE_LIMIT = 16_000_000


@dataclass(frozen=True)
class NGramReport:
    """Most frequent n-gram at one stride; histogram kept only on request."""

    n: int
    skip: int
    best_gram: tuple[int, ...]
    best_count: int
    histogram: dict[tuple[int, ...], int] | None = None


def _decode_gram(gram_id: int, n: int) -> tuple[int, ...]:
    out = [0] * n
    for k in range(n - 1, -1, -1):
        gram_id, out[k] = divmod(gram_id, ALPHABET_SIZE)
    return tuple(out)


def _gram_ids(symbols: np.ndarray, n: int, skip: int) -> np.ndarray:
    m = symbols.size - (n - 1) * skip
    ids = symbols[:m].astype(np.int64)
    for k in range(1, n):
        off = k * skip
        ids *= ALPHABET_SIZE
        ids += symbols[off : off + m]
    return ids


def max_ngram(
    stream: LetterStream, n: int, skip: int, keep_histogram: bool = False
) -> NGramReport:
    """Most frequent n-gram with internal stride ``skip``.

    Ties break to the lexicographically smallest gram (alphabet order).
    """
    if n < 2:
        raise ValueError("gram size must be >= 2")
    if n * math.log2(ALPHABET_SIZE) >= 62:  # gram ids must fit in int64
        raise ValueError(f"gram size {n} is not supported")
    if skip < 1:
        raise ValueError("skip must be >= 1")
    if len(stream) < (n - 1) * skip + 1:
        raise ValueError(
            f"stream of length {len(stream)} is too short for one {n}-gram at skip {skip}"
        )
    if ALPHABET_SIZE**n <= _DENSE_LIMIT:
        counts = kernels.ngram_counts(stream.symbols, n, skip, ALPHABET_SIZE)
        best_id = int(np.argmax(counts))  # first maximum = smallest gram
        best_count = int(counts[best_id])
        histogram = None
        if keep_histogram:
            nonzero = np.flatnonzero(counts)
            histogram = {_decode_gram(int(g), n): int(counts[g]) for g in nonzero}
    else:
        ids = _gram_ids(stream.symbols, n, skip)
        uniq, cnt = np.unique(ids, return_counts=True)
        at = int(np.argmax(cnt))
        best_id, best_count = int(uniq[at]), int(cnt[at])
        histogram = (
            {_decode_gram(int(g), n): int(c) for g, c in zip(uniq, cnt)}
            if keep_histogram
            else None
        )
    return NGramReport(n, skip, _decode_gram(best_id, n), best_count, histogram)


def max_pair(stream: LetterStream, skip: int, keep_histogram: bool = False) -> NGramReport:
    return max_ngram(stream, 2, skip, keep_histogram)


def max_trip(stream: LetterStream, skip: int, keep_histogram: bool = False) -> NGramReport:
    return max_ngram(stream, 3, skip, keep_histogram)


def max_quad(stream: LetterStream, skip: int, keep_histogram: bool = False) -> NGramReport:
    return max_ngram(stream, 4, skip, keep_histogram)


def max_ngram_per_class(
    stream: LetterStream, n: int, skip: int
) -> list[tuple[int, NGramReport]]:
    """Per-residue-class variant: grams counted inside each class i mod skip.

    Returns (class, report) pairs for every class long enough to hold a
    gram.  No pooled-reading equivalence is implied.
    """
    out = []
    for r in range(skip):
        decimated = LetterStream(
            stream.symbols[r::skip], source_tag=f"{stream.source_tag}[{r}::{skip}]"
        )
        if len(decimated) < n:
            continue
        rep = max_ngram(decimated, n, 1)
        out.append((r, NGramReport(n, skip, rep.best_gram, rep.best_count)))
    return out


def _window_multiplicities(symbols: np.ndarray, width: int, positions: int) -> np.ndarray:
    """multiplicities[i] = how many of the first ``positions`` windows of
    ``width`` letters equal the window at i."""
    base = int(symbols.max()) + 1 if symbols.size else 1
    if width * math.log2(max(base, 2)) < 62:
        ids = symbols[:positions].astype(np.int64)
        for k in range(1, width):
            ids *= base
            ids += symbols[k : k + positions]
        _, inverse, counts = np.unique(ids, return_inverse=True, return_counts=True)
    else:
        windows = np.lib.stride_tricks.sliding_window_view(symbols, width)[:positions]
        _, inverse, counts = np.unique(
            windows, axis=0, return_inverse=True, return_counts=True
        )
    return counts[inverse]


def approx_entropy(stream: LetterStream | np.ndarray, m: int) -> float:
    """Approximate entropy of a symbol stream at window length ``m``.

    Exact-match form: over the N-m positions that carry both an m-window
    and an (m+1)-window, the mean of ln(count_m / count_m1), where the
    counts are window multiplicities over those same positions
    (self-match included).  Always >= 0; exactly 0 for constant and
    period-locked streams.
    """
    symbols = stream.symbols if isinstance(stream, LetterStream) else np.asarray(stream)
    if m < 1:
        raise ValueError("window length m must be >= 1")
    n = int(symbols.size)
    if n < m + 1:
        raise ValueError(f"stream of length {n} is shorter than m+1 = {m + 1}")
    positions = n - m
    cnt_m = _window_multiplicities(symbols, m, positions)
    cnt_m1 = _window_multiplicities(symbols, m + 1, positions)
    terms = np.log(cnt_m / cnt_m1)
    return float(terms.sum() / positions)
