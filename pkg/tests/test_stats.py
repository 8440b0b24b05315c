from __future__ import annotations

import math

import numpy as np
import pytest

from conftest import make_stream
from oracles import apen_oracle_loops, apen_oracle_matrix, max_ngram_oracle
from toracrypt import (
    ALPHABET_SIZE,
    LetterStream,
    approx_entropy,
    load_corpus,
    max_ngram,
    max_pair,
    max_quad,
    max_trip,
)
from toracrypt.stats import max_ngram_per_class


class TestMaxNgram:
    def test_tiebreak_on_ababab(self):
        # Grams at stride 2: (A,A), (B,B), (A,A), (B,B) -- tied, (A,A) wins.
        stream = load_corpus("ABABAB", "latin")
        rep = max_ngram(stream, 2, 2)
        assert rep.best_gram == (0, 0)
        assert rep.best_count == 2

    def test_single_gram(self):
        rep = max_pair(load_corpus("AA", "latin"), 1)
        assert rep.best_gram == (0, 0)
        assert rep.best_count == 1

    def test_delegation_identity(self):
        rng = np.random.default_rng(13)
        stream = make_stream(rng, 5000)
        assert max_trip(stream, 4) == max_ngram(stream, 3, 4)
        assert max_pair(stream, 2) == max_ngram(stream, 2, 2)
        assert max_quad(stream, 1) == max_ngram(stream, 4, 1)

    def test_too_short_stream_rejected(self):
        with pytest.raises(ValueError, match="too short"):
            max_ngram(load_corpus("ABG", "latin"), 4, 1)
        with pytest.raises(ValueError, match="too short"):
            max_ngram(load_corpus("ABGD", "latin"), 2, 4)

    def test_gram_size_and_skip_validated(self):
        stream = load_corpus("ABGD", "latin")
        with pytest.raises(ValueError):
            max_ngram(stream, 1, 1)
        with pytest.raises(ValueError):
            max_ngram(stream, 2, 0)
        with pytest.raises(ValueError, match="not supported"):
            max_ngram(LetterStream([0] * 40), 20, 1)

    def test_wide_gram_takes_the_sparse_path(self):
        # 22^6 exceeds the dense table limit; unique-based path must agree.
        rng = np.random.default_rng(59)
        stream = make_stream(rng, 300, alphabet=4)
        rep = max_ngram(stream, 6, 2)
        gram, count = max_ngram_oracle(stream.symbols, 6, 2)
        assert (rep.best_gram, rep.best_count) == (gram, count)

    def test_pigeonhole_lower_bound(self, backend):
        rng = np.random.default_rng(29)
        for _ in range(10):
            stream = make_stream(rng, int(rng.integers(200, 3000)))
            n, skip = int(rng.integers(2, 5)), int(rng.integers(1, 6))
            rep = max_ngram(stream, n, skip)
            grams = len(stream) - (n - 1) * skip
            assert rep.best_count >= math.ceil(grams / ALPHABET_SIZE**n)

    def test_oracle_equivalence(self, backend):
        rng = np.random.default_rng(31)
        for _ in range(10):
            stream = make_stream(rng, int(rng.integers(30, 1500)), alphabet=int(rng.integers(3, 23)))
            for n in (2, 3, 4):
                for skip in (1, 2, 5):
                    if len(stream) <= (n - 1) * skip:
                        continue
                    rep = max_ngram(stream, n, skip)
                    gram, count = max_ngram_oracle(stream.symbols, n, skip)
                    assert (rep.best_gram, rep.best_count) == (gram, count)

    def test_histogram_retention(self):
        stream = load_corpus("ABABAB", "latin")
        rep = max_ngram(stream, 2, 1, keep_histogram=True)
        assert rep.histogram == {(0, 1): 3, (1, 0): 2}
        assert rep.best_count == max(rep.histogram.values())
        assert sum(rep.histogram.values()) == len(stream) - 1

    def test_histogram_off_by_default(self):
        assert max_ngram(load_corpus("ABAB", "latin"), 2, 1).histogram is None


class TestPerResidueClass:
    def test_classes_are_decimated_sequences(self):
        # Stride-2 classes of ABGDHZ: AGH? no: indices 0,2,4 -> A,G,H and 1,3,5 -> B,D,Z.
        stream = load_corpus("ABGDHZ", "latin")
        reports = max_ngram_per_class(stream, 2, 2)
        assert len(reports) == 2
        for cls, rep in reports:
            decimated = stream.symbols[cls::2]
            gram, count = max_ngram_oracle(decimated, 2, 1)
            assert (rep.best_gram, rep.best_count) == (gram, count)

    def test_short_classes_are_dropped(self):
        stream = load_corpus("ABG", "latin")
        # stride 2: class 0 holds A,G (one pair), class 1 holds only B.
        reports = max_ngram_per_class(stream, 2, 2)
        assert [cls for cls, _ in reports] == [0]


class TestApproxEntropy:
    def test_constant_stream_is_exactly_zero(self):
        for length in (2, 5, 50, 400):
            for m in (1, 2, 3):
                if length >= m + 1:
                    assert approx_entropy(LetterStream([7] * length), m) == 0.0

    def test_period_two_is_zero_at_m1(self):
        for length in (10, 99, 100, 1001):
            stream = LetterStream(([0, 1] * length)[:length])
            assert abs(approx_entropy(stream, 1)) <= 1e-12

    def test_matches_loop_oracle_on_small_streams(self):
        rng = np.random.default_rng(37)
        for _ in range(15):
            stream = make_stream(rng, int(rng.integers(8, 60)), alphabet=int(rng.integers(2, 6)))
            for m in (1, 2, 3):
                got = approx_entropy(stream, m)
                want = apen_oracle_loops(list(stream.symbols), m)
                assert got == pytest.approx(want, abs=1e-12)

    def test_matches_matrix_oracle_on_medium_streams(self):
        rng = np.random.default_rng(41)
        for _ in range(8):
            stream = make_stream(rng, int(rng.integers(100, 700)), alphabet=int(rng.integers(2, 23)))
            m = int(rng.integers(1, 4))
            assert approx_entropy(stream, m) == pytest.approx(
                apen_oracle_matrix(stream.symbols, m), abs=1e-9
            )

    def test_nonnegative(self):
        rng = np.random.default_rng(43)
        for _ in range(20):
            stream = make_stream(rng, int(rng.integers(5, 500)), alphabet=int(rng.integers(2, 23)))
            assert approx_entropy(stream, int(rng.integers(1, 4))) >= 0.0

    def test_relabeling_invariance_is_bit_exact(self):
        rng = np.random.default_rng(47)
        for _ in range(10):
            stream = make_stream(rng, int(rng.integers(20, 800)))
            relabel = rng.permutation(ALPHABET_SIZE).astype(np.uint8)
            shuffled = LetterStream(relabel[stream.symbols])
            for m in (1, 2):
                assert approx_entropy(stream, m) == approx_entropy(shuffled, m)

    def test_too_short_rejected(self):
        with pytest.raises(ValueError, match="shorter than m\\+1"):
            approx_entropy(LetterStream([1, 2]), 2)
        with pytest.raises(ValueError):
            approx_entropy(LetterStream([]), 1)

    def test_bad_m_rejected(self):
        with pytest.raises(ValueError):
            approx_entropy(LetterStream([1, 2, 3]), 0)

    def test_accepts_plain_arrays(self):
        assert approx_entropy(np.array([0, 1, 0, 1, 0, 1]), 1) == 0.0
