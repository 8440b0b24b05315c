from __future__ import annotations

import collections

import numpy as np
import pytest

from conftest import make_stream
from oracles import grid_pipeline_oracle, t2_library_oracle
from toracrypt import (
    LetterStream,
    PermutationKey,
    apply_key,
    build_t2_library,
    compose,
    identity_key,
    inverse,
    key_from_grid,
    key_order,
    load_corpus,
)
from toracrypt.permute import COLUMN_MAJOR, ROW_MAJOR, dump_key, load_key, parse_key, save_key
from toracrypt.grid import BOTTOM_UP, TOP_DOWN


def random_key(rng, n=85):
    return PermutationKey(tuple(int(i) for i in rng.permutation(n)))


class TestKeyFromGrid:
    def test_identity_pipeline(self):
        key = key_from_grid(6, 2, 3, (0, 1), ROW_MAJOR, TOP_DOWN)
        assert key == identity_key(6)

    def test_column_major_hand_trace(self):
        key = key_from_grid(6, 2, 3, (0, 1), COLUMN_MAJOR, TOP_DOWN)
        assert key.mapping == (0, 3, 1, 4, 2, 5)
        stream = load_corpus("ABGDHZ", "latin")
        assert apply_key(key, stream).to_latin() == "ADBHGZ"

    def test_matches_pipeline_oracle(self):
        rng = np.random.default_rng(3)
        for rows, cols in ((2, 3), (3, 5), (5, 17), (4, 4)):
            order = tuple(int(r) for r in rng.permutation(rows))
            for mode in (ROW_MAJOR, COLUMN_MAJOR):
                for direction in (TOP_DOWN, BOTTOM_UP):
                    key = key_from_grid(rows * cols, rows, cols, order, mode, direction)
                    assert key.mapping == grid_pipeline_oracle(rows, cols, order, mode, direction)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="does not hold"):
            key_from_grid(7, 2, 3, (0, 1))

    def test_label_records_parameters(self):
        key = key_from_grid(85, 5, 17, (2, 4, 0, 3, 1), COLUMN_MAJOR, TOP_DOWN)
        assert key.label == "grid 5x17 roworder=(2, 4, 0, 3, 1) read=col dir=down"


class TestApply:
    def test_identity(self, t2_stream):
        assert np.array_equal(apply_key(identity_key(85), t2_stream).symbols, t2_stream.symbols)

    def test_multiset_preserved(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            stream = make_stream(rng, 85)
            permuted = apply_key(random_key(rng), stream)
            assert collections.Counter(permuted.symbols.tolist()) == collections.Counter(
                stream.symbols.tolist()
            )

    def test_inverse_round_trip(self):
        rng = np.random.default_rng(7)
        stream = make_stream(rng, 85)
        key = random_key(rng)
        assert apply_key(key, apply_key(inverse(key), stream)) == LetterStream(stream.symbols)

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="does not match key domain"):
            apply_key(identity_key(3), load_corpus("ABGD", "latin"))


class TestAlgebra:
    def test_compose_semantics(self):
        rng = np.random.default_rng(11)
        for _ in range(25):
            stream = make_stream(rng, 85)
            k1, k2 = random_key(rng), random_key(rng)
            left = apply_key(compose(k1, k2), stream)
            right = apply_key(k1, apply_key(k2, stream))
            assert np.array_equal(left.symbols, right.symbols)

    def test_group_laws(self):
        rng = np.random.default_rng(13)
        e = identity_key(85)
        for _ in range(50):
            a, b, c = (random_key(rng) for _ in range(3))
            assert compose(e, a) == a == compose(a, e)
            assert compose(a, inverse(a)) == e == compose(inverse(a), a)
            assert compose(compose(a, b), c) == compose(a, compose(b, c))

    def test_double_inverse(self):
        rng = np.random.default_rng(17)
        k = random_key(rng)
        assert inverse(inverse(k)) == k

    def test_domain_mismatch(self):
        with pytest.raises(ValueError, match="domain mismatch"):
            compose(identity_key(3), identity_key(4))

    def test_non_bijection_rejected(self):
        with pytest.raises(ValueError, match="not a bijection"):
            PermutationKey((0, 0, 1))


class TestKeyOrder:
    def test_identity(self):
        assert key_order(identity_key(10)) == 1

    def test_transposition(self):
        assert key_order(PermutationKey((1, 0, 2, 3))) == 2

    def test_grid_key_cross_checked_by_iteration(self):
        key = key_from_grid(6, 2, 3, (0, 1), COLUMN_MAJOR, TOP_DOWN)
        order = key_order(key)
        assert order == 4
        walk = key
        for step in range(1, order):
            assert walk != identity_key(6)
            walk = compose(walk, key)
        assert walk == identity_key(6)

    def test_random_keys_iteration_agrees(self):
        rng = np.random.default_rng(19)
        checked = 0
        while checked < 25:
            key = random_key(rng, 30)
            order = key_order(key)
            if order > 5000:
                continue
            walk = tuple(range(30))
            for step in range(1, order + 1):
                walk = tuple(key.mapping[i] for i in walk)
                if step < order:
                    assert walk != tuple(range(30))
            assert walk == tuple(range(30))
            checked += 1


class TestNonCommutativity:
    def test_pinned_witness_pair(self):
        k1 = key_from_grid(85, 5, 17, range(5), COLUMN_MAJOR, TOP_DOWN)
        k2 = key_from_grid(85, 5, 17, (1, 0, 2, 3, 4), ROW_MAJOR, TOP_DOWN)
        ab = compose(k1, k2)
        ba = compose(k2, k1)
        assert ab != ba
        assert ab.mapping[:4] == (17, 0, 34, 51)
        assert ba.mapping[:4] == (37, 54, 71, 4)


class TestT2Library:
    def test_size_matches_enumeration_oracle(self):
        library = build_t2_library()
        oracle = t2_library_oracle()
        assert {key.mapping for key in library.keys} == oracle
        assert len(library) == len(oracle) == 243

    def test_domain_and_identity(self):
        library = build_t2_library()
        assert library.n == 85
        assert all(key.n == 85 for key in library.keys)
        assert identity_key(85) in library.keys

    def test_labels_distinct(self):
        library = build_t2_library()
        labels = library.labels()
        assert len(set(labels)) == len(labels)

    def test_contains_a_noncommuting_pair(self):
        keys = build_t2_library().keys
        k1 = next(k for k in keys if k.label.endswith("read=col dir=down") and "roworder=(0, 1, 2, 3, 4)" in k.label)
        k2 = next(k for k in keys if k.label.endswith("read=row dir=down") and "roworder=(1, 0, 2, 3, 4)" in k.label)
        assert compose(k1, k2) != compose(k2, k1)


class TestSerialization:
    def test_text_round_trip(self):
        rng = np.random.default_rng(23)
        key = key_from_grid(85, 5, 17, tuple(int(r) for r in rng.permutation(5)))
        assert parse_key(dump_key(key)) == key
        assert parse_key(dump_key(key)).label == key.label

    def test_file_round_trip(self, tmp_path):
        key = key_from_grid(85, 17, 5, range(17), ROW_MAJOR, BOTTOM_UP)
        path = tmp_path / "a.key"
        save_key(key, path)
        loaded = load_key(path)
        assert loaded == key and loaded.label == key.label

    def test_header_mismatch_rejected(self):
        with pytest.raises(ValueError, match="header says 4"):
            parse_key("4\n0,1,2\nbad\n")

    def test_truncated_rejected(self):
        with pytest.raises(ValueError, match="at least two lines"):
            parse_key("5\n")
