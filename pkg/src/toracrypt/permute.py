"""Composable transposition keys over index sets.

A key is an explicit bijection on {0..n-1} applied position-wise:
``result[i] = input[mapping[i]]``.  Grid keys package the
write-row-major / permute-rows / read pipeline as one bijection, so
whole pipelines compose, invert and repeat like any other permutation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import permutations

import numpy as np

from .corpus import LetterStream
from .grid import BOTTOM_UP, TOP_DOWN, validate_row_order

ROW_MAJOR = "row-major"
COLUMN_MAJOR = "column-major"

# T2 block length; the n every library key acts on.
T2_SIZE = 85

# Row orders are enumerated exhaustively only up to this many rows; wider
# write shapes contribute identity-order keys only.
_ENUMERATE_ROWS_MAX = 5


@dataclass(frozen=True, eq=False)
class PermutationKey:
    """Bijection on {0..n-1}; equality and hashing ignore the label."""

    mapping: tuple[int, ...]
    label: str = ""

    def __post_init__(self) -> None:
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise ValueError("mapping is not a bijection on 0..n-1")

    @property
    def n(self) -> int:
        return len(self.mapping)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermutationKey):
            return NotImplemented
        return self.mapping == other.mapping

    def __hash__(self) -> int:
        return hash(self.mapping)

    def __repr__(self) -> str:
        return f"PermutationKey(n={self.n}, label={self.label!r})"


@dataclass(frozen=True)
class KeyLibrary:
    """Keys sharing one domain size, distinct as bijections."""

    n: int
    keys: tuple[PermutationKey, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        for key in self.keys:
            if key.n != self.n:
                raise ValueError(f"key {key.label!r} has domain {key.n}, expected {self.n}")
        if len({key.mapping for key in self.keys}) != len(self.keys):
            raise ValueError("library contains duplicate mappings")

    def __len__(self) -> int:
        return len(self.keys)

    def labels(self) -> tuple[str, ...]:
        return tuple(key.label for key in self.keys)


def identity_key(n: int) -> PermutationKey:
    return PermutationKey(tuple(range(n)), "identity")


def key_from_grid(
    n: int,
    rows: int,
    cols: int,
    row_order,
    read_mode: str = COLUMN_MAJOR,
    col_direction: str = TOP_DOWN,
) -> PermutationKey:
    """The key equivalent to: write row-major into rows x cols, reorder the
    rows, then read in ``read_mode`` walking rows in ``col_direction``."""
    if rows * cols != n:
        raise ValueError(f"{rows}x{cols} grid does not hold {n} positions")
    order = validate_row_order(row_order, rows)
    if col_direction == TOP_DOWN:
        visit = order
    elif col_direction == BOTTOM_UP:
        visit = order[::-1]
    else:
        raise ValueError(f"unknown direction {col_direction!r}")
    mapping = [0] * n
    if read_mode == ROW_MAJOR:
        for r in range(rows):
            src = visit[r] * cols
            for c in range(cols):
                mapping[r * cols + c] = src + c
    elif read_mode == COLUMN_MAJOR:
        p = 0
        for c in range(cols):
            for r in range(rows):
                mapping[p] = visit[r] * cols + c
                p += 1
    else:
        raise ValueError(f"unknown read mode {read_mode!r}")
    mode = "row" if read_mode == ROW_MAJOR else "col"
    direction = "down" if col_direction == TOP_DOWN else "up"
    label = f"grid {rows}x{cols} roworder={order} read={mode} dir={direction}"
    return PermutationKey(tuple(mapping), label)


def apply_key(key: PermutationKey, stream: LetterStream) -> LetterStream:
    """Permute a stream: output[i] = input[mapping[i]].  The letter
    multiset is preserved; marker annotations do not survive."""
    if len(stream) != key.n:
        raise ValueError(f"stream of length {len(stream)} does not match key domain {key.n}")
    idx = np.asarray(key.mapping, dtype=np.int64)
    tag = f"{key.label or 'key'}({stream.source_tag})"
    return LetterStream(stream.symbols[idx], tag)


def compose(k1: PermutationKey, k2: PermutationKey) -> PermutationKey:
    """Key acting like k2 first, then k1:
    apply_key(compose(k1, k2), s) == apply_key(k1, apply_key(k2, s))."""
    if k1.n != k2.n:
        raise ValueError(f"domain mismatch: {k1.n} vs {k2.n}")
    mapping = tuple(k2.mapping[k1.mapping[i]] for i in range(k1.n))
    return PermutationKey(mapping, f"{k1.label} . {k2.label}")


def inverse(key: PermutationKey) -> PermutationKey:
    inv = [0] * key.n
    for i, j in enumerate(key.mapping):
        inv[j] = i
    return PermutationKey(tuple(inv), f"inv({key.label})")


def cycles(key: PermutationKey) -> list[tuple[int, ...]]:
    """Non-trivial cycles of the mapping, each starting at its smallest
    element, listed by that element."""
    seen = [False] * key.n
    out = []
    for start in range(key.n):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        nxt = key.mapping[start]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = True
            nxt = key.mapping[nxt]
        if len(cycle) > 1:
            out.append(tuple(cycle))
    return out


def key_order(key: PermutationKey) -> int:
    """Least k >= 1 with key^k = identity (lcm of cycle lengths)."""
    lengths = [len(c) for c in cycles(key)]
    return math.lcm(*lengths) if lengths else 1


def build_t2_library() -> KeyLibrary:
    """The grid-derived key family on 85 positions.

    Both factor shapes 5x17 and 17x5 are written; all 120 row orders are
    enumerated for the 5-row shape, identity order only for the 17-row
    shape (17! is no longer a small library).  Keys identical as
    bijections are kept once, first label wins.
    """
    seen: dict[tuple[int, ...], PermutationKey] = {}
    for rows, cols in ((5, 17), (17, 5)):
        if rows <= _ENUMERATE_ROWS_MAX:
            orders = list(permutations(range(rows)))
        else:
            orders = [tuple(range(rows))]
        for order in orders:
            for read_mode in (ROW_MAJOR, COLUMN_MAJOR):
                for direction in (TOP_DOWN, BOTTOM_UP):
                    key = key_from_grid(T2_SIZE, rows, cols, order, read_mode, direction)
                    seen.setdefault(key.mapping, key)
    return KeyLibrary(T2_SIZE, tuple(seen.values()))


def dump_key(key: PermutationKey) -> str:
    """Three-line text form: n, comma-separated mapping, label."""
    return f"{key.n}\n{','.join(str(i) for i in key.mapping)}\n{key.label}\n"


def parse_key(text: str) -> PermutationKey:
    lines = text.splitlines()
    if len(lines) < 2:
        raise ValueError("key text needs at least two lines (n, mapping)")
    n = int(lines[0].strip())
    mapping = tuple(int(part) for part in lines[1].strip().split(",")) if lines[1].strip() else ()
    if len(mapping) != n:
        raise ValueError(f"mapping has {len(mapping)} entries, header says {n}")
    label = lines[2] if len(lines) > 2 else ""
    return PermutationKey(mapping, label)


def save_key(key: PermutationKey, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_key(key))


def load_key(path) -> PermutationKey:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_key(fh.read())
