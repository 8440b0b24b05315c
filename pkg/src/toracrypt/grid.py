"""Row/column grid arrangements, row-order search and rectangle factoring."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .corpus import ALPHABET, LetterStream, Pattern

TOP_DOWN = "top-down"
BOTTOM_UP = "bottom-up"

# 10! permutations is the honest ceiling for exhaustive row-order search.
MAX_ENUM_ROWS = 10


@dataclass(frozen=True)
class Grid:
    """Row-major rows x cols arrangement of letter codes (or bits)."""

    rows: int
    cols: int
    cells: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("rows and cols must be >= 1")
        if len(self.cells) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.cells)} cells do not fill a {self.rows}x{self.cols} grid"
            )

    def cell(self, r: int, c: int) -> int:
        return self.cells[r * self.cols + c]

    def row(self, r: int) -> tuple[int, ...]:
        return self.cells[r * self.cols : (r + 1) * self.cols]

    def flatten(self) -> tuple[int, ...]:
        return self.cells


def arrange(stream: LetterStream, rows: int, cols: int) -> Grid:
    """Row-major fill: cell(r, c) = stream[r*cols + c]."""
    if len(stream) != rows * cols:
        raise ValueError(
            f"stream of length {len(stream)} does not fill {rows}x{cols} = {rows * cols} cells"
        )
    return Grid(rows, cols, tuple(int(s) for s in stream.symbols))


def read_column(grid: Grid, col: int, direction: str = TOP_DOWN) -> tuple[int, ...]:
    if not 0 <= col < grid.cols:
        raise IndexError(f"column {col} out of range for {grid.cols} columns")
    letters = tuple(grid.cell(r, col) for r in range(grid.rows))
    if direction == TOP_DOWN:
        return letters
    if direction == BOTTOM_UP:
        return letters[::-1]
    raise ValueError(f"unknown direction {direction!r}")


def validate_row_order(order, rows: int) -> tuple[int, ...]:
    order = tuple(int(r) for r in order)
    if sorted(order) != list(range(rows)):
        raise ValueError(f"{order} is not a permutation of 0..{rows - 1}")
    return order


def permute_rows(grid: Grid, order) -> Grid:
    """New grid whose row r is the old row order[r]."""
    order = validate_row_order(order, grid.rows)
    cells: list[int] = []
    for r in order:
        cells.extend(grid.row(r))
    return Grid(grid.rows, grid.cols, tuple(cells))


def find_row_orders(
    grid: Grid, col: int, target: Pattern, direction: str = TOP_DOWN
) -> list[tuple[int, ...]]:
    """All row orders making column ``col`` read ``target`` in ``direction``.

    Equivalent to filtering every rows! order; returned in lexicographic
    order.  Refuses grids with more than 10 rows.
    """
    symbols = target.symbols if isinstance(target, Pattern) else tuple(target)
    if len(symbols) != grid.rows:
        raise ValueError(f"target of length {len(symbols)} does not match {grid.rows} rows")
    if grid.rows > MAX_ENUM_ROWS:
        raise ValueError(f"row-order enumeration is capped at {MAX_ENUM_ROWS} rows")
    column = read_column(grid, col, TOP_DOWN)
    if direction == TOP_DOWN:
        want = list(symbols)
    elif direction == BOTTOM_UP:
        want = list(symbols[::-1])
    else:
        raise ValueError(f"unknown direction {direction!r}")

    out: list[tuple[int, ...]] = []
    used = [False] * grid.rows
    current: list[int] = []

    def descend(depth: int) -> None:
        if depth == grid.rows:
            out.append(tuple(current))
            return
        for r in range(grid.rows):
            if not used[r] and column[r] == want[depth]:
                used[r] = True
                current.append(r)
                descend(depth + 1)
                current.pop()
                used[r] = False

    descend(0)
    return out


def factor_rectangles(length: int) -> list[tuple[int, int]]:
    """All (rows, cols) with rows*cols == length and rows <= cols."""
    if length < 1:
        raise ValueError("length must be >= 1")
    out = []
    for r in range(1, math.isqrt(length) + 1):
        if length % r == 0:
            out.append((r, length // r))
    return out


def render_bit_grid(bits, rows: int, cols: int) -> Grid:
    """Row-major bit grid from a 0/1 sequence."""
    cells = tuple(int(b) for b in bits)
    for b in cells:
        if b not in (0, 1):
            raise ValueError(f"bit value {b} is not 0 or 1")
    if len(cells) != rows * cols:
        raise ValueError(f"{len(cells)} bits do not fill a {rows}x{cols} grid")
    return Grid(rows, cols, cells)


def format_grid(grid: Grid, rtl: bool = False, mark_col: int | None = None) -> str:
    """Text rendering with transliterated letters, one display column per
    grid column; ``rtl`` reverses display order, ``mark_col`` puts an
    asterisk header over that grid column."""
    cols = list(range(grid.cols))
    if rtl:
        cols.reverse()
    lines = []
    if mark_col is not None:
        lines.append(" ".join("*" if c == mark_col else " " for c in cols).rstrip())
    for r in range(grid.rows):
        lines.append(" ".join(ALPHABET.latin[grid.cell(r, c)] for c in cols))
    return "\n".join(lines)


def format_bit_grid(grid: Grid) -> str:
    """'#'/'.' art for bit grids."""
    lines = []
    for r in range(grid.rows):
        lines.append("".join("#" if b else "." for b in grid.row(r)))
    return "\n".join(lines)
