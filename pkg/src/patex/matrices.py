"""0-1 matrices stored as dimensions plus a sorted coordinate list of ones.

Row and column order is semantic: containment preserves both orders, so no
permutation symmetry is ever applied anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from patex.errors import PreconditionError

Cell = tuple[int, int]


@dataclass(frozen=True)
class BitMatrix:
    """rows x cols matrix with ones at the given (row, col) coordinates."""

    rows: int
    cols: int
    ones: tuple[Cell, ...] = ()

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise PreconditionError("matrix dimensions must be >= 0")
        cells = tuple(sorted((int(r), int(c)) for r, c in self.ones))
        for r, c in cells:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise PreconditionError(
                    f"coordinate ({r},{c}) outside {self.rows}x{self.cols}"
                )
        if len(set(cells)) != len(cells):
            raise PreconditionError("duplicate coordinates in ones list")
        object.__setattr__(self, "ones", cells)

    @property
    def one_count(self) -> int:
        return len(self.ones)

    @classmethod
    def from_dense(cls, grid: Iterable[Iterable[int]]) -> "BitMatrix":
        rows = [list(row) for row in grid]
        ncols = len(rows[0]) if rows else 0
        cells = []
        for r, row in enumerate(rows):
            if len(row) != ncols:
                raise PreconditionError("ragged rows in dense matrix")
            for c, val in enumerate(row):
                if val not in (0, 1):
                    raise PreconditionError("dense entries must be 0 or 1")
                if val:
                    cells.append((r, c))
        return cls(len(rows), ncols, tuple(cells))

    def dense(self) -> list[list[int]]:
        grid = [[0] * self.cols for _ in range(self.rows)]
        for r, c in self.ones:
            grid[r][c] = 1
        return grid

    def row_cols(self, r: int) -> list[int]:
        """Column indices of the ones in row r, ascending."""
        return [c for rr, c in self.ones if rr == r]


def parse_matrix(text: str) -> BitMatrix:
    """Parse the canonical matrix format: one row per line of '0'/'1'
    characters, all lines equal length, no separators."""
    lines = [ln.strip() for ln in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        return BitMatrix(0, 0)
    width = len(lines[0])
    cells = []
    for r, ln in enumerate(lines):
        if len(ln) != width:
            raise PreconditionError(f"line {r + 1} has length {len(ln)}, expected {width}")
        for c, ch in enumerate(ln):
            if ch == "1":
                cells.append((r, c))
            elif ch != "0":
                raise PreconditionError(f"invalid character {ch!r} in matrix")
    return BitMatrix(len(lines), width, tuple(cells))


def format_matrix(a: BitMatrix) -> str:
    """Serialize to the canonical line-per-row format."""
    return "\n".join("".join(str(v) for v in row) for row in a.dense())
