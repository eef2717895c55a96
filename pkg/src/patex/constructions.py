"""Deterministic builders for the extremal instances and patterns used
throughout the package: block sequences, all-ones rectangles, diagonals,
the column-insertion and corner-join operations, and the matrix encoding
of a sequence pattern."""

from __future__ import annotations

from dataclasses import dataclass, field

from patex.errors import PreconditionError
from patex.matrices import BitMatrix
from patex.sequences import Sequence, as_sequence, normalize


def block_sequence(k: int) -> Sequence:
    """k repetitions of the block a_1 ... a_k (length k^2, k letters)."""
    if k < 1:
        raise PreconditionError("block parameter k must be >= 1")
    return Sequence(tuple(range(k)) * k)


def all_ones(r: int, c: int) -> BitMatrix:
    """r x c matrix with every entry one."""
    if r < 1 or c < 1:
        raise PreconditionError("all_ones needs r, c >= 1")
    return BitMatrix(r, c, tuple((i, j) for i in range(r) for j in range(c)))


def diagonal(k: int) -> BitMatrix:
    """k x k matrix with k ones on the main diagonal."""
    if k < 1:
        raise PreconditionError("diagonal needs k >= 1")
    return BitMatrix(k, k, tuple((i, i) for i in range(k)))


def row(k: int) -> BitMatrix:
    """1 x k all-ones matrix."""
    if k < 1:
        raise PreconditionError("row needs k >= 1")
    return BitMatrix(1, k, tuple((0, j) for j in range(k)))


def column(k: int) -> BitMatrix:
    """k x 1 all-ones matrix."""
    if k < 1:
        raise PreconditionError("column needs k >= 1")
    return BitMatrix(k, 1, tuple((i, 0) for i in range(k)))


def l_shape() -> BitMatrix:
    """The 2 x 2 pattern with ones everywhere except the top-right corner."""
    return BitMatrix(2, 2, ((0, 0), (1, 0), (1, 1)))


def _floor_root(x: int, k: int) -> int:
    """Largest integer t with t**k <= x."""
    if x < 0 or k < 1:
        raise PreconditionError("floor root needs x >= 0, k >= 1")
    t = int(round(x ** (1.0 / k)))
    while t > 0 and t**k > x:
        t -= 1
    while (t + 1) ** k <= x:
        t += 1
    return t

def upper_construction_allones(m: int, r: int) -> BitMatrix:
    """All-ones matrix with floor(m^(r/(r+1))) rows and floor(m^(1/(r+1)))
    columns — the hard instance showing that at most O(m^(r/(r+1))) ones
    survive when the r x r all-ones pattern is forbidden.

    Dimensions use exact integer roots, so when m = t^(r+1) the matrix is
    t^r x t with exactly m ones; otherwise the ones count is at most m.
    """
    if m < 1:
        raise PreconditionError("upper_construction_allones needs m >= 1")
    if r < 2:
        raise PreconditionError("upper_construction_allones needs r >= 2")
    cols = _floor_root(m, r + 1)
    rows = _floor_root(m**r, r + 1)
    return all_ones(rows, cols)


def insert_column(p: BitMatrix, r: int, c: int) -> BitMatrix:
    """Widen p by a new column between columns c and c+1 carrying a single
    one in row r.  Requires p to have ones at (r, c) and (r, c+1)."""
    ones = set(p.ones)
    if (r, c) not in ones or (r, c + 1) not in ones:
        raise PreconditionError(
            f"insert_column needs adjacent ones at ({r},{c}) and ({r},{c + 1})"
        )
    cells = [(i, j if j <= c else j + 1) for i, j in p.ones]
    cells.append((r, c + 1))
    return BitMatrix(p.rows, p.cols + 1, tuple(cells))


def corner_join(p: BitMatrix, copies: int) -> BitMatrix:
    """Staircase of `copies` copies of p, consecutive copies sharing one
    cell: the top-right corner of the lower-left copy coincides with the
    bottom-left corner of the copy above-right of it.  Requires ones in
    both corners; copies=1 returns p itself."""
    if copies < 1:
        raise PreconditionError("corner_join needs copies >= 1")
    ones = set(p.ones)
    if (p.rows - 1, 0) not in ones or (0, p.cols - 1) not in ones:
        raise PreconditionError("corner_join needs ones in bottom-left and top-right corners")
    if copies == 1:
        return p
    rows = copies * p.rows - (copies - 1)
    cols = copies * p.cols - (copies - 1)
    cells = set()
    for t in range(copies):
        roff = (copies - 1 - t) * (p.rows - 1)
        coff = t * (p.cols - 1)
        for i, j in p.ones:
            cells.add((roff + i, coff + j))
    return BitMatrix(rows, cols, tuple(sorted(cells)))


def pattern_from_sequence(v) -> BitMatrix:
    """r x t matrix encoding of a sequence pattern v (r distinct letters,
    t = length): a one in row i, column j iff the j-th letter of v is the
    i-th distinct letter.  Exactly one one per column."""
    seq = normalize(v)
    if len(seq) == 0:
        raise PreconditionError("pattern_from_sequence needs a nonempty sequence")
    return BitMatrix(seq.distinct, len(seq), tuple((x, j) for j, x in enumerate(seq.letters)))


def four_forcing_patterns() -> list[BitMatrix]:
    """The four small patterns whose presence forces a square-root lower
    bound via the monotone-subsequence extractor, in fixed order."""
    return [
        BitMatrix.from_dense([[0, 1, 0], [1, 0, 1]]),
        BitMatrix.from_dense([[0, 0, 1], [1, 1, 0]]),
        BitMatrix.from_dense([[0, 1], [1, 1]]),
        BitMatrix.from_dense([[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
    ]


@dataclass(frozen=True)
class PatternSpec:
    """Declarative description of a builder call, used by the CLI.

    kind is one of: all-ones, diagonal, row, column, l-shape, block,
    lemma-instance, from-sequence, four-patterns.
    """

    kind: str
    params: dict = field(default_factory=dict)

    def build(self):
        p = self.params
        if self.kind == "all-ones":
            return all_ones(p["r"], p["c"])
        if self.kind == "diagonal":
            return diagonal(p["k"])
        if self.kind == "row":
            return row(p["k"])
        if self.kind == "column":
            return column(p["k"])
        if self.kind == "l-shape":
            return l_shape()
        if self.kind == "block":
            return block_sequence(p["k"])
        if self.kind == "lemma-instance":
            return upper_construction_allones(p["m"], p["r"])
        if self.kind == "from-sequence":
            return pattern_from_sequence(as_sequence(p["seq"]))
        if self.kind == "four-patterns":
            return four_forcing_patterns()
        raise PreconditionError(f"unknown pattern kind: {self.kind}")
