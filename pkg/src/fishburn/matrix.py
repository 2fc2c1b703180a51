"""Upper-triangular nonnegative matrices with no zero row or column.

Cells are addressed 1-based as ``(row, col)`` through ``StaircaseMatrix.at``;
the underlying ``rows`` tuple is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from fishburn import ascent


@dataclass(frozen=True)
class StaircaseMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        d = len(self.rows)
        if any(len(r) != d for r in self.rows):
            raise ValueError("matrix must be square")
        for i, row in enumerate(self.rows):
            if any(v < 0 for v in row):
                raise ValueError("entries must be nonnegative")
            if any(row[j] for j in range(i)):
                raise ValueError("matrix must be upper triangular")
            if not any(row):
                raise ValueError(f"row {i + 1} is all zero")
        for j in range(d):
            if not any(self.rows[i][j] for i in range(d)):
                raise ValueError(f"column {j + 1} is all zero")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> StaircaseMatrix:
        return cls(tuple(tuple(int(v) for v in r) for r in rows))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def at(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    @property
    def total(self) -> int:
        return sum(map(sum, self.rows))

    @property
    def max_entry(self) -> int:
        return max((max(r) for r in self.rows), default=0)

    @property
    def index(self) -> int:
        """Topmost row holding a nonzero entry of the last column."""
        if self.dim == 0:
            raise ValueError("index undefined on the empty matrix")
        d = self.dim
        return next(i for i in range(1, d + 1) if self.at(i, d))

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


EMPTY = StaircaseMatrix(())


@dataclass(frozen=True)
class MatrixStats:
    sum: int
    nz: int
    zeros: int
    index: int
    dim: int


def matrix_stats(a: StaircaseMatrix) -> MatrixStats:
    nz = sum(1 for r in a.rows for v in r if v)
    return MatrixStats(a.total, nz, a.total - nz, a.index, a.dim)


def add(a: StaircaseMatrix, m: int) -> StaircaseMatrix:
    d = a.dim
    if d == 0:
        if m != 0:
            raise ValueError("only add(empty, 0) is defined")
        return StaircaseMatrix(((1,),))
    if not 0 <= m <= d:
        raise ValueError(f"m={m} outside [0, {d}]")
    cells = a.to_lists()
    if m < a.index:
        cells[m][d - 1] += 1
        return StaircaseMatrix.from_rows(cells)
    # insert a zero row and column directly after row/column m
    grown = [r[:m] + [0] + r[m:] for r in cells]
    grown.insert(m, [0] * (d + 1))
    grown[m][d] = 1
    for i in range(m):
        grown[i][m], grown[i][d] = grown[i][d], grown[i][m]
    return StaircaseMatrix.from_rows(grown)


def zeta(x: Sequence[int]) -> StaircaseMatrix:
    if not ascent.validate(x):
        raise ValueError(f"not an ascent sequence: {tuple(x)}")
    a = EMPTY
    for letter in x:
        a = add(a, letter)
    return a


def remove(a: StaircaseMatrix) -> tuple[StaircaseMatrix, int]:
    """Inverse of one ``add`` step: return ``(f(A), m)`` with ``add(f(A), m) == A``."""
    d = a.dim
    if d == 0:
        raise ValueError("cannot shrink the empty matrix")
    r = a.index
    cells = a.to_lists()
    row = cells[r - 1]
    if row[d - 1] == 1 and sum(1 for v in row if v) == 1:
        cells[r - 1][d - 1] = 0
        for i in range(r - 1):
            cells[i][r - 1], cells[i][d - 1] = cells[i][d - 1], cells[i][r - 1]
        del cells[r - 1]
        for rest in cells:
            del rest[r - 1]
    else:
        cells[r - 1][d - 1] -= 1
    return StaircaseMatrix.from_rows(cells), r - 1


def gamma(a: StaircaseMatrix) -> tuple[int, ...]:
    if a.dim == 0:
        raise ValueError("gamma needs a nonempty matrix")
    letters = []
    while a.dim:
        a, m = remove(a)
        letters.append(m)
    return tuple(reversed(letters))


def enumerate_matrices(n: int, max_entry: int | None = None) -> Iterator[StaircaseMatrix]:
    """Every staircase matrix with entry sum ``n`` (entries capped by ``max_entry``).

    Rows are filled top to bottom; column ``j`` is final once row ``j`` is
    written, which lets zero columns be rejected early.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield EMPTY
        return
    cap = n if max_entry is None else max_entry
    for d in range(1, n + 1):
        rows: list[list[int]] = []
        col_sums = [0] * d

        def row_choices(length: int, budget: int) -> Iterator[list[int]]:
            if length == 0:
                yield []
                return
            for v in range(min(cap, budget) + 1):
                for tail in row_choices(length - 1, budget - v):
                    yield [v] + tail

        def fill(i: int, budget: int) -> Iterator[StaircaseMatrix]:
            if i == d:
                if budget == 0:
                    yield StaircaseMatrix(tuple(tuple(r) for r in rows))
                return
            remaining_rows = d - i - 1
            for tail in row_choices(d - i, budget - remaining_rows):
                s = sum(tail)
                if s == 0 or col_sums[i] + tail[0] == 0:
                    continue
                if i == d - 1 and s != budget:
                    continue
                rows.append([0] * i + tail)
                for j, v in enumerate(tail, start=i):
                    col_sums[j] += v
                yield from fill(i + 1, budget - s)
                for j, v in enumerate(tail, start=i):
                    col_sums[j] -= v
                rows.pop()

        yield from fill(0, n)
