"""Exact linear algebra over GF(2) with bit-packed rows.

A matrix row is a Python int whose bit j is the entry in column j, so a row
operation is a single XOR no matter how wide the matrix is.  Everything here
is pure and exact; matrices are immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class BitMatrix:
    """Dense 0/1 matrix over GF(2), rows packed into ints (bit j = column j)."""

    n_rows: int
    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n_rows < 0 or self.n_cols < 0:
            raise ValueError("negative dimension")
        if len(self.rows) != self.n_rows:
            raise ValueError("row count mismatch")
        mask = (1 << self.n_cols) - 1
        for r in self.rows:
            if r < 0 or r & ~mask:
                raise ValueError("row has bits outside the column range")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> BitMatrix:
        """Build from nested 0/1 lists, one inner list per row."""
        n_rows = len(rows)
        n_cols = len(rows[0]) if n_rows else 0
        packed = []
        for row in rows:
            if len(row) != n_cols:
                raise ValueError("ragged rows")
            acc = 0
            for j, v in enumerate(row):
                if v not in (0, 1):
                    raise ValueError("entries must be 0 or 1")
                acc |= v << j
            packed.append(acc)
        return cls(n_rows, n_cols, tuple(packed))

    @classmethod
    def from_row_ints(cls, rows: Iterable[int], n_cols: int) -> BitMatrix:
        rows = tuple(rows)
        return cls(len(rows), n_cols, rows)

    @classmethod
    def from_cols(cls, cols: Sequence[int], n_rows: int) -> BitMatrix:
        """Build from column ints (bit i of a column = entry in row i)."""
        rows = [0] * n_rows
        for j, c in enumerate(cols):
            if c < 0 or c >> n_rows:
                raise ValueError("column has bits outside the row range")
            for i in range(n_rows):
                if (c >> i) & 1:
                    rows[i] |= 1 << j
        return cls(n_rows, len(cols), tuple(rows))

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> BitMatrix:
        return cls(n_rows, n_cols, (0,) * n_rows)

    @classmethod
    def from_text(cls, text: str) -> BitMatrix:
        """Parse the plain-text format: one row of '0'/'1' per line.

        Blank lines and lines starting with '#' are ignored.
        """
        rows = []
        width = None
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if set(line) - {"0", "1"}:
                raise ValueError(f"bad matrix line: {line!r}")
            if width is None:
                width = len(line)
            elif len(line) != width:
                raise ValueError("ragged matrix text")
            rows.append(int(line[::-1], 2))
        return cls(len(rows), width or 0, tuple(rows))

    # -- accessors ---------------------------------------------------------

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def col(self, j: int) -> int:
        """Column j as an int (bit i = entry in row i)."""
        acc = 0
        for i in range(self.n_rows):
            acc |= ((self.rows[i] >> j) & 1) << i
        return acc

    def cols(self) -> list[int]:
        return [self.col(j) for j in range(self.n_cols)]

    def to_text(self) -> str:
        lines = []
        for r in self.rows:
            lines.append(format(r, f"0{self.n_cols}b")[::-1] if self.n_cols else "")
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.to_text()

    def __iter__(self) -> Iterator[int]:
        return iter(self.rows)

    # -- structural ops ----------------------------------------------------

    def transpose(self) -> BitMatrix:
        return BitMatrix.from_cols(list(self.rows), self.n_cols)

    def hstack(self, other: BitMatrix) -> BitMatrix:
        if self.n_rows != other.n_rows:
            raise ValueError("row count mismatch in hstack")
        rows = tuple(a | (b << self.n_cols) for a, b in zip(self.rows, other.rows))
        return BitMatrix(self.n_rows, self.n_cols + other.n_cols, rows)

    def take_cols(self, idx: Sequence[int]) -> BitMatrix:
        return BitMatrix.from_cols([self.col(j) for j in idx], self.n_rows)


def span_basis(vectors: Iterable[int]) -> list[int]:
    """Echelon basis (distinct leading bits, descending) of the given ints."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            if v ^ b < v:
                v ^= b
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return basis


def rank_of_ints(vectors: Iterable[int]) -> int:
    """Rank over GF(2) of a family of bit-packed vectors."""
    return len(span_basis(vectors))


def in_span(v: int, basis: Sequence[int]) -> bool:
    """Membership test against an echelon basis from span_basis."""
    for b in basis:
        if v ^ b < v:
            v ^= b
    return v == 0


def rank(m: BitMatrix) -> int:
    """Dimension of the row space (= column space) over GF(2)."""
    return rank_of_ints(m.rows)


def rref(m: BitMatrix) -> BitMatrix:
    """Unique reduced row-echelon form; zero rows are dropped.

    Pivots are chosen left to right, so the result is canonical for the row
    space: two matrices have equal rref iff they have the same row space.
    """
    work = list(m.rows)
    next_row = 0
    for col in range(m.n_cols):
        bit = 1 << col
        pivot = None
        for r in range(next_row, len(work)):
            if work[r] & bit:
                pivot = r
                break
        if pivot is None:
            continue
        work[next_row], work[pivot] = work[pivot], work[next_row]
        for r in range(len(work)):
            if r != next_row and work[r] & bit:
                work[r] ^= work[next_row]
        next_row += 1
    return BitMatrix(next_row, m.n_cols, tuple(work[:next_row]))


def pivot_cols(m: BitMatrix) -> list[int]:
    """Column indices of the leading entries of rref(m)."""
    return [(row & -row).bit_length() - 1 for row in rref(m).rows]


def standard_form(m: BitMatrix, basis_cols: Sequence[int]) -> BitMatrix:
    """D block of the standard form [I|D] determined by the chosen basis.

    The selected columns must be independent and exactly rank(m) many; the
    returned D has one row per basis column (in the given order) and one
    column per non-basis column (in original order).
    """
    basis_cols = list(basis_cols)
    if len(set(basis_cols)) != len(basis_cols):
        raise ValueError("repeated basis column")
    for j in basis_cols:
        if not 0 <= j < m.n_cols:
            raise ValueError(f"basis column {j} out of range")
    r = rank(m)
    if len(basis_cols) != r:
        raise ValueError(f"need {r} basis columns, got {len(basis_cols)}")
    if rank_of_ints(m.col(j) for j in basis_cols) != r:
        raise ValueError("basis columns are dependent")
    rest = [j for j in range(m.n_cols) if j not in set(basis_cols)]
    arranged = m.take_cols(basis_cols + rest)
    reduced = rref(arranged)
    # Independence of the basis columns forces the identity block up front.
    d_rows = tuple(row >> r for row in reduced.rows)
    return BitMatrix(r, len(rest), d_rows)
