"""Exact matrix algebra over F_q, over F_2 (bit-packed) and over the integers.

Elimination always takes the topmost unused row with a nonzero entry in
the leftmost remaining column, so results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .field import FieldSpec


@dataclass(frozen=True)
class MatrixFq:
    field: FieldSpec
    rows: tuple[tuple[int, ...], ...]
    ncols: int

    def __post_init__(self):
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError(f"row of length {len(row)} in a matrix with {self.ncols} columns")
            if any(not 0 <= c < self.field.q for c in row):
                raise ValueError(f"entry outside F_{self.field.q} in row {row}")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Sequence[int]], ncols: int | None = None) -> "MatrixFq":
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for an empty matrix")
            ncols = len(rows[0])
        return cls(field, rows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(c for row in self.rows for c in row)


def rref_rows(field: FieldSpec, rows: Iterable[Sequence[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Row-reduce to RREF.  Returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    add, mul, neg = field._add, field._mul, field._neg
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        pivot = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        prow = work[r]
        lead = prow[c]
        if lead != 1:
            s = field.inv(lead)
            prow = work[r] = [mul[s][x] for x in prow]
        for i in range(len(work)):
            if i != r:
                f = work[i][c]
                if f:
                    nf = mul[neg[f]]
                    row = work[i]
                    for j in range(c, ncols):
                        if prow[j]:
                            row[j] = add[row[j]][nf[prow[j]]]
        pivots.append(c)
        r += 1
    return work[:r], pivots


def rref_rank_fq(m: MatrixFq) -> tuple[MatrixFq, int]:
    """Reduced row echelon form of ``m`` (same shape, zero rows last) and its rank."""
    reduced, pivots = rref_rows(m.field, m.rows, m.ncols)
    rank = len(pivots)
    padded = [tuple(r) for r in reduced] + [(0,) * m.ncols] * (m.nrows - rank)
    return MatrixFq(m.field, tuple(padded), m.ncols), rank


def rank_fq(field: FieldSpec, rows: Iterable[Sequence[int]], ncols: int) -> int:
    return len(rref_rows(field, rows, ncols)[1])


@dataclass(frozen=True)
class MatrixF2:
    """Matrix over F_2 with each row packed into a Python int (bit j = column j)."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise ValueError("row count does not match nrows")
        mask = (1 << self.ncols) - 1
        if any(r & ~mask for r in self.rows):
            raise ValueError("bits set beyond the last column")

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> "MatrixF2":
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        packed = []
        for row in rows:
            bits = 0
            for j, x in enumerate(row):
                if x % 2:
                    bits |= 1 << j
            packed.append(bits)
        return cls(len(rows), ncols, tuple(packed))

    @classmethod
    def all_ones_minus_identity(cls, m: int) -> "MatrixF2":
        full = (1 << m) - 1
        return cls(m, m, tuple(full ^ (1 << i) for i in range(m)))

    def to_dense(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]


def rank_f2(m: MatrixF2) -> int:
    """Rank over F_2 by word-parallel elimination on the packed rows."""
    work = list(m.rows)
    rank = 0
    for c in range(m.ncols):
        bit = 1 << c
        pivot = next((i for i in range(rank, len(work)) if work[i] & bit), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        for i in range(rank + 1, len(work)):
            if work[i] & bit:
                work[i] ^= prow
        rank += 1
        if rank == len(work):
            break
    return rank


@dataclass(frozen=True)
class MatrixInt:
    rows: tuple[tuple[int, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: int | None = None) -> "MatrixInt":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(rows, ncols)

    @classmethod
    def identity(cls, m: int) -> "MatrixInt":
        return cls(tuple(tuple(int(i == j) for j in range(m)) for i in range(m)), m)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def mod2(self) -> MatrixF2:
        return MatrixF2.from_dense(self.rows, self.ncols)


def exact_rank_int(m: MatrixInt) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination.

    Every intermediate entry is a minor of the input, so the division by
    the previous pivot is exact and all arithmetic stays in the integers.
    """
    a = [list(r) for r in m.rows]
    nrows, ncols = len(a), m.ncols
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if a[i][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][c]
        prow = a[r]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (p * row[j] - f * prow[j]) // prev
            row[c] = 0
        prev = p
        r += 1
    return r


def gram(m: MatrixInt) -> MatrixInt:
    """M times its transpose."""
    rows = m.rows
    out = []
    for i, ri in enumerate(rows):
        out.append(tuple(sum(x * y for x, y in zip(ri, rj)) for rj in rows))
    return MatrixInt(tuple(out), len(rows))
