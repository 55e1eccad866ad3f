"""Subspaces of F_q^n in canonical form, projective points, enumeration.

A subspace is stored by its reduced row echelon basis.  RREF is unique
for a row space, so two :class:`Subspace` values are equal exactly when
their bases are identical and hashing is structural.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import AmbientMismatch
from .field import FieldSpec
from .matfq import MatrixFq, rank_fq, rref_rows

Point = tuple[int, ...]


@dataclass(frozen=True)
class Subspace:
    field: FieldSpec
    n: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.basis)

    dim = k

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.basis)

    def matrix(self) -> MatrixFq:
        return MatrixFq(self.field, self.basis, self.n)

    def sort_key(self):
        return (self.k, self.basis)

    def to_text(self) -> str:
        """``"k n"`` followed by the k RREF rows as space-separated codes."""
        lines = [f"{self.k} {self.n}"]
        lines += [" ".join(str(x) for x in row) for row in self.basis]
        return "\n".join(lines)

    def points(self) -> Iterator[Point]:
        """Canonical representatives of the 1-dimensional subspaces inside this one.

        With an RREF basis, the first nonzero coordinate of a combination
        sits at the pivot of its first nonzero coefficient, so normalising
        the leading coefficient to 1 yields canonical points directly.
        """
        f, k = self.field, self.k
        for lead in range(k):
            for rest in itertools.product(range(f.q), repeat=k - lead - 1):
                coeffs = (0,) * lead + (1,) + rest
                yield _combine(f, self.basis, coeffs, self.n)

    def __str__(self):
        return f"<{self.k}-dim subspace of F_{self.field.q}^{self.n}: {list(self.basis)}>"


def _combine(f: FieldSpec, rows, coeffs, n: int) -> Point:
    out = [0] * n
    add, mul = f._add, f._mul
    for c, row in zip(coeffs, rows):
        if c:
            mc = mul[c]
            for j, x in enumerate(row):
                if x:
                    out[j] = add[out[j]][mc[x]]
    return tuple(out)


def canonicalize(field: FieldSpec, n: int, rows: Sequence[Sequence[int]] | MatrixFq) -> Subspace:
    """The subspace spanned by ``rows`` (any spanning set, possibly dependent or empty)."""
    if isinstance(rows, MatrixFq):
        rows = rows.rows
    for row in rows:
        if len(row) != n:
            raise AmbientMismatch(f"row {tuple(row)} does not have {n} coordinates")
    reduced, _ = rref_rows(field, rows, n)
    return Subspace(field, n, tuple(tuple(r) for r in reduced))


def zero_subspace(field: FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, ())


def whole_space(field: FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def _check_same(a: Subspace, b: Subspace) -> None:
    if a.field != b.field or a.n != b.n:
        raise AmbientMismatch(f"F_{a.field.q}^{a.n} vs F_{b.field.q}^{b.n}")


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """A ∩ B via the Zassenhaus construction.

    Row-reduce [[A, A], [B, 0]]; the rows whose left half vanishes carry a
    basis of the intersection in their right half.
    """
    _check_same(a, b)
    n = a.n
    zero = (0,) * n
    stacked = [row + row for row in a.basis] + [row + zero for row in b.basis]
    reduced, _ = rref_rows(a.field, stacked, 2 * n)
    meet = [r[n:] for r in reduced if not any(r[:n])]
    return canonicalize(a.field, n, meet)


def span_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same(a, b)
    return canonicalize(a.field, a.n, a.basis + b.basis)


def intersection_dim(a: Subspace, b: Subspace) -> int:
    """dim(A ∩ B) = dim A + dim B - dim(A + B)."""
    _check_same(a, b)
    return a.k + b.k - rank_fq(a.field, a.basis + b.basis, a.n)


def contains_vector(a: Subspace, v: Sequence[int]) -> bool:
    if len(v) != a.n:
        raise AmbientMismatch(f"vector of length {len(v)} in F_q^{a.n}")
    f = a.field
    add, mul, neg = f._add, f._mul, f._neg
    w = list(v)
    for row, p in zip(a.basis, a.pivots):
        c = w[p]
        if c:
            nc = mul[neg[c]]
            for j in range(p, a.n):
                if row[j]:
                    w[j] = add[w[j]][nc[row[j]]]
    return not any(w)


def contains_point(a: Subspace, v: Point) -> bool:
    """True iff the projective point ``v`` lies in ``a``; never for the zero subspace."""
    return any(v) and contains_vector(a, v)


def is_subspace_of(a: Subspace, b: Subspace) -> bool:
    return all(contains_vector(b, row) for row in a.basis)


def normalize_point(field: FieldSpec, v: Sequence[int]) -> Point:
    """Scale a nonzero vector so its first nonzero coordinate is 1."""
    lead = next((x for x in v if x), None)
    if lead is None:
        raise ValueError("the zero vector is not a projective point")
    s = field.inv(lead)
    return tuple(field.mul(s, x) for x in v)


@dataclass(frozen=True)
class PointOrder:
    """All [n]_q projective points of F_q^n in lexicographic order of codes."""

    field: FieldSpec
    n: int
    points: tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(self.points)})

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def index(self, point: Point) -> int:
        return self._index[point]

    def digest(self) -> str:
        """Stable sha256 over q, n and the ordered point list."""
        h = hashlib.sha256(f"q={self.field.q};n={self.n};".encode())
        for pt in self.points:
            h.update((",".join(map(str, pt)) + ";").encode())
        return h.hexdigest()


def enumerate_points(field: FieldSpec, n: int) -> PointOrder:
    if n < 1:
        raise ValueError("enumerate_points needs n >= 1")
    q = field.q
    pts = []
    # Leading 1 further right sorts first lexicographically.
    for lead in range(n - 1, -1, -1):
        for rest in itertools.product(range(q), repeat=n - lead - 1):
            pts.append((0,) * lead + (1,) + rest)
    return PointOrder(field, n, tuple(pts))


def enumerate_subspaces(field: FieldSpec, n: int, k: int) -> Iterator[Subspace]:
    """Yield every k-dimensional subspace of F_q^n exactly once.

    Pivot column sets are visited in lexicographic order; within a pivot
    pattern the free RREF entries (row-major) run lexicographically.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    q = field.q
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        free = [(r, j) for r, p in enumerate(pivots) for j in range(p + 1, n) if j not in pivot_set]
        for values in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, j), x in zip(free, values):
                rows[r][j] = x
            yield Subspace(field, n, tuple(tuple(r) for r in rows))


def all_subspaces(field: FieldSpec, n: int) -> Iterator[Subspace]:
    for k in range(n + 1):
        yield from enumerate_subspaces(field, n, k)
