"""Incidence vectors of subspaces over the projective points of F_q^n.

Bit j of an incidence vector is set iff point j of the fixed
:class:`~qoddtown.subspace.PointOrder` lies in the subspace.  Vectors are
packed into Python ints, so scalar products are a popcount of an AND.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Sequence

from .errors import AmbientMismatch, LengthMismatch
from .matfq import MatrixF2, MatrixInt
from .subspace import PointOrder, Subspace


@dataclass(frozen=True)
class IncidenceVector:
    bits: int
    length: int

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def to_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.length)]


def _check_order(a: Subspace, order: PointOrder) -> None:
    if a.field != order.field or a.n != order.n:
        raise AmbientMismatch(f"subspace of F_{a.field.q}^{a.n} against points of F_{order.field.q}^{order.n}")


def incidence_vector(a: Subspace, order: PointOrder) -> IncidenceVector:
    _check_order(a, order)
    bits = 0
    for pt in a.points():
        bits |= 1 << order.index(pt)
    return IncidenceVector(bits, len(order))


def scalar_product(u: IncidenceVector, v: IncidenceVector) -> int:
    if u.length != v.length:
        raise LengthMismatch(f"lengths {u.length} and {v.length}")
    return (u.bits & v.bits).bit_count()


class IncidenceCache:
    """Incidence vectors memoised by canonical subspace for one point order.

    Reads are plain dict lookups; inserts happen under a lock so a value is
    computed and stored at most once per key.
    """

    def __init__(self, order: PointOrder):
        self.order = order
        self._store: dict[Subspace, IncidenceVector] = {}
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._store)

    def get(self, a: Subspace) -> IncidenceVector:
        vec = self._store.get(a)
        if vec is not None:
            return vec
        vec = incidence_vector(a, self.order)
        with self._lock:
            return self._store.setdefault(a, vec)


@dataclass(frozen=True)
class IncidenceMatrix:
    """The m x [n]_q 0/1 matrix whose row i is the incidence vector of member i."""

    order: PointOrder
    vectors: tuple[IncidenceVector, ...]

    @property
    def nrows(self) -> int:
        return len(self.vectors)

    @property
    def ncols(self) -> int:
        return len(self.order)

    def as_int(self) -> MatrixInt:
        return MatrixInt(tuple(tuple(v.to_list()) for v in self.vectors), self.ncols)

    def as_f2(self) -> MatrixF2:
        return MatrixF2(self.nrows, self.ncols, tuple(v.bits for v in self.vectors))

    def gram(self) -> MatrixInt:
        """M M^T from popcounts, without expanding to dense rows."""
        vs = self.vectors
        return MatrixInt(tuple(tuple(scalar_product(u, v) for v in vs) for u in vs), len(vs))


def incidence_matrix(members: Sequence[Subspace], order: PointOrder, cache: IncidenceCache | None = None) -> IncidenceMatrix:
    if cache is not None and cache.order is not order:
        raise AmbientMismatch("cache was built for a different point order")
    vecs = tuple(cache.get(a) if cache is not None else incidence_vector(a, order) for a in members)
    return IncidenceMatrix(order, vecs)
