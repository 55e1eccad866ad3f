"""Families of subspaces, the four theorem conditions, bounds and verification.

Kinds:

* ``FisherK(k)``     every two distinct members meet in dimension exactly k.
* ``Oddtown``        odd member dimensions, even pairwise intersections.
* ``ReverseOddtown`` even member dimensions, odd pairwise intersections.
* ``SkewPairs``      pairs (A_i, B_i) with dim(A_i ∩ B_i) odd and
  dim(A_i ∩ B_j) even for i != j.

The parity bounds are theorems only for odd q.  For even q,
:func:`bound_for` raises :class:`EvenQUnproven` and reports carry the
status ``"open"``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence, Union

from .errors import AmbientMismatch, DuplicateMember, EvenQUnproven, NoTheoremBound, ParityMismatch
from .field import FieldSpec
from .incidence import IncidenceCache, incidence_matrix, scalar_product
from .matfq import MatrixF2, exact_rank_int, rank_f2
from .qcount import q_binomial, q_int
from .subspace import PointOrder, Subspace, enumerate_points, enumerate_subspaces, intersection_dim


# -- kinds -------------------------------------------------------------------

@dataclass(frozen=True)
class FisherK:
    """Pairwise intersections of dimension exactly ``k``.

    The theorem needs k >= 1.  ``relaxed=True`` admits k = 0 for
    exploration only; no bound is attached in that case.
    """

    k: int
    relaxed: bool = False

    def __post_init__(self):
        if self.k < 0 or (self.k == 0 and not self.relaxed):
            raise ValueError(f"FisherK needs a positive k (got {self.k}); pass relaxed=True to explore k = 0")

    name = "fisher"

    def member_ok(self, dim: int) -> bool:
        return dim >= self.k

    def pair_ok(self, dim: int) -> bool:
        return dim == self.k


@dataclass(frozen=True)
class Oddtown:
    name = "oddtown"

    def member_ok(self, dim: int) -> bool:
        return dim % 2 == 1

    def pair_ok(self, dim: int) -> bool:
        return dim % 2 == 0


@dataclass(frozen=True)
class ReverseOddtown:
    name = "reverse-oddtown"

    def member_ok(self, dim: int) -> bool:
        return dim % 2 == 0

    def pair_ok(self, dim: int) -> bool:
        return dim % 2 == 1


@dataclass(frozen=True)
class SkewPairs:
    name = "skew"


FamilyKind = Union[FisherK, Oddtown, ReverseOddtown, SkewPairs]


def kind_from_name(name: str, k: int | None = None, relaxed: bool = False) -> FamilyKind:
    if name == "fisher":
        if k is None:
            raise ValueError("the fisher kind needs k")
        return FisherK(k, relaxed=relaxed)
    kinds = {"oddtown": Oddtown, "reverse-oddtown": ReverseOddtown, "skew": SkewPairs}
    try:
        return kinds[name]()
    except KeyError:
        raise ValueError(f"unknown family kind {name!r}") from None


# -- families ----------------------------------------------------------------

def _check_members(field: FieldSpec, n: int, members: Sequence[Subspace], label: str = "") -> None:
    seen: dict[Subspace, int] = {}
    for i, a in enumerate(members):
        if a.field != field or a.n != n:
            raise AmbientMismatch(f"{label}member {i} is not a subspace of F_{field.q}^{n}")
        if a in seen:
            raise DuplicateMember(seen[a], i)
        seen[a] = i


@dataclass(frozen=True)
class Family:
    """An ordered sequence of pairwise distinct subspaces of F_q^n."""

    field: FieldSpec
    n: int
    members: tuple[Subspace, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        _check_members(self.field, self.n, self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


@dataclass(frozen=True)
class SkewFamily:
    """Pairs (A_i, B_i).  A's are pairwise distinct, B's are pairwise distinct;
    A_i = B_j is allowed for any i, j."""

    field: FieldSpec
    n: int
    pairs: tuple[tuple[Subspace, Subspace], ...]

    def __post_init__(self):
        pairs = tuple((a, b) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        _check_members(self.field, self.n, [a for a, _ in pairs], "A-")
        _check_members(self.field, self.n, [b for _, b in pairs], "B-")

    def __len__(self):
        return len(self.pairs)


# -- constructions -----------------------------------------------------------

def construct_extremal(which: str, field: FieldSpec, n: int) -> Family:
    """The extremal families F1, F2, F3.

    F1: all 1-dimensional subspaces (n >= 1).
    F2: all hyperplanes, n odd.
    F3: n even; all (n-2)-dimensional subspaces of W = span(e_1..e_{n-1}).
    """
    which = which.upper()
    if which == "F1":
        if n < 1:
            raise ValueError("F1 needs n >= 1")
        members = list(enumerate_subspaces(field, n, 1))
    elif which == "F2":
        if n < 1 or n % 2 == 0:
            raise ParityMismatch(f"F2 needs n odd, got n={n}")
        members = list(enumerate_subspaces(field, n, n - 1))
    elif which == "F3":
        if n < 2 or n % 2:
            raise ParityMismatch(f"F3 needs n even and >= 2, got n={n}")
        # RREF in F_q^{n-1} padded with a zero last coordinate stays RREF in W.
        members = [
            Subspace(field, n, tuple(row + (0,) for row in s.basis))
            for s in enumerate_subspaces(field, n - 1, n - 2)
        ]
    else:
        raise ValueError(f"unknown construction {which!r}; expected F1, F2 or F3")
    return Family(field, n, tuple(members))


# -- conditions --------------------------------------------------------------

@dataclass(frozen=True)
class Failure:
    """First violated condition.  ``i == j`` means a member-level condition."""

    i: int
    j: int
    dim: int
    reason: str

    def __str__(self):
        return self.reason


def check_conditions(f: Family | SkewFamily, kind: FamilyKind) -> tuple[bool, Failure | None]:
    """Check every condition of ``kind``.

    Conditions are scanned in lexicographic order of index pairs (i, j),
    with (i, i) standing for the member-level condition, so the reported
    failure is deterministic.  Families of size <= 1 only face member
    conditions.
    """
    if isinstance(kind, SkewPairs):
        if not isinstance(f, SkewFamily):
            raise TypeError("SkewPairs conditions apply to a SkewFamily")
        return _check_skew(f)
    if isinstance(f, SkewFamily):
        raise TypeError(f"{kind.name} conditions apply to a Family")
    members = f.members
    dims = [a.k for a in members]
    for i, a in enumerate(members):
        if not kind.member_ok(dims[i]):
            return False, Failure(i, i, dims[i], f"member {i} has dimension {dims[i]}, not allowed for {_label(kind)}")
        for j in range(i + 1, len(members)):
            d = intersection_dim(a, members[j])
            if not kind.pair_ok(d):
                return False, Failure(i, j, d, f"members {i} and {j} meet in dimension {d}, not allowed for {_label(kind)}")
    return True, None


def _check_skew(f: SkewFamily) -> tuple[bool, Failure | None]:
    m = len(f.pairs)
    for i in range(m):
        a = f.pairs[i][0]
        for j in range(m):
            d = intersection_dim(a, f.pairs[j][1])
            if i == j and d % 2 == 0:
                return False, Failure(i, i, d, f"dim(A_{i} ∩ B_{i}) = {d} is even")
            if i != j and d % 2 == 1:
                return False, Failure(i, j, d, f"dim(A_{i} ∩ B_{j}) = {d} is odd")
    return True, None


def _label(kind: FamilyKind) -> str:
    return f"fisher(k={kind.k})" if isinstance(kind, FisherK) else kind.name


# -- bounds ------------------------------------------------------------------

@dataclass(frozen=True)
class Bound:
    value: int | None
    status: str  # "proven" | "conjectured" | "open"
    conjectured: int | None = None
    reference: int | None = None  # odd-q formula value when status is "open"


def bound_for(kind: FamilyKind, n: int, q: int) -> Bound:
    """Proven upper bound on the family size.

    Raises :class:`EvenQUnproven` for the parity kinds when q is even and
    :class:`NoTheoremBound` for a relaxed ``FisherK(0)``.  For
    ``ReverseOddtown`` with n even, the conjectured bound [n-1]_q rides
    along as ``conjectured`` and the status is ``"conjectured"``; ``value``
    is still the proven [n]_q - 1.
    """
    if isinstance(kind, FisherK):
        if kind.k == 0:
            raise NoTheoremBound("no theorem bounds families with pairwise intersection dimension 0")
        return Bound(q_int(n, q), "proven")
    if isinstance(kind, ReverseOddtown):
        value = q_int(n, q) - (1 if n % 2 == 0 else 0)
    else:
        value = q_int(n, q)
    if q % 2 == 0:
        raise EvenQUnproven(f"no proven {kind.name} bound for even q={q}", reference_bound=value)
    if isinstance(kind, ReverseOddtown) and n % 2 == 0:
        return Bound(value, "conjectured", conjectured=q_int(n - 1, q))
    return Bound(value, "proven")


def resolve_bound(kind: FamilyKind, n: int, q: int) -> Bound:
    """Like :func:`bound_for` but folds the no-theorem cases into status ``"open"``."""
    try:
        return bound_for(kind, n, q)
    except NoTheoremBound as exc:
        return Bound(None, "open", reference=exc.reference_bound)


def extremal_size(which: str, n: int, q: int) -> int:
    which = which.upper()
    if which == "F1":
        return q_binomial(n, 1, q)
    if which == "F2":
        return q_binomial(n, n - 1, q)
    if which == "F3":
        return q_binomial(n - 1, n - 2, q)
    raise ValueError(which)


# -- verification ------------------------------------------------------------

@dataclass
class VerificationReport:
    kind: str
    k: int | None
    q: int
    n: int
    conditions_hold: bool
    size: int
    bound: int | None
    bound_status: str
    bound_satisfied: bool | None
    conjectured_bound: int | None = None
    rank_witness: int | None = None
    parity_witness: int | None = None
    witness_consistent: bool | None = None
    failure_detail: str | None = None
    failure: Failure | None = dc_field(default=None, repr=False)

    @property
    def satisfied(self) -> bool:
        """Conditions hold, the bound is not violated and the proof witnesses agree."""
        return self.conditions_hold and self.bound_satisfied is not False and self.witness_consistent is not False


def verify_family(f: Family | SkewFamily, kind: FamilyKind, order: PointOrder | None = None,
                  cache: IncidenceCache | None = None) -> VerificationReport:
    """Check the conditions of ``kind`` and, when they hold, the proof-level facts.

    * FisherK: the incidence matrix has full row rank over Q.
    * Oddtown, q odd: the Gram matrix is the identity mod 2 (rank m over F_2).
    * ReverseOddtown, q odd: Gram = J - I mod 2, every row of M has even
      weight, and rank_F2(M) >= rank_F2(J - I).
    * SkewPairs, q odd: the cross matrix <f_Ai, f_Bj> mod 2 is the identity.
    """
    q, n = f.field.q, f.n
    m = len(f)
    ok, failure = check_conditions(f, kind)
    bound = resolve_bound(kind, n, q)
    report = VerificationReport(
        kind=kind.name,
        k=kind.k if isinstance(kind, FisherK) else None,
        q=q,
        n=n,
        conditions_hold=ok,
        size=m,
        bound=bound.value,
        bound_status=bound.status,
        bound_satisfied=None if bound.value is None else m <= bound.value,
        conjectured_bound=bound.conjectured,
        failure_detail=str(failure) if failure else None,
        failure=failure,
    )
    if not ok or m == 0 or n == 0:
        return report

    if order is None:
        order = cache.order if cache is not None else enumerate_points(f.field, n)
    if isinstance(f, SkewFamily):
        if q % 2 == 1:
            mat_a = incidence_matrix([a for a, _ in f.pairs], order, cache)
            mat_b = incidence_matrix([b for _, b in f.pairs], order, cache)
            cross = MatrixF2.from_dense(
                [[scalar_product(u, v) for v in mat_b.vectors] for u in mat_a.vectors], m
            )
            report.parity_witness = rank_f2(cross)
            report.witness_consistent = cross.rows == tuple(1 << i for i in range(m))
        return report

    mat = incidence_matrix(f.members, order, cache)
    if isinstance(kind, FisherK):
        report.rank_witness = exact_rank_int(mat.as_int())
        report.witness_consistent = report.rank_witness == m
    elif q % 2 == 1:
        g2 = mat.gram().mod2()
        report.parity_witness = rank_f2(g2)
        if isinstance(kind, Oddtown):
            report.witness_consistent = g2.rows == tuple(1 << i for i in range(m))
        else:
            even_rows = all(v.weight % 2 == 0 for v in mat.vectors)
            jmi = g2 == MatrixF2.all_ones_minus_identity(m)
            rank_m = rank_f2(mat.as_f2())
            report.witness_consistent = (
                jmi and even_rows and report.parity_witness <= rank_m <= len(order) - 1
            )
    return report


def report_to_dict(r: VerificationReport) -> dict:
    """JSON-ready view; counts that can grow large are decimal strings."""
    return {
        "kind": r.kind,
        "k": r.k,
        "q": r.q,
        "n": r.n,
        "conditions_hold": r.conditions_hold,
        "size": r.size,
        "bound": None if r.bound is None else str(r.bound),
        "bound_status": r.bound_status,
        "bound_satisfied": r.bound_satisfied,
        "conjectured_bound": None if r.conjectured_bound is None else str(r.conjectured_bound),
        "rank_witness": r.rank_witness,
        "parity_witness": r.parity_witness,
        "witness_consistent": r.witness_consistent,
        "failure_detail": r.failure_detail,
    }


def family_from_members(field: FieldSpec, n: int, members: Iterable[Subspace]) -> Family:
    return Family(field, n, tuple(members))
