"""Extremal family search as maximum clique.

Every family kind except ``SkewPairs`` is a symmetric pairwise predicate
plus a per-member filter, so its extremal families are exactly the maximum
cliques of a compatibility graph on the admissible subspaces.  Cliques are
found by branch and bound with greedy-colouring upper bounds over int
bitsets.
"""

from __future__ import annotations

import itertools
import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .errors import EvenQUnproven, InternalInconsistency, TooLarge
from .family import (
    Family,
    FamilyKind,
    FisherK,
    Oddtown,
    ReverseOddtown,
    SkewPairs,
    VerificationReport,
    check_conditions,
    construct_extremal,
    resolve_bound,
    verify_family,
)
from .field import FieldSpec, make_field
from .incidence import IncidenceCache
from .subspace import Subspace, enumerate_points, enumerate_subspaces, intersection_dim, zero_subspace

log = logging.getLogger(__name__)

DEFAULT_MAX_VERTICES = 20000


@dataclass(frozen=True)
class SearchConfig:
    time_limit: float | None = 600.0
    worker_count: int = 1
    deterministic_witness: bool = True
    max_vertices: int = DEFAULT_MAX_VERTICES

    def __post_init__(self):
        if self.worker_count < 1:
            raise ValueError("worker_count must be >= 1")


@dataclass
class CompatGraph:
    """Candidate subspaces with an edge wherever the kind's pairwise condition holds."""

    kind: FamilyKind
    field: FieldSpec
    n: int
    vertices: list[Subspace]
    adj: list[int]

    @property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def index_of(self, a: Subspace) -> int:
        return self.vertices.index(a)


def candidate_dims(kind: FamilyKind, n: int) -> list[int]:
    if isinstance(kind, Oddtown):
        return [d for d in range(1, n + 1) if d % 2 == 1]
    if isinstance(kind, ReverseOddtown):
        # dim 0 never sits in a reverse-oddtown family of size >= 2
        return [d for d in range(2, n + 1) if d % 2 == 0]
    if isinstance(kind, FisherK):
        return list(range(kind.k, n + 1))
    raise TypeError(f"{kind.name} families are not searched by clique")


def build_compat_graph(kind: FamilyKind, field: FieldSpec, n: int,
                       max_vertices: int = DEFAULT_MAX_VERTICES) -> CompatGraph:
    from .qcount import q_binomial

    dims = candidate_dims(kind, n)
    count = sum(q_binomial(n, d, field.q) for d in dims)
    if count > max_vertices:
        raise TooLarge(count, max_vertices)
    vertices = [s for d in dims for s in enumerate_subspaces(field, n, d)]
    adj = [0] * len(vertices)
    for i, a in enumerate(vertices):
        for j in range(i + 1, len(vertices)):
            if kind.pair_ok(intersection_dim(a, vertices[j])):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return CompatGraph(kind, field, n, vertices, adj)


# -- maximum clique ----------------------------------------------------------

@dataclass
class CliqueResult:
    max_size: int
    witness: tuple[int, ...]
    proven_optimal: bool
    nodes_explored: int
    elapsed: float


class _Timeout(Exception):
    pass


def _bits(x: int) -> Iterable[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _color_order(p: int, adj: Sequence[int]) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of the vertex set ``p``.

    Returns vertices and their colour numbers in nondecreasing colour
    order; colour c bounds the clique size among the first vertices up to
    and including that position.
    """
    order: list[int] = []
    colors: list[int] = []
    uncolored = p
    c = 0
    while uncolored:
        c += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~adj[v] & ~low
            uncolored &= ~low
            order.append(v)
            colors.append(c)
    return order, colors


class _Search:
    """Shared state of one branch-and-bound run, in internal vertex labels."""

    def __init__(self, adj: list[int], deadline: float | None, best: list[int]):
        self.adj = adj
        self.deadline = deadline
        self.best = list(best)
        self.best_size = len(best)
        self.lock = threading.Lock()
        self.nodes = 0
        self.timed_out = False

    def _tick(self):
        self.nodes += 1
        if self.deadline is not None and self.nodes & 255 == 0 and time.monotonic() > self.deadline:
            self.timed_out = True
            raise _Timeout

    def _offer(self, clique: list[int]):
        with self.lock:
            if len(clique) > self.best_size:
                self.best = list(clique)
                self.best_size = len(clique)

    def expand(self, r: list[int], p: int):
        self._tick()
        if self.timed_out:
            raise _Timeout
        order, colors = _color_order(p, self.adj)
        adj = self.adj
        for idx in range(len(order) - 1, -1, -1):
            if len(r) + colors[idx] <= self.best_size:
                return
            v = order[idx]
            r.append(v)
            np_ = p & adj[v]
            if np_:
                self.expand(r, np_)
            elif len(r) > self.best_size:
                self._offer(r)
            r.pop()
            p &= ~(1 << v)

    def root(self, v: int, p: int):
        if 1 + p.bit_count() <= self.best_size:
            return
        r = [v]
        if p:
            self.expand(r, p)
        elif 1 > self.best_size:
            self._offer(r)


def _degeneracy_order(adj: Sequence[int]) -> list[int]:
    """Smallest-last ordering (repeatedly strip a minimum-degree vertex)."""
    n = len(adj)
    remaining = (1 << n) - 1
    deg = [a.bit_count() for a in adj]
    out = []
    for _ in range(n):
        v = min(_bits(remaining), key=lambda u: (deg[u], u))
        out.append(v)
        remaining &= ~(1 << v)
        for u in _bits(adj[v] & remaining):
            deg[u] -= 1
    return out


def _relabel(adj: Sequence[int], order: Sequence[int]) -> list[int]:
    pos = {v: i for i, v in enumerate(order)}
    new = [0] * len(adj)
    for v, nbrs in enumerate(adj):
        row = 0
        for u in _bits(nbrs):
            row |= 1 << pos[u]
        new[pos[v]] = row
    return new


def _adjacency(g) -> list[int]:
    if isinstance(g, CompatGraph):
        return list(g.adj)
    adj = list(g)
    for v, row in enumerate(adj):
        if row >> v & 1:
            raise ValueError(f"self-loop at vertex {v}")
        for u in _bits(row):
            if u >= len(adj) or not adj[u] >> v & 1:
                raise ValueError(f"adjacency is not symmetric at ({v}, {u})")
    return adj


def is_clique(adj: Sequence[int], vs: Iterable[int]) -> bool:
    vs = list(vs)
    return all(adj[a] >> b & 1 for a, b in itertools.combinations(vs, 2))


def max_clique(g: CompatGraph | Sequence[int], cfg: SearchConfig = SearchConfig(),
               seed: Sequence[int] = ()) -> CliqueResult:
    """Maximum clique of ``g`` (a CompatGraph or a list of adjacency bitsets).

    ``seed`` is an optional known clique used as the starting incumbent.
    When the time limit cuts the search short the best clique found is
    returned with ``proven_optimal=False``.  With one worker and
    ``deterministic_witness`` the witness is the lexicographically smallest
    maximum clique in vertex order.
    """
    start = time.monotonic()
    deadline = None if cfg.time_limit is None else start + cfg.time_limit
    adj = _adjacency(g)
    n = len(adj)
    seed = sorted(seed)
    if seed and not is_clique(adj, seed):
        raise ValueError("seed is not a clique")
    if n == 0:
        return CliqueResult(0, (), True, 0, time.monotonic() - start)

    order = _degeneracy_order(adj)
    pos = {v: i for i, v in enumerate(order)}
    inner = _relabel(adj, order)
    state = _Search(inner, deadline, [pos[v] for v in seed])

    # Task i owns the cliques whose earliest vertex in the ordering is i.
    tasks = [(i, inner[i] & ~((1 << (i + 1)) - 1)) for i in range(n)]
    tasks.reverse()

    if cfg.worker_count == 1:
        try:
            for v, p in tasks:
                state.root(v, p)
        except _Timeout:
            pass
    else:
        it = iter(tasks)
        it_lock = threading.Lock()

        def worker():
            while True:
                with it_lock:
                    task = next(it, None)
                if task is None or state.timed_out:
                    return
                try:
                    state.root(*task)
                except _Timeout:
                    return

        with ThreadPoolExecutor(cfg.worker_count) as pool:
            for fut in [pool.submit(worker) for _ in range(cfg.worker_count)]:
                fut.result()

    best = sorted(order[v] for v in state.best)
    optimal = not state.timed_out
    nodes = state.nodes
    if optimal and cfg.deterministic_witness and cfg.worker_count == 1 and best:
        try:
            best, extra = _lex_smallest_clique(adj, len(best), deadline)
            nodes += extra
        except _Timeout:
            pass
    return CliqueResult(len(best), tuple(best), optimal, nodes, time.monotonic() - start)


def _has_clique(adj: Sequence[int], p: int, need: int, deadline: float | None, counter: list[int]) -> bool:
    if need <= 0:
        return True
    if p.bit_count() < need:
        return False
    counter[0] += 1
    if deadline is not None and counter[0] & 255 == 0 and time.monotonic() > deadline:
        raise _Timeout
    order, colors = _color_order(p, adj)
    for idx in range(len(order) - 1, -1, -1):
        if colors[idx] < need:
            return False
        v = order[idx]
        if _has_clique(adj, p & adj[v], need - 1, deadline, counter):
            return True
        p &= ~(1 << v)
    return False


def _lex_smallest_clique(adj: Sequence[int], size: int, deadline: float | None) -> tuple[list[int], int]:
    """Smallest clique of the given size in lexicographic order of sorted vertex lists."""
    counter = [0]
    chosen: list[int] = []
    p = (1 << len(adj)) - 1
    while len(chosen) < size:
        need = size - len(chosen)
        for v in _bits(p):
            above = p & adj[v] & ~((1 << (v + 1)) - 1)
            if _has_clique(adj, above, need - 1, deadline, counter):
                chosen.append(v)
                p = above
                break
        else:
            raise AssertionError("no clique of the proven maximum size")
    return chosen, counter[0]


# -- extremal search ---------------------------------------------------------

@dataclass
class ExtremalReport:
    kind: str
    k: int | None
    q: int
    n: int
    num_vertices: int
    num_edges: int
    max_size: int
    proven_optimal: bool
    bound: int | None
    bound_status: str
    conjectured_bound: int | None
    reference_bound: int | None
    verdict: str
    conjecture_verdict: str | None
    witness: Family
    verification: VerificationReport
    nodes_explored: int
    elapsed: float
    point_order_hash: str
    seeds: list[str] = dc_field(default_factory=list)


def seed_families(kind: FamilyKind, field: FieldSpec, n: int) -> list[tuple[str, Family]]:
    """Known constructions that are valid families of ``kind`` at (n, q)."""
    names = []
    if isinstance(kind, Oddtown) and n >= 1:
        names = ["F1"]
    elif isinstance(kind, ReverseOddtown) and n >= 1:
        names = ["F2"] if n % 2 else ["F3"]
    elif isinstance(kind, FisherK) and kind.k >= 1 and kind.k == n - 2:
        names = ["F2"]
    out = []
    for name in names:
        try:
            fam = construct_extremal(name, field, n)
        except ValueError:
            continue
        if check_conditions(fam, kind)[0]:
            out.append((name, fam))
    return out


def _verdict(size: int, optimal: bool, bound, ) -> tuple[str, str | None]:
    conj = None
    if bound.conjectured is not None:
        if size > bound.conjectured:
            conj = "counterexample"
        elif optimal:
            conj = "consistent"
        else:
            conj = "undecided"
    if bound.value is None:
        ref = bound.reference
        if ref is None:
            return "no_bound", conj
        if size > ref:
            return "odd_q_formula_fails", conj
        return ("odd_q_formula_holds" if optimal else "odd_q_formula_undecided"), conj
    if not optimal:
        return "lower_bound_only", conj
    return ("tight" if size == bound.value else "below_bound"), conj


def search_extremal(kind: FamilyKind, field: FieldSpec | int, n: int,
                    cfg: SearchConfig = SearchConfig()) -> ExtremalReport:
    """Largest family of ``kind`` in F_q^n, checked against the theorem bounds.

    The witness is re-verified with :func:`verify_family`.  A witness that
    breaks its conditions, a proof witness, or a proven bound raises
    :class:`InternalInconsistency`; beating a conjectured bound is reported
    through ``conjecture_verdict == "counterexample"``.
    """
    if isinstance(kind, SkewPairs):
        raise TypeError("skew pair families are not searched by clique")
    if isinstance(field, int):
        field = make_field(field)
    q = field.q
    g = build_compat_graph(kind, field, n, cfg.max_vertices)
    index = {v: i for i, v in enumerate(g.vertices)}
    seed: list[int] = []
    seed_names = []
    for name, fam in seed_families(kind, field, n):
        if not all(a in index for a in fam.members):
            continue
        idx = [index[a] for a in fam.members]
        seed_names.append(name)
        if len(idx) > len(seed):
            seed = idx
    res = max_clique(g, cfg, seed)
    members = [g.vertices[i] for i in res.witness]
    if not members and n >= 0 and kind.member_ok(0):
        # singletons are legal even where no candidate vertex exists
        members = [zero_subspace(field, n)]
    witness = Family(field, n, tuple(members))

    order = enumerate_points(field, n) if n >= 1 else None
    cache = IncidenceCache(order) if order is not None else None
    ver = verify_family(witness, kind, order, cache)
    if not ver.conditions_hold:
        raise InternalInconsistency(f"search witness fails its own conditions: {ver.failure_detail}")
    if ver.witness_consistent is False:
        raise InternalInconsistency("search witness contradicts the proof-level rank facts")
    bound = resolve_bound(kind, n, q)
    if bound.value is not None and len(witness) > bound.value:
        raise InternalInconsistency(
            f"{kind.name} family of size {len(witness)} exceeds the proven bound {bound.value} at n={n}, q={q}"
        )
    verdict, conj = _verdict(len(witness), res.proven_optimal, bound)
    if conj == "counterexample":
        log.warning("family of size %d beats the conjectured bound %d at n=%d, q=%d",
                    len(witness), bound.conjectured, n, q)
    return ExtremalReport(
        kind=kind.name,
        k=kind.k if isinstance(kind, FisherK) else None,
        q=q,
        n=n,
        num_vertices=len(g.vertices),
        num_edges=g.num_edges,
        max_size=len(witness),
        proven_optimal=res.proven_optimal,
        bound=bound.value,
        bound_status=bound.status,
        conjectured_bound=bound.conjectured,
        reference_bound=bound.reference,
        verdict=verdict,
        conjecture_verdict=conj,
        witness=witness,
        verification=ver,
        nodes_explored=res.nodes_explored,
        elapsed=res.elapsed,
        point_order_hash=order.digest() if order is not None else "",
        seeds=seed_names,
    )


# -- experiments -------------------------------------------------------------

@dataclass
class InstanceError:
    kind: str
    q: int
    n: int
    error: str
    message: str


@dataclass
class BatchReport:
    name: str
    instances: list = dc_field(default_factory=list)


def run_experiment(name: str, grid: Iterable[tuple[int, int]], cfg: SearchConfig = SearchConfig(),
                   kinds: Sequence[FamilyKind] | None = None) -> BatchReport:
    """Run a grid of (n, q) instances.

    ``"conjecture"`` searches reverse-oddtown families (the conjectured
    bound is attached automatically for even n and odd q).
    ``"explore_even_q"`` searches oddtown and reverse-oddtown families for
    even q, where no bound is proven; every entry has status ``"open"``.
    Per-instance failures (too large, bad parameters) are recorded and the
    batch continues.
    """
    if name == "conjecture":
        kinds = list(kinds or [ReverseOddtown()])
    elif name == "explore_even_q":
        kinds = list(kinds or [Oddtown(), ReverseOddtown()])
    else:
        raise ValueError(f"unknown experiment {name!r}")
    batch = BatchReport(name)
    for n, q in grid:
        for kind in kinds:
            try:
                if name == "explore_even_q" and q % 2:
                    raise EvenQUnproven(f"explore_even_q expects even q, got {q}")
                batch.instances.append(search_extremal(kind, make_field(q), n, cfg))
            except (TooLarge, ValueError, EvenQUnproven) as exc:
                batch.instances.append(InstanceError(kind.name, q, n, type(exc).__name__, str(exc)))
    return batch
