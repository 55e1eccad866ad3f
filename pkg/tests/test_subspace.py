import itertools

import pytest

from conftest import span_set
from qoddtown.errors import AmbientMismatch
from qoddtown.field import make_field
from qoddtown.qcount import q_binomial, q_int
from qoddtown.subspace import (
    all_subspaces,
    canonicalize,
    contains_point,
    enumerate_points,
    enumerate_subspaces,
    intersect,
    intersection_dim,
    is_subspace_of,
    normalize_point,
    span_sum,
    whole_space,
    zero_subspace,
)


def test_canonicalize_examples(f2):
    s = canonicalize(f2, 2, [(0, 1), (1, 0)])
    assert s.basis == ((1, 0), (0, 1)) and s.k == 2
    f5 = make_field(5)
    t = canonicalize(f5, 2, [(1, 2), (2, 4)])
    assert t.basis == ((1, 2),) and t.k == 1
    z = canonicalize(f5, 3, [])
    assert z.k == 0 and z == zero_subspace(f5, 3)


def test_canonical_equality_is_row_space_equality(f3):
    a = canonicalize(f3, 3, [(1, 1, 0), (0, 1, 2)])
    b = canonicalize(f3, 3, [(1, 2, 2), (2, 0, 1), (1, 1, 0)])
    assert (a == b) == (span_set(f3, a.basis, 3) == span_set(f3, b.basis, 3))
    assert len({a, b}) == (1 if a == b else 2)


def test_intersect_examples(f2, f3):
    hyper = list(enumerate_subspaces(f3, 3, 2))
    assert intersect(hyper[0], hyper[5]).k == 1
    assert intersect(hyper[3], hyper[3]) == hyper[3]
    lines = list(enumerate_subspaces(f2, 2, 1))
    assert intersect(lines[0], lines[1]) == zero_subspace(f2, 2)


def test_ambient_mismatch(f2, f3):
    with pytest.raises(AmbientMismatch):
        intersect(whole_space(f2, 2), whole_space(f2, 3))
    with pytest.raises(AmbientMismatch):
        intersect(whole_space(f2, 2), whole_space(f3, 2))
    with pytest.raises(AmbientMismatch):
        canonicalize(f2, 3, [(1, 0)])


def test_contains_point_examples(f3):
    line = canonicalize(f3, 2, [(1, 1)])
    assert contains_point(line, (1, 1))
    assert not contains_point(line, (1, 2))
    assert not any(contains_point(zero_subspace(f3, 2), p) for p in enumerate_points(f3, 2))


def test_enumerate_points_examples(f2, f3):
    assert enumerate_points(f2, 2).points == ((0, 1), (1, 0), (1, 1))
    assert len(enumerate_points(f3, 3)) == 13
    assert enumerate_points(make_field(5), 1).points == ((1,),)


@pytest.mark.parametrize("q,n", [(2, 3), (3, 3), (4, 2), (5, 2), (9, 2)])
def test_point_order_is_sorted_and_canonical(q, n):
    f = make_field(q)
    pts = enumerate_points(f, n)
    assert len(pts) == q_int(n, q)
    assert list(pts) == sorted(pts) and len(set(pts)) == len(pts)
    assert all(normalize_point(f, p) == p for p in pts)
    # every nonzero vector normalises onto exactly one listed point
    hit = {normalize_point(f, v) for v in itertools.product(range(q), repeat=n) if any(v)}
    assert hit == set(pts)
    assert all(pts.index(p) == i for i, p in enumerate(pts))


def test_point_order_digest_stable(f3):
    assert enumerate_points(f3, 3).digest() == enumerate_points(make_field(3), 3).digest()
    assert enumerate_points(f3, 3).digest() != enumerate_points(f3, 2).digest()


def test_enumerate_subspaces_edges(f3):
    assert sum(1 for _ in enumerate_subspaces(f3, 4, 2)) == 130
    assert list(enumerate_subspaces(f3, 3, 0)) == [zero_subspace(f3, 3)]
    assert list(enumerate_subspaces(f3, 3, 3)) == [whole_space(f3, 3)]


def test_enumeration_order_deterministic(f2):
    subs = list(enumerate_subspaces(f2, 3, 2))
    assert [s.pivots for s in subs] == sorted(s.pivots for s in subs)
    assert subs == list(enumerate_subspaces(f2, 3, 2))
    assert subs[0].basis == ((1, 0, 0), (0, 1, 0))


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_enumeration_distinct_and_canonical(q):
    f = make_field(q)
    for n in range(1, 5):
        for k in range(n + 1):
            subs = list(enumerate_subspaces(f, n, k))
            assert len(set(subs)) == len(subs) == q_binomial(n, k, q)
            for s in subs[:: max(1, len(subs) // 20)]:
                assert canonicalize(f, n, s.basis) == s


@pytest.mark.parametrize("q,n", [(2, 3), (3, 2)])
def test_dimension_formula_and_meet_oracle(q, n):
    f = make_field(q)
    subs = list(all_subspaces(f, n))
    spans = {s: span_set(f, s.basis, n) for s in subs}
    for a, b in itertools.product(subs, repeat=2):
        meet = intersect(a, b)
        join = span_sum(a, b)
        assert meet.k + join.k == a.k + b.k
        assert intersection_dim(a, b) == meet.k
        assert spans[meet] == spans[a] & spans[b]
        assert is_subspace_of(meet, a) and is_subspace_of(meet, b)


@pytest.mark.parametrize("q,n", [(2, 4), (3, 3), (4, 3)])
def test_points_in_subspace(q, n):
    f = make_field(q)
    pts = enumerate_points(f, n)
    for s in all_subspaces(f, n):
        inside = [p for p in pts if contains_point(s, p)]
        assert len(inside) == q_int(s.k, q)
        assert sorted(s.points()) == inside


def test_text_form(f3):
    s = canonicalize(f3, 3, [(1, 0, 2), (0, 1, 1)])
    assert s.to_text() == "2 3\n1 0 2\n0 1 1"
    assert zero_subspace(f3, 2).to_text() == "0 2"
