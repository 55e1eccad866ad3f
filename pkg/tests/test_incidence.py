import itertools
import threading

import pytest

from qoddtown.errors import AmbientMismatch, LengthMismatch
from qoddtown.field import make_field
from qoddtown.incidence import (
    IncidenceCache,
    IncidenceVector,
    incidence_matrix,
    incidence_vector,
    scalar_product,
)
from qoddtown.matfq import MatrixF2
from qoddtown.qcount import q_int
from qoddtown.subspace import (
    all_subspaces,
    canonicalize,
    contains_point,
    enumerate_points,
    enumerate_subspaces,
    intersect,
    whole_space,
    zero_subspace,
)


def test_incidence_vector_examples(f2):
    order = enumerate_points(f2, 2)
    assert incidence_vector(whole_space(f2, 2), order).to_list() == [1, 1, 1]
    assert incidence_vector(zero_subspace(f2, 2), order).to_list() == [0, 0, 0]
    e1 = canonicalize(f2, 2, [(1, 0)])
    assert incidence_vector(e1, order).to_list() == [0, 1, 0]


@pytest.mark.parametrize("q,n", [(2, 3), (3, 3), (4, 2), (5, 3)])
def test_incidence_vector_matches_definition(q, n):
    f = make_field(q)
    order = enumerate_points(f, n)
    for s in all_subspaces(f, n):
        bits = incidence_vector(s, order).to_list()
        assert bits == [int(contains_point(s, p)) for p in order]


def test_scalar_product_examples(f2, f3):
    order2 = enumerate_points(f2, 2)
    line = canonicalize(f2, 2, [(1, 1)])
    fl = incidence_vector(line, order2)
    assert scalar_product(fl, fl) == 1
    other = incidence_vector(canonicalize(f2, 2, [(0, 1)]), order2)
    assert scalar_product(fl, other) == 0
    order3 = enumerate_points(f3, 3)
    h = list(enumerate_subspaces(f3, 3, 2))
    assert scalar_product(incidence_vector(h[0], order3), incidence_vector(h[7], order3)) == 1
    with pytest.raises(LengthMismatch):
        scalar_product(fl, IncidenceVector(0, 4))


@pytest.mark.parametrize("q,n", [(2, 3), (3, 2), (2, 4), (3, 3)])
def test_scalar_product_is_q_int_of_meet(q, n):
    f = make_field(q)
    order = enumerate_points(f, n)
    subs = list(all_subspaces(f, n))
    vec = {s: incidence_vector(s, order) for s in subs}
    for a, b in itertools.product(subs, repeat=2):
        assert scalar_product(vec[a], vec[b]) == q_int(intersect(a, b).k, q)


@pytest.mark.parametrize("q", [3, 5])
def test_weight_law_and_even_rows(q):
    f = make_field(q)
    order = enumerate_points(f, 3)
    for s in all_subspaces(f, 3):
        w = incidence_vector(s, order).weight
        assert w == q_int(s.k, q)
        if s.k % 2 == 0:
            assert w % 2 == 0


def test_incidence_matrix_examples(f2):
    order = enumerate_points(f2, 2)
    lines = list(enumerate_subspaces(f2, 2, 1))
    mat = incidence_matrix(lines, order)
    dense = mat.as_int().rows
    assert sorted(dense) == sorted(tuple(int(i == j) for j in range(3)) for i in range(3))
    assert mat.as_f2() == MatrixF2.from_dense(dense)
    single = incidence_matrix([lines[0]], order)
    assert single.as_int().rows == (tuple(incidence_vector(lines[0], order).to_list()),)
    empty = incidence_matrix([], order)
    assert empty.nrows == 0 and empty.ncols == 3


def test_gram_entries_follow_meets(f3):
    order = enumerate_points(f3, 3)
    fam = list(enumerate_subspaces(f3, 3, 1))[:4] + list(enumerate_subspaces(f3, 3, 2))[:4]
    g = incidence_matrix(fam, order).gram()
    for i, j in itertools.product(range(len(fam)), repeat=2):
        assert g.rows[i][j] == q_int(intersect(fam[i], fam[j]).k, 3)
    from qoddtown.matfq import gram
    assert gram(incidence_matrix(fam, order).as_int()) == g


def test_order_mismatch(f2, f3):
    with pytest.raises(AmbientMismatch):
        incidence_vector(whole_space(f2, 3), enumerate_points(f2, 2))
    with pytest.raises(AmbientMismatch):
        incidence_vector(whole_space(f3, 2), enumerate_points(f2, 2))
    other = IncidenceCache(enumerate_points(f2, 2))
    with pytest.raises(AmbientMismatch):
        incidence_matrix([], enumerate_points(f2, 2), other)


def test_cache_concurrent_use(f3):
    order = enumerate_points(f3, 3)
    cache = IncidenceCache(order)
    subs = list(all_subspaces(f3, 3))
    results = [dict() for _ in range(8)]

    def work(slot):
        for s in subs:
            results[slot][s] = cache.get(s)

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(cache) == len(subs)
    for s in subs:
        expected = incidence_vector(s, order)
        assert all(r[s] == expected for r in results)
        assert all(r[s] is cache.get(s) for r in results)
