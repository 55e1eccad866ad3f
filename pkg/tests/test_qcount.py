import pytest

from qoddtown.errors import OutOfRange
from qoddtown.field import make_field
from qoddtown.qcount import q_binomial, q_factorial, q_int, subspace_count
from qoddtown.subspace import all_subspaces, enumerate_subspaces


def test_q_int_examples():
    assert q_int(3, 3) == 13
    assert q_int(1, 7) == 1
    assert q_int(0, 5) == 0
    assert q_int(4, 3) == 40


@pytest.mark.parametrize("n", range(0, 12))
def test_q_int_at_one_is_n(n):
    assert q_int(n, 1) == n


def test_q_binomial_examples():
    assert q_binomial(4, 2, 3) == 130
    assert q_binomial(3, 2, 2) == 7
    assert all(q_binomial(n, 0, q) == 1 for n in range(6) for q in (2, 3, 4))
    with pytest.raises(OutOfRange):
        q_binomial(2, 3, 2)
    with pytest.raises(OutOfRange):
        q_binomial(3, 1, 1)


def test_q_factorial_chain():
    assert q_factorial(0, 2) == 1
    assert q_factorial(3, 2) == 1 * 3 * 7
    assert q_binomial(5, 5, 3) == 1


def test_subspace_count_examples():
    assert subspace_count(2, 2) == 5
    assert subspace_count(3, 2) == 16
    assert all(subspace_count(1, q) == 2 for q in (2, 3, 5, 9))


def test_big_values_stay_exact():
    v = q_binomial(30, 15, 31)
    assert isinstance(v, int)
    assert v == q_binomial(30, 15, 31) and v > 2**64


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_symmetry_and_pascal(q):
    for n in range(1, 9):
        for k in range(n + 1):
            assert q_binomial(n, k, q) == q_binomial(n, n - k, q)
            if 1 <= k <= n - 1:
                assert q_binomial(n, k, q) == q_binomial(n - 1, k - 1, q) + q**k * q_binomial(n - 1, k, q)
        assert q_int(n, q) == q_binomial(n, 1, q)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_enumeration_oracle(q):
    f = make_field(q)
    for n in range(0, 5):
        for k in range(n + 1):
            assert sum(1 for _ in enumerate_subspaces(f, n, k)) == q_binomial(n, k, q)
    assert sum(1 for _ in all_subspaces(f, 3)) == subspace_count(3, q)
