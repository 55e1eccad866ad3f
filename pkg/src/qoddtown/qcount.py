"""Exact q-analogue counts: q-integers, q-factorials, Gaussian binomials."""

from __future__ import annotations

from .errors import OutOfRange


def q_int(n: int, q: int) -> int:
    """[n]_q = 1 + q + ... + q^(n-1), with [0]_q = 0.

    The sum form is used so that q = 1 is legal and gives back n.
    """
    if n < 0 or q < 1:
        raise OutOfRange(f"q_int needs n >= 0 and q >= 1, got n={n}, q={q}")
    return sum(q**i for i in range(n))


def q_factorial(n: int, q: int) -> int:
    _check_q(q)
    out = 1
    for i in range(1, n + 1):
        out *= q_int(i, q)
    return out


def q_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    _check_q(q)
    if n < 0 or k < 0 or k > n:
        raise OutOfRange(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    num = q_factorial(n, q)
    den = q_factorial(k, q) * q_factorial(n - k, q)
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def subspace_count(n: int, q: int) -> int:
    """|sub(F_q^n)|, summed over all dimensions."""
    return sum(q_binomial(n, k, q) for k in range(n + 1))


def _check_q(q: int) -> None:
    if q < 2:
        raise OutOfRange(f"q must be >= 2 here, got {q}")
