"""Finite fields F_q for small prime powers q = p^e.

Elements are plain integers ``0 <= code < q``.  A code is read in base p
as the coefficient list of a polynomial of degree < e, constant term in
the least significant digit, so for e = 1 the code is simply the residue
mod p.  Extension fields reduce modulo the monic irreducible polynomial of
smallest encoding returned by :func:`find_irreducible`.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field as dc_field

from .errors import DivisionByZero, NotPrimePower, UnsupportedField

MAX_Q = 32

FieldElem = int


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = next(d for d in itertools.count(2) if q % d == 0)
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, e


# Polynomials over F_p are coefficient lists, constant term first.

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    m = _trim(list(m))
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * max(len(a) + len(b) - 1, 0)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _monic(coeffs: tuple[int, ...]) -> list[int]:
    return list(coeffs) + [1]


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(poly, _monic(low), p):
                return False
    return True


def _digits(code: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        code, r = divmod(code, p)
        out.append(r)
    return out


def _undigits(coeffs: list[int], p: int) -> int:
    code = 0
    for c in reversed(coeffs):
        code = code * p + c
    return code


def find_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Return the monic irreducible degree-``e`` polynomial over F_p of smallest encoding.

    Candidates are scanned by the base-p integer formed from their
    non-leading coefficients (constant term least significant).  The result
    lists all ``e + 1`` coefficients, constant term first, leading 1 last.
    """
    if e < 2:
        raise ValueError("find_irreducible needs degree >= 2")
    for code in range(p**e):
        poly = _digits(code, p, e) + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


@dataclass(frozen=True)
class FieldSpec:
    """The field F_q with q = p**e.

    Arithmetic goes through :meth:`add`, :meth:`sub`, :meth:`neg`,
    :meth:`mul` and :meth:`inv`.  Sum and product tables are filled once at
    construction by polynomial reduction modulo ``modulus``.
    """

    p: int
    e: int
    q: int
    modulus: tuple[int, ...] = ()
    _add: tuple = dc_field(default=(), compare=False, repr=False)
    _mul: tuple = dc_field(default=(), compare=False, repr=False)
    _neg: tuple = dc_field(default=(), compare=False, repr=False)
    _inv: tuple = dc_field(default=(), compare=False, repr=False)

    def __post_init__(self):
        p, e, q = self.p, self.e, self.q
        if p**e != q:
            raise ValueError(f"q={q} is not p**e for p={p}, e={e}")
        if e == 1:
            add = tuple(tuple((a + b) % p for b in range(q)) for a in range(q))
            mul = tuple(tuple(a * b % p for b in range(q)) for a in range(q))
        else:
            digits = [_digits(c, p, e) for c in range(q)]
            add = tuple(
                tuple(_undigits([(x + y) % p for x, y in zip(digits[a], digits[b])], p) for b in range(q))
                for a in range(q)
            )
            mod = list(self.modulus)
            mul = tuple(
                tuple(
                    _undigits(_poly_mod(_poly_mul(digits[a], digits[b], p), mod, p), p)
                    for b in range(q)
                )
                for a in range(q)
            )
        neg = tuple(add[a].index(0) for a in range(q))
        inv = (None,) + tuple(mul[a].index(1) for a in range(1, q))
        object.__setattr__(self, "_add", add)
        object.__setattr__(self, "_mul", mul)
        object.__setattr__(self, "_neg", neg)
        object.__setattr__(self, "_inv", inv)

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of 0 in F_%d" % self.q)
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self._mul[a][self.inv(b)]

    def elements(self) -> range:
        return range(self.q)

    def __str__(self):
        return f"F_{self.q}"


@functools.lru_cache(maxsize=None)
def make_field(q: int, max_q: int = MAX_Q) -> FieldSpec:
    """Build F_q.  Raises NotPrimePower for q that is not p**e.

    Repeated calls with the same ``q`` return the same (cached) object.
    """
    p, e = _factor_prime_power(q)
    if q > max_q:
        raise UnsupportedField(f"q={q} exceeds the configured maximum {max_q}")
    modulus = find_irreducible(p, e) if e > 1 else ()
    return FieldSpec(p=p, e=e, q=q, modulus=modulus)
