"""Factorization of x^n - 1 over F2 and enumeration of its monic divisors."""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .poly import BinaryPoly, clmul

MAX_LENGTH = 64
SIEVE_DEGREE = 12


@lru_cache(maxsize=None)
def irreducibles_up_to(degree: int) -> tuple[BinaryPoly, ...]:
    """All irreducible binary polynomials of degree 1..degree, by sieve.

    Every product of two polynomials of positive degree is marked composite;
    the unmarked polynomials of degree >= 1 are irreducible.
    """
    if degree < 1:
        return ()
    limit = 1 << (degree + 1)
    composite = bytearray(limit)
    for a in range(2, 1 << (degree // 2 + 1)):
        da = a.bit_length() - 1
        for b in range(a, 1 << (degree - da + 1)):
            composite[clmul(a, b)] = 1
    return tuple(BinaryPoly(f) for f in range(2, limit) if not composite[f])


def _mod(a: int, b: int) -> int:
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mod(a, b)
    return a


def _mulmod(a: int, b: int, m: int) -> int:
    return _mod(clmul(a, b), m)


def _square_k(a: int, k: int, m: int) -> int:
    for _ in range(k):
        a = _mulmod(a, a, m)
    return a


def _distinct_degree(f: int) -> list[tuple[int, int]]:
    """Split a squarefree f into (product of degree-k factors, k) pieces."""
    out = []
    k = 0
    xp = 2  # x^(2^k) mod f
    while f.bit_length() - 1 >= 2 * (k + 1):
        k += 1
        xp = _mulmod(xp, xp, f)
        g = _gcd(f, xp ^ 2)
        if g != 1:
            out.append((g, k))
            f = _divexact(f, g)
            xp = _mod(xp, f)
    if f != 1:
        out.append((f, f.bit_length() - 1))
    return out


def _divexact(a: int, b: int) -> int:
    q, r = BinaryPoly(a).__divmod__(BinaryPoly(b))
    assert not r
    return q.bits


def _equal_degree(f: int, k: int) -> list[int]:
    """Split f, a product of distinct irreducibles of degree k, via the trace map."""
    if f.bit_length() - 1 == k:
        return [f]
    for r in range(2, f):
        # trace of r from GF(2^k) to GF(2), computed modulo f
        t, s = r, r
        for _ in range(k - 1):
            s = _mulmod(s, s, f)
            t ^= s
        g = _gcd(f, _mod(t, f))
        if g != 1 and g != f:
            return _equal_degree(g, k) + _equal_degree(_divexact(f, g), k)
    raise ArithmeticError("equal-degree splitting failed")  # unreachable for squarefree f


def _check_length(n: int) -> None:
    if not 1 <= n <= MAX_LENGTH:
        raise ValueError(f"length n={n} outside supported range 1..{MAX_LENGTH}")


@lru_cache(maxsize=None)
def factor_xn_minus_1(n: int) -> tuple[tuple[BinaryPoly, int], ...]:
    """Irreducible factors of x^n - 1 over F2 with multiplicities.

    With n = 2^s m and m odd, x^n - 1 = (x^m - 1)^(2^s) where x^m - 1 is
    squarefree.  Small factors come from trial division against the sieve;
    whatever cofactor remains is split by distinct- then equal-degree
    factorization.  Sorted by (degree, bits).
    """
    _check_length(n)
    s, m = 0, n
    while m % 2 == 0:
        m //= 2
        s += 1
    rest = BinaryPoly.xn_minus_1(m)
    factors = []
    for cand in irreducibles_up_to(SIEVE_DEGREE):
        if 2 * cand.degree > rest.degree:
            break
        q, r = divmod(rest, cand)
        if not r:
            factors.append(cand)
            rest = q
    if rest.degree >= 1:
        for piece, k in _distinct_degree(rest.bits):
            factors.extend(BinaryPoly(f) for f in _equal_degree(piece, k))
    return tuple((f, 1 << s) for f in sorted(factors))


def is_irreducible(f: BinaryPoly) -> bool:
    """Rabin's test over F2."""
    d = f.degree
    if d < 1:
        return False
    m = f.bits
    if _square_k(2, d, m) != _mod(2, m):
        return False
    for p in _prime_factors(d):
        h = _square_k(2, d // p, m)
        if _gcd(m, h ^ 2) != 1:
            return False
    return True


def _prime_factors(d: int) -> list[int]:
    out, p = [], 2
    while p * p <= d:
        if d % p == 0:
            out.append(p)
            while d % p == 0:
                d //= p
        p += 1
    if d > 1:
        out.append(d)
    return out


def format_factorization(factors) -> str:
    parts = []
    for f, mult in factors:
        text = f"({f})"
        parts.append(text if mult == 1 else f"{text}^{mult}")
    return "".join(parts)


@lru_cache(maxsize=None)
def divisors_xn_minus_1(n: int) -> tuple[BinaryPoly, ...]:
    """All monic divisors of x^n - 1 over F2, sorted by (degree, bits)."""
    factors = factor_xn_minus_1(n)
    out = set()
    for exps in product(*(range(mult + 1) for _, mult in factors)):
        d = BinaryPoly(1)
        for (f, _), e in zip(factors, exps):
            d = d * f**e
        out.add(d)
    return tuple(sorted(out))
