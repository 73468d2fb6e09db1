"""Number-theoretic primitives used by the zeta-function formulas.

Divisors, Mobius, Jordan totients, and the two gadgets m(k,l,q) and
n(n,m,k) that control which twists of a germ feed a given twist of its
suspension or Le-Yomdin blow-up.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd, lcm


def _check_pos(*values: int) -> None:
    for v in values:
        if v < 1:
            raise ValueError(f"expected a positive integer, got {v}")


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, strictly increasing."""
    _check_pos(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    _check_pos(n)
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    _check_pos(n)
    result = n
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


@lru_cache(maxsize=None)
def jordan_totient(m: int, n: int) -> int:
    """J_m(n) = sum_{d|n} mu(d) (n/d)^m; J_1 is Euler's totient."""
    _check_pos(m, n)
    return sum(mobius(d) * (n // d) ** m for d in divisors(n))


def frak_m(k: int, l: int, q: int) -> int:
    """Generator of {M : l*gcd(k,M) divides q*M}.

    Equals l1 * gcd(k, l1^u) for u >> 1 with l1 = l/gcd(l,q); the gcd
    stabilizes after at most bit_length(k) doublings, so no prime
    factorization is needed.
    """
    _check_pos(k, l, q)
    l1 = l // gcd(l, q)
    if l1 == 1:
        return 1
    g = gcd(k, l1)
    while True:
        g_next = gcd(k, g * l1)
        if g_next == g:
            return l1 * g
        g = g_next


def frak_n(n: int, m: int, k: int) -> int:
    """(m+k) * n / gcd(n,k); transfers eigenvalue orders through a blow-up."""
    _check_pos(n, m, k)
    return (m + k) * n // gcd(n, k)


def divisor_closure(values) -> frozenset[int]:
    """Union of the divisor sets of the given positive integers."""
    out: set[int] = set()
    for v in values:
        out.update(divisors(v))
    return frozenset(out)


def lcm_all(values) -> int:
    out = 1
    for v in values:
        out = lcm(out, v)
    return out
