"""Small number-theory helpers shared by the witness and law modules."""

from __future__ import annotations

from math import gcd

from sympy import factorint, isprime, nextprime


class VerificationError(Exception):
    """A claimed determinant failed exact recomputation."""


def valuation(p: int, m: int) -> int:
    """Exponent of p in m; m must be nonzero."""
    if m == 0:
        raise ValueError("valuation of 0 is infinite")
    m, k = abs(m), 0
    while m % p == 0:
        m //= p
        k += 1
    return k


def strip(m: int, primes) -> tuple[dict[int, int], int]:
    """Split m into prime powers over ``primes`` and the signed cofactor."""
    exps = {}
    for p in primes:
        exps[p] = valuation(p, m)
        m //= p ** exps[p]
    return exps, m


def smallest_prime_not_dividing(n: int) -> int:
    p = 2
    while n % p == 0:
        p = nextprime(p)
    return p


def odd_prime_factors(n: int) -> list[int]:
    return sorted(p for p in factorint(n) if p != 2)


def is_odd_prime(p: int) -> bool:
    return isinstance(p, int) and p > 2 and isprime(p)


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1
