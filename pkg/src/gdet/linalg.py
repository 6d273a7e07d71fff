"""Exact integer determinants: Bareiss elimination and a CRT-modular route."""

from __future__ import annotations

from math import isqrt, prod
from typing import Sequence

from sympy import prevprime

# Largest primes below 2**62, in descending order.  The CRT determinant draws
# from this list in order, so its residues are reproducible across runs.
PRIMES62 = (
    4611686018427387847,
    4611686018427387817,
    4611686018427387787,
    4611686018427387761,
    4611686018427387751,
    4611686018427387737,
    4611686018427387733,
    4611686018427387709,
)

_primes: list[int] = list(PRIMES62)


def primes_for_bound(bound: int) -> list[int]:
    """Shortest prefix of the prime list whose product exceeds ``bound``.

    The list is extended with further ``prevprime`` steps when it runs out.
    """
    out, acc, i = [], 1, 0
    while acc <= bound:
        if i == len(_primes):
            _primes.append(prevprime(_primes[-1]))
        out.append(_primes[i])
        acc *= _primes[i]
        i += 1
    return out


def crt_signed(residues: Sequence[int], moduli: Sequence[int]) -> int:
    """Combine residues by Garner's method into the symmetric range."""
    x, M = 0, 1
    for r, m in zip(residues, moduli):
        t = (r - x) * pow(M, -1, m) % m
        x += M * t
        M *= m
    return x - M if x > M // 2 else x


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination (Bareiss) with row pivoting."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    if any(len(r) != n for r in a):
        raise ValueError("matrix is not square")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def det_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    a = [[v % p for v in r] for r in rows]
    n = len(a)
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        akk = a[k][k]
        det = det * akk % p
        inv = pow(akk, p - 2, p)
        rk = a[k]
        for i in range(k + 1, n):
            f = a[i][k] * inv % p
            if f:
                ri = a[i]
                for j in range(k, n):
                    ri[j] = (ri[j] - f * rk[j]) % p
    return det % p


def hadamard_bound(rows: Sequence[Sequence[int]]) -> int:
    """Upper bound on |det| from the product of row norms (rounded up)."""
    sq = prod(sum(v * v for v in r) for r in rows)
    r = isqrt(sq)
    return r if r * r == sq else r + 1


def crt_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant from residues modulo enough fixed 62-bit primes."""
    bound = hadamard_bound(rows)
    moduli = primes_for_bound(2 * bound + 1)
    residues = [det_mod_p(rows, p) for p in moduli]
    return crt_signed(residues, moduli)
