"""Dense integer polynomials, residues mod x^N - 1, cyclotomics and resultants.

Everything here is exact.  Coefficient sequences are stored low degree first,
so ``coeffs[i]`` is the coefficient of ``x**i``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

import numpy as np
from sympy import factorint

__all__ = [
    "IntPoly",
    "CyclicPoly",
    "cyclic_mul",
    "reciprocal",
    "reduce_cyclic",
    "cyclotomic",
    "resultant",
    "resultant_sylvester",
    "resultant_modular",
    "sylvester_matrix",
    "all_ones",
    "prem",
    "divisors",
]

_INT64_SAFE = 1 << 62


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> IntPoly:
        if not terms:
            return cls(())
        if min(terms) < 0:
            raise ValueError("negative exponent in IntPoly")
        c = [0] * (max(terms) + 1)
        for k, v in terms.items():
            c[k] += v
        return cls(tuple(c))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls.from_terms({k: c})

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPoly(tuple(out))

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-v for v in self.coeffs))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(tuple(other * v for v in self.coeffs))
        return IntPoly(tuple(_convolve(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("negative power")
        result, base = IntPoly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def compose_power(self, k: int) -> IntPoly:
        """Return p(x**k)."""
        if k < 1:
            raise ValueError("k must be positive")
        return IntPoly.from_terms({i * k: c for i, c in enumerate(self.coeffs) if c})

    def compose_neg(self) -> IntPoly:
        """Return p(-x)."""
        return IntPoly(tuple(-c if i & 1 else c for i, c in enumerate(self.coeffs)))

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


@dataclass(frozen=True)
class CyclicPoly:
    """A residue class of Z[x] modulo x^N - 1, always holding N coefficients."""

    N: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.N < 1:
            raise ValueError(f"modulus must be positive, got {self.N}")
        c = tuple(int(v) for v in self.coeffs)
        if len(c) != self.N:
            raise ValueError(f"expected {self.N} coefficients, got {len(c)}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, N: int) -> CyclicPoly:
        return cls(N, (0,) * N)

    @classmethod
    def one(cls, N: int) -> CyclicPoly:
        return cls.monomial(N, 0)

    @classmethod
    def monomial(cls, N: int, k: int, c: int = 1) -> CyclicPoly:
        out = [0] * N
        out[k % N] = c
        return cls(N, tuple(out))

    @classmethod
    def from_coeffs(cls, N: int, coeffs: Sequence[int]) -> CyclicPoly:
        """Fold an arbitrary-length coefficient list onto N slots."""
        out = [0] * N
        for i, v in enumerate(coeffs):
            out[i % N] += v
        return cls(N, tuple(out))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_intpoly(self) -> IntPoly:
        return IntPoly(self.coeffs)

    def __add__(self, other: CyclicPoly) -> CyclicPoly:
        _same_modulus(self, other)
        return CyclicPoly(self.N, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> CyclicPoly:
        return CyclicPoly(self.N, tuple(-a for a in self.coeffs))

    def __sub__(self, other: CyclicPoly) -> CyclicPoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclicPoly(self.N, tuple(other * a for a in self.coeffs))
        return cyclic_mul(self, other)

    __rmul__ = __mul__

    def shift(self, k: int) -> CyclicPoly:
        """Multiply by x**k."""
        k %= self.N
        c = self.coeffs
        return CyclicPoly(self.N, c[-k:] + c[:-k] if k else c)

    def __call__(self, x):
        return IntPoly(self.coeffs)(x)

    def __repr__(self) -> str:
        return f"CyclicPoly(N={self.N}, {list(self.coeffs)})"


def _same_modulus(a: CyclicPoly, b: CyclicPoly) -> None:
    if a.N != b.N:
        raise ValueError(f"modulus mismatch: {a.N} != {b.N}")


def _convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    nz_a = [(i, v) for i, v in enumerate(a) if v]
    nz_b = [(j, w) for j, w in enumerate(b) if w]
    out_len = len(a) + len(b) - 1
    if len(nz_a) * len(nz_b) > 20000:
        ma = max(abs(v) for _, v in nz_a)
        mb = max(abs(w) for _, w in nz_b)
        if ma * mb * min(len(nz_a), len(nz_b)) < _INT64_SAFE:
            r = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
            return [int(v) for v in r]
    out = [0] * out_len
    for i, v in nz_a:
        for j, w in nz_b:
            out[i + j] += v * w
    return out


def cyclic_mul(a: CyclicPoly, b: CyclicPoly) -> CyclicPoly:
    _same_modulus(a, b)
    return CyclicPoly.from_coeffs(a.N, _convolve(a.coeffs, b.coeffs))


def reciprocal(a: CyclicPoly) -> CyclicPoly:
    """Image of a(x) under x -> x^{-1}."""
    c = a.coeffs
    return CyclicPoly(a.N, (c[0],) + tuple(reversed(c[1:])))


def reduce_cyclic(p: IntPoly | Sequence[int], N: int) -> CyclicPoly:
    coeffs = p.coeffs if isinstance(p, IntPoly) else p
    return CyclicPoly.from_coeffs(N, coeffs)


def all_ones(N: int) -> IntPoly:
    """1 + x + ... + x^{N-1}."""
    if N < 1:
        raise ValueError("N must be positive")
    return IntPoly((1,) * N)


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError("n must be positive")
    ds = [1]
    for p, e in factorint(n).items():
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


# -- cyclotomic polynomials ------------------------------------------------

_CYCLO: dict[int, IntPoly] = {}
_CYCLO_LOCK = threading.Lock()


def _mul_binomial(c: list[int], e: int) -> list[int]:
    # c * (x^e - 1)
    out = [0] * (len(c) + e)
    for i, v in enumerate(c):
        out[i + e] += v
        out[i] -= v
    return out


def _div_binomial(c: list[int], e: int) -> list[int]:
    # exact quotient c / (x^e - 1)
    q = [0] * (len(c) - e)
    for i in range(len(q)):
        q[i] = (q[i - e] if i >= e else 0) - c[i]
    return q


def cyclotomic(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial, memoized."""
    if d < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {d}")
    hit = _CYCLO.get(d)
    if hit is not None:
        return hit
    fac = factorint(d)
    rad = 1
    for p in fac:
        rad *= p
    if rad != d:
        poly = cyclotomic(rad).compose_power(d // rad)
    elif d % 2 == 0 and d > 2:
        poly = cyclotomic(d // 2).compose_neg()
    else:
        # squarefree: Phi_d = prod_{e | d} (x^e - 1)^{mu(d/e)}
        primes = list(fac)
        up, down = [], []
        for mask in range(1 << len(primes)):
            e, bits = d, 0
            for i, p in enumerate(primes):
                if mask >> i & 1:
                    e //= p
                    bits += 1
            (up if bits % 2 == 0 else down).append(e)
        c = [1]
        for e in up:
            c = _mul_binomial(c, e)
        for e in down:
            c = _div_binomial(c, e)
        poly = IntPoly(tuple(c))
    with _CYCLO_LOCK:
        return _CYCLO.setdefault(d, poly)


# -- resultants ---------------------------------------------------------------


def prem(u: Sequence[int], v: Sequence[int]) -> list[int]:
    """Pseudo-remainder lc(v)^(deg u - deg v + 1) * u mod v.

    Inputs are trimmed coefficient lists (low first) with deg u >= deg v >= 0.
    Scaling of coefficients outside the active window is applied lazily so the
    cost is O((deg u - deg v + 1) * deg v) rather than quadratic in deg u.
    """
    m, n = len(u) - 1, len(v) - 1
    lv = v[-1]
    u = list(u)
    stamp = [0] * (m + 1)
    s = 0
    unit = lv in (1, -1)
    for k in range(m - n, -1, -1):
        top = u[n + k]
        if stamp[n + k] != s:
            top *= lv ** (s - stamp[n + k])
        u[n + k] = 0
        s += 1
        if top:
            for j in range(k, n + k):
                uj = u[j]
                gap = s - 1 - stamp[j]
                if gap and uj:
                    uj *= lv**gap
                u[j] = lv * uj - top * v[j - k]
                stamp[j] = s
        elif not unit:
            for j in range(k, n + k):
                gap = s - stamp[j]
                if u[j]:
                    u[j] *= lv**gap
                stamp[j] = s
    r = u[:n]
    for j in range(n):
        gap = s - stamp[j]
        if gap and r[j]:
            r[j] *= lv**gap
    while r and r[-1] == 0:
        r.pop()
    return r


def _content(c: Sequence[int]) -> int:
    g = 0
    for v in c:
        g = gcd(g, v)
        if g == 1:
            break
    return g


def resultant(a: IntPoly | Sequence[int], b: IntPoly | Sequence[int]) -> int:
    """Res(a, b) = lc(a)^deg(b) * prod_{a(alpha)=0} b(alpha), by subresultant PRS."""
    A = list(a.coeffs if isinstance(a, IntPoly) else _trim(a))
    B = list(b.coeffs if isinstance(b, IntPoly) else _trim(b))
    if not A or not B:
        return 0
    ca, cb = _content(A), _content(B)
    t = ca ** (len(B) - 1) * cb ** (len(A) - 1)
    A = [v // ca for v in A]
    B = [v // cb for v in B]
    s = 1
    if len(A) < len(B):
        A, B = B, A
        if (len(A) - 1) % 2 and (len(B) - 1) % 2:
            s = -1
    g = h = 1
    while True:
        da, db = len(A) - 1, len(B) - 1
        if db == 0:
            # h^(1 - da) * lc(B)^da, kept integral
            lb = B[0]
            if da == 0:
                return s * t
            num = lb**da
            den = h ** (da - 1)
            return s * t * (num // den)
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        R = prem(A, B)
        if not R:
            return 0
        div = g * h**delta
        A, B = B, [v // div for v in R]
        g = A[-1]
        if delta == 0:
            h = h
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)


def sylvester_matrix(a: IntPoly, b: IntPoly) -> list[list[int]]:
    m, n = a.degree, b.degree
    size = m + n
    rows = []
    ra = list(reversed(a.coeffs))
    rb = list(reversed(b.coeffs))
    for i in range(n):
        rows.append([0] * i + ra + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + rb + [0] * (size - n - 1 - i))
    return rows


def resultant_sylvester(a: IntPoly, b: IntPoly) -> int:
    """Oracle: Bareiss determinant of the Sylvester matrix."""
    from .linalg import bareiss_det

    if a.is_zero() or b.is_zero():
        return 0
    if a.degree == 0 and b.degree == 0:
        return 1
    return bareiss_det(sylvester_matrix(a, b))


def resultant_modular(a: IntPoly, b: IntPoly) -> int:
    """Res(a, b) through residues modulo fixed 62-bit primes and CRT.

    The number of primes is fixed in advance by the Hadamard bound on the
    Sylvester matrix, ||a||_2^deg(b) * ||b||_2^deg(a).
    """
    from .linalg import crt_signed, primes_for_bound

    if a.is_zero() or b.is_zero():
        return 0
    if a.degree == 0 and b.degree == 0:
        return 1
    na = sum(v * v for v in a.coeffs)
    nb = sum(v * v for v in b.coeffs)
    # bound^2 = na^deg b * nb^deg a
    bound_sq = na**b.degree * nb**a.degree
    bound = _isqrt_ceil(bound_sq)
    residues, moduli = [], []
    for p in primes_for_bound(2 * bound + 1):
        residues.append(_resultant_mod_p(a.coeffs, b.coeffs, p))
        moduli.append(p)
    return crt_signed(residues, moduli)


def _isqrt_ceil(n: int) -> int:
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else r + 1


def _resultant_mod_p(a: Sequence[int], b: Sequence[int], p: int) -> int:
    A = [v % p for v in a]
    B = [v % p for v in b]
    while A and A[-1] == 0:
        A.pop()
    while B and B[-1] == 0:
        B.pop()
    da0, db0 = len(a) - 1, len(b) - 1
    # degree drop modulo p: Res(a,b) = lc(a)^(db0) prod b(alpha); use general Euclid
    # on the full-degree formal polynomials via the Sylvester identity.
    if len(A) - 1 != da0 or len(B) - 1 != db0:
        return _det_mod_p(sylvester_matrix(IntPoly(tuple(a)), IntPoly(tuple(b))), p)
    res = 1
    while True:
        da, db = len(A) - 1, len(B) - 1
        if db == 0:
            return res * pow(B[0], da, p) % p
        if da < db:
            A, B = B, A
            if da % 2 and db % 2:
                res = -res
            continue
        # A = Q*B + R  =>  Res(A, B) = (-1)^{da db} lc(B)^{da - dr} Res(B, R)
        inv = pow(B[-1], p - 2, p)
        R = A[:]
        for k in range(da - db, -1, -1):
            c = R[k + db] * inv % p
            if c:
                for j in range(db + 1):
                    R[k + j] = (R[k + j] - c * B[j]) % p
        R = R[:db]
        while R and R[-1] == 0:
            R.pop()
        if not R:
            return 0
        dr = len(R) - 1
        if da % 2 and db % 2:
            res = -res
        res = res * pow(B[-1], da - dr, p) % p
        A, B = B, R


def _det_mod_p(rows: list[list[int]], p: int) -> int:
    from .linalg import det_mod_p

    return det_mod_p(rows, p)
