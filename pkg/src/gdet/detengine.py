"""Integer group determinants, computed two independent ways.

The factored route reduces an element to its measure polynomial B(x) and
takes the product of B over the N-th roots of unity as a resultant; the
matrix route builds the |G| x |G| group matrix and eliminates.  The matrix
route is the reference.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groupring import Family, RingElement, to_matrix
from .intpoly import CyclicPoly, IntPoly, cyclic_mul, cyclotomic, divisors, reciprocal, resultant
from .linalg import bareiss_det, crt_det

__all__ = [
    "FactoredDeterminant",
    "measure_poly",
    "root_poly",
    "det_exact",
    "det_factored",
    "det_matrix_oracle",
    "is_square",
]

# below this N the undivided resultant against x^N - 1 is always cheap
_DIRECT_N = 64


@dataclass(frozen=True)
class FactoredDeterminant:
    total: int
    parts: dict[int, int] = field(default_factory=dict)

    def product(self) -> int:
        out = 1
        for v in self.parts.values():
            out *= v
        return out


def measure_poly(a: RingElement) -> CyclicPoly:
    """B(x) = f f~ - s(x) g g~ with s = x^n (dicyclic) or 1 (dihedral)."""
    G = a.group
    if G.family is Family.CYCLIC:
        raise ValueError("cyclic elements have no measure polynomial; use the f-part")
    ff = cyclic_mul(a.f, reciprocal(a.f))
    gg = cyclic_mul(a.g, reciprocal(a.g))
    if G.family is Family.DICYCLIC:
        gg = gg.shift(G.n)
    return ff - gg


def root_poly(a: RingElement) -> CyclicPoly:
    """The polynomial whose product over the x-modulus roots of unity is det(a)."""
    return a.f if a.group.family is Family.CYCLIC else measure_poly(a)


def _compact(B: CyclicPoly) -> tuple[int, list[int]]:
    """Rotate B so its support is an initial segment: B = x^start * C on roots of unity."""
    N = B.N
    support = [i for i, c in enumerate(B.coeffs) if c]
    if len(support) == 1:
        return support[0], [B.coeffs[support[0]]]
    best_gap, start = support[0] + N - support[-1], support[0]
    for lo, hi in zip(support, support[1:]):
        if hi - lo > best_gap:
            best_gap, start = hi - lo, hi
    span = N - best_gap
    c = B.coeffs
    return start, [c[(start + j) % N] for j in range(span + 1)]


def _fold(c: list[int], d: int) -> list[int]:
    if len(c) <= d:
        return c
    out = [0] * d
    for i, v in enumerate(c):
        out[i % d] += v
    return out


def _primitive_part(start: int, C: list[int], d: int) -> int:
    # prod over primitive d-th roots alpha of alpha^start * C(alpha)
    r = resultant(cyclotomic(d), _fold(C, d))
    if d == 2 and start % 2:
        r = -r
    return r


def _root_product(B: CyclicPoly) -> int:
    if B.is_zero():
        return 0
    N = B.N
    start, C = _compact(B)
    if N <= _DIRECT_N or len(C) - 1 <= N // 2:
        # the product of all N-th roots of unity is (-1)^(N-1)
        sign = -1 if (start * (N - 1)) % 2 else 1
        xN = IntPoly.monomial(N) - IntPoly((1,))
        return sign * resultant(xN, C)
    total = 1
    for d in divisors(N):
        total *= _primitive_part(start, C, d)
        if total == 0:
            return 0
    return total


def det_exact(a: RingElement) -> int:
    """Group determinant as the product of B over the roots of x^N - 1."""
    return _root_product(root_poly(a))


def det_factored(a: RingElement) -> FactoredDeterminant:
    """Per-divisor components M_d = Res(Phi_d, B) for d | N."""
    B = root_poly(a)
    N = B.N
    if B.is_zero():
        return FactoredDeterminant(0, {d: 0 for d in divisors(N)})
    start, C = _compact(B)
    parts = {d: _primitive_part(start, C, d) for d in divisors(N)}
    total = 1
    for v in parts.values():
        total *= v
    return FactoredDeterminant(total, parts)


def det_matrix_oracle(a: RingElement, method: str = "bareiss") -> int:
    """Determinant of the explicit group matrix."""
    rows = to_matrix(a)
    if method == "bareiss":
        return bareiss_det(rows)
    if method == "crt":
        return crt_det(rows)
    raise ValueError(f"unknown method {method!r}")


def is_square(v: int) -> bool:
    from math import isqrt

    return v >= 0 and isqrt(v) ** 2 == v
