"""Cyclic, dihedral and dicyclic groups and their integer group rings.

Elements of D_{2n} and Q_{4n} are written ``f(x) + y g(x)``; the word
``y^e x^i`` carries the coefficient of ``x^i`` in ``f`` (e = 0) or ``g``
(e = 1).  The fixed enumeration is x^0, ..., x^{m-1}, y x^0, ..., y x^{m-1}
with m = n for the dihedral group and m = 2n for the dicyclic group.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, Sequence

from .intpoly import CyclicPoly, cyclic_mul, reciprocal

__all__ = [
    "Family",
    "GroupSpec",
    "GroupWord",
    "RingElement",
    "word_mul",
    "word_inv",
    "ring_mul",
    "ring_mul_convolution",
    "to_matrix",
    "swap",
]


class Family(str, Enum):
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    DICYCLIC = "dicyclic"


@dataclass(frozen=True)
class GroupSpec:
    family: Family
    n: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"group parameter n must be a positive integer, got {self.n!r}")

    @classmethod
    def cyclic(cls, n: int) -> GroupSpec:
        return cls(Family.CYCLIC, n)

    @classmethod
    def dihedral(cls, n: int) -> GroupSpec:
        return cls(Family.DIHEDRAL, n)

    @classmethod
    def dicyclic(cls, n: int) -> GroupSpec:
        return cls(Family.DICYCLIC, n)

    @property
    def order(self) -> int:
        return {Family.CYCLIC: 1, Family.DIHEDRAL: 2, Family.DICYCLIC: 4}[self.family] * self.n

    @property
    def x_modulus(self) -> int:
        """Order of the rotation x; also the length of the f and g vectors."""
        return 2 * self.n if self.family is Family.DICYCLIC else self.n

    @property
    def has_y(self) -> bool:
        return self.family is not Family.CYCLIC

    @property
    def name(self) -> str:
        if self.family is Family.CYCLIC:
            return f"Z_{self.n}"
        if self.family is Family.DIHEDRAL:
            return f"D_{2 * self.n}"
        return f"Q_{4 * self.n}"

    def words(self) -> list[GroupWord]:
        m = self.x_modulus
        ws = [GroupWord(0, i) for i in range(m)]
        if self.has_y:
            ws += [GroupWord(1, i) for i in range(m)]
        return ws

    def index(self, w: GroupWord) -> int:
        return w.y * self.x_modulus + w.x

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, order=True)
class GroupWord:
    y: int
    x: int

    def __str__(self) -> str:
        parts = (["y"] if self.y else []) + ([f"x^{self.x}"] if self.x else [])
        return "*".join(parts) or "1"


def _canon(G: GroupSpec, w: GroupWord) -> GroupWord:
    if w.y not in (0, 1) or (w.y and not G.has_y):
        raise ValueError(f"word {w} is not in {G}")
    return GroupWord(w.y, w.x % G.x_modulus)


def word_mul(G: GroupSpec, a: GroupWord, b: GroupWord) -> GroupWord:
    """Product in canonical form y^e x^i.

    Uses x^i y = y x^{-i} and y^2 = x^n (dicyclic) or 1 (dihedral).
    """
    m = G.x_modulus
    if not b.y:
        return _canon(G, GroupWord(a.y, a.x + b.x))
    # y^a x^i . y x^j = y^{a+1} x^{j-i}
    if not a.y:
        return _canon(G, GroupWord(1, b.x - a.x))
    square = G.n if G.family is Family.DICYCLIC else 0
    return GroupWord(0, (square + b.x - a.x) % m)


def word_inv(G: GroupSpec, a: GroupWord) -> GroupWord:
    m = G.x_modulus
    if not a.y:
        return GroupWord(0, -a.x % m)
    if G.family is Family.DICYCLIC:
        return GroupWord(1, (a.x + G.n) % m)
    return GroupWord(1, a.x)


@dataclass(frozen=True)
class RingElement:
    group: GroupSpec
    f: CyclicPoly
    g: CyclicPoly | None = None

    def __post_init__(self):
        m = self.group.x_modulus
        if self.f.N != m:
            raise ValueError(f"f has modulus {self.f.N}, expected {m}")
        if self.group.has_y:
            if self.g is None:
                object.__setattr__(self, "g", CyclicPoly.zero(m))
            elif self.g.N != m:
                raise ValueError(f"g has modulus {self.g.N}, expected {m}")
        elif self.g is not None:
            if not self.g.is_zero():
                raise ValueError("cyclic group elements have no y-part")
            object.__setattr__(self, "g", None)

    @classmethod
    def from_coeffs(cls, G: GroupSpec, f: Sequence[int], g: Sequence[int] = ()) -> RingElement:
        m = G.x_modulus
        if not G.has_y and any(g):
            raise ValueError("cyclic group elements have no y-part")
        return cls(G, CyclicPoly.from_coeffs(m, f), CyclicPoly.from_coeffs(m, g) if G.has_y else None)

    @classmethod
    def from_vector(cls, G: GroupSpec, vec: Sequence[int]) -> RingElement:
        """Build from coefficients listed in the fixed word enumeration."""
        m = G.x_modulus
        if len(vec) != G.order:
            raise ValueError(f"expected {G.order} coefficients, got {len(vec)}")
        return cls.from_coeffs(G, vec[:m], vec[m:])

    @classmethod
    def identity(cls, G: GroupSpec) -> RingElement:
        return cls.from_coeffs(G, [1])

    @classmethod
    def word(cls, G: GroupSpec, w: GroupWord, c: int = 1) -> RingElement:
        m = G.x_modulus
        mono = CyclicPoly.monomial(m, w.x, c)
        if w.y:
            if not G.has_y:
                raise ValueError(f"{G} has no y")
            return cls(G, CyclicPoly.zero(m), mono)
        return cls(G, mono)

    def vector(self) -> tuple[int, ...]:
        return self.f.coeffs + (self.g.coeffs if self.g is not None else ())

    def coefficient(self, w: GroupWord) -> int:
        return (self.g if w.y else self.f).coeffs[w.x]

    def terms(self) -> Iterator[tuple[GroupWord, int]]:
        for i, c in enumerate(self.f.coeffs):
            if c:
                yield GroupWord(0, i), c
        if self.g is not None:
            for i, c in enumerate(self.g.coeffs):
                if c:
                    yield GroupWord(1, i), c

    def _check(self, other: RingElement) -> None:
        if self.group != other.group:
            raise ValueError(f"group mismatch: {self.group} vs {other.group}")

    def __add__(self, other: RingElement) -> RingElement:
        self._check(other)
        g = self.g + other.g if self.g is not None else None
        return RingElement(self.group, self.f + other.f, g)

    def __neg__(self) -> RingElement:
        return RingElement(self.group, -self.f, -self.g if self.g is not None else None)

    def __sub__(self, other: RingElement) -> RingElement:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(self.group, self.f * other, self.g * other if self.g is not None else None)
        return ring_mul(self, other)

    def __rmul__(self, other: int) -> RingElement:
        return self * other

    def __pow__(self, k: int) -> RingElement:
        if k < 0:
            raise ValueError("negative power")
        result, base = RingElement.identity(self.group), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    """Product in Z[G].

    (f1 + y g1)(f2 + y g2) = f1 f2 + s(x) g1~ g2 + y (f1~ g2 + g1 f2), where
    h~ is h(x^{-1}) and s(x) = x^n (dicyclic) or 1 (dihedral).
    """
    a._check(b)
    G = a.group
    if not G.has_y:
        return RingElement(G, cyclic_mul(a.f, b.f))
    yy = cyclic_mul(reciprocal(a.g), b.g)
    if G.family is Family.DICYCLIC:
        yy = yy.shift(G.n)
    f = cyclic_mul(a.f, b.f) + yy
    g = cyclic_mul(reciprocal(a.f), b.g) + cyclic_mul(a.g, b.f)
    return RingElement(G, f, g)


def ring_mul_convolution(a: RingElement, b: RingElement) -> RingElement:
    """Reference product c_w = sum_{uv = w} a_u b_v over explicit words."""
    a._check(b)
    G = a.group
    acc = [0] * G.order
    bt = list(b.terms())
    for u, cu in a.terms():
        for v, cv in bt:
            acc[G.index(word_mul(G, u, v))] += cu * cv
    return RingElement.from_vector(G, acc)


@lru_cache(maxsize=64)
def _matrix_index(G: GroupSpec) -> tuple[tuple[int, ...], ...]:
    ws = G.words()
    inv = [word_inv(G, w) for w in ws]
    return tuple(tuple(G.index(word_mul(G, wi, wj)) for wj in inv) for wi in ws)


def to_matrix(a: RingElement) -> list[list[int]]:
    """Matrix with (i, j) entry equal to the coefficient of g_i g_j^{-1}."""
    vec = a.vector()
    return [[vec[k] for k in row] for row in _matrix_index(a.group)]


def swap(a: RingElement) -> RingElement:
    """f + y g  ->  g + y f."""
    if not a.group.has_y:
        raise ValueError("swap needs a y-part")
    return RingElement(a.group, a.g, a.f)
