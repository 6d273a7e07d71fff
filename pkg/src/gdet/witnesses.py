"""Explicit group-ring elements with known determinants.

Each constructor returns a :class:`Witness`; in checked mode (the default)
the determinant is recomputed with :func:`det_exact` and a mismatch raises
:class:`VerificationError`.  Polynomials are built over Z[x] and folded
mod x^N - 1 at the end, so high-degree constructions are fine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt

from sympy import factorint

from .arith import VerificationError, is_odd_prime, odd_prime_factors, valuation
from .detengine import det_exact
from .groupring import Family, GroupSpec, RingElement, ring_mul, swap
from .intpoly import IntPoly, all_ones, cyclotomic

__all__ = [
    "Witness",
    "witness_basic",
    "witness_coprime",
    "witness_prime",
    "witness_Q4p_two_powers",
    "witness_Q4p_cube",
    "witness_Q4p_p_powers",
    "witness_Q4p_frontier",
    "witness_divisibility_sharpness",
    "BASIC_KINDS",
    "FRONTIER_KINDS",
    "SHARPNESS_CASES",
]

X = IntPoly((0, 1))
ONE = IntPoly((1,))

BASIC_KINDS = ("trivial", "sixteen", "two_n_minus_one", "crude2")
FRONTIER_KINDS = (
    "half_p2plus1_2_5",
    "neg_2_5_p_2tplus4",
    "neg_half_2_4_p3_mu",
    "p5_sum_of_squares",
    "p5_special",
)
SHARPNESS_CASES = (
    "odd_p_dicyclic",
    "two_power_dicyclic",
    "four_x_minus_1",
    "cyclic_n_sq",
    "cyclic_p_shift",
    "cyclic_4_shift",
)


@dataclass(frozen=True)
class Witness:
    element: RingElement
    claimed: int
    anchor: str
    params: dict = field(default_factory=dict)
    # (prime, exponent) when the construction asserts p^e || det
    valuation: tuple[int, int] | None = None

    @property
    def group(self) -> GroupSpec:
        return self.element.group

    def verify(self) -> int:
        det = det_exact(self.element)
        if det != self.claimed:
            raise VerificationError(
                f"{self.anchor} on {self.group}: claimed {self.claimed}, recomputed {det}"
            )
        if self.valuation is not None:
            p, e = self.valuation
            got = valuation(p, det)
            if got != e:
                raise VerificationError(
                    f"{self.anchor} on {self.group}: expected {p}^{e} || det, found exponent {got}"
                )
        return det


def _finish(w: Witness, checked: bool) -> Witness:
    if checked:
        w.verify()
    return w


def _elem(G: GroupSpec, f: IntPoly, g: IntPoly | None = None) -> RingElement:
    return RingElement.from_coeffs(G, f.coeffs, g.coeffs if g is not None else ())


def _xp(k: int) -> IntPoly:
    return IntPoly.monomial(k)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _dicyclic(G: GroupSpec) -> None:
    _require(G.family is Family.DICYCLIC, f"{G} is not dicyclic")


def _alt_ones(m: int) -> IntPoly:
    """(x^m + 1)/(x + 1) = 1 - x + x^2 - ... + x^{m-1} for odd m."""
    return IntPoly(tuple(-1 if j % 2 else 1 for j in range(m)))


# -- basic constructions --------------------------------------------------------


def witness_basic(G: GroupSpec, kind: str, checked: bool = True) -> Witness:
    n = G.n
    if kind == "trivial":
        vec = [0] + [1] * (G.order - 1)
        claimed = (-1) ** (G.order - 1) * (G.order - 1)
        return _finish(Witness(RingElement.from_vector(G, vec), claimed, "trivial-bound"), checked)
    _dicyclic(G)
    if kind == "sixteen":
        _require(n % 2 == 1, "sixteen needs n odd")
        return _finish(Witness(_elem(G, _xp(2) + ONE), 16, "x^2+1"), checked)
    if kind == "two_n_minus_one":
        _require(n % 2 == 1, "two_n_minus_one needs n odd")
        _require(n >= 3, "two_n_minus_one needs n >= 3")
        s = (_xp(n) + ONE) * IntPoly((0,) + (1,) * ((n - 1) // 2))
        return _finish(Witness(_elem(G, ONE + s, s), 2 * n - 1, "2n-1"), checked)
    if kind == "crude2":
        t = valuation(2, n)
        f = _xp(2 ** (t + 1)) + ONE
        return _finish(Witness(_elem(G, f), 2 ** (2 ** (t + 2)), "x^(2^(t+1))+1", {"t": t}), checked)
    raise ValueError(f"unknown basic witness kind {kind!r}")


# -- values coprime to 2n (n odd) ------------------------------------------------


def _achieve_parts(n: int, p: int, shift: int = 0):
    delta = 1 if p % 4 == 1 else -1
    t = (p - delta) // 4
    inv = pow(p, -1, n)
    m = inv if inv % 2 else inv + n
    first = 1 if delta == 1 else 0
    residues = list(range(first, (p - 3) // 2 + 1, 2))
    assert len(residues) == t, (p, residues, t)
    exps = [(r * inv) % n + shift * n for r in residues]
    return delta, t, m, residues, exps


def witness_prime(n: int, p: int, checked: bool = True, shift: int = 0) -> Witness:
    """Element of Q_{4n} (n odd, p odd prime not dividing n) with determinant +-p.

    The sign is delta = p mod 4 in {1, -1}.  ``shift`` adds shift*n to every
    exponent a_i; the determinant does not depend on the representative.
    """
    _require(n % 2 == 1 and n >= 3, "n must be odd and >= 3")
    _require(is_odd_prime(p) and n % p, f"p={p} must be an odd prime not dividing n={n}")
    G = GroupSpec.dicyclic(n)
    delta, t, m, residues, exps = _achieve_parts(n, p, shift)
    H = _alt_ones(m) * IntPoly.from_terms(_count(exps))
    s = (_xp(n) + ONE) * H
    params = {"p": p, "delta": delta, "t": t, "m": m, "a": exps}
    return _finish(Witness(_elem(G, IntPoly((delta,)) + s, s), delta * p, "coprime-prime", params), checked)


def _count(exps: list[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for a in exps:
        out[a] = out.get(a, 0) + 1
    return out


def witness_coprime(n: int, m: int, checked: bool = True) -> Witness:
    """Element of Q_{4n}, n odd, with determinant exactly m where gcd(m, 2n) = 1."""
    _require(n % 2 == 1 and n >= 3, f"n must be odd and >= 3, got {n}")
    _require(gcd(m, 2 * n) == 1, f"gcd({m}, {2 * n}) != 1")
    G = GroupSpec.dicyclic(n)
    elem = RingElement.identity(G)
    value = 1
    factors = factorint(abs(m))
    for p, e in sorted(factors.items()):
        w = witness_prime(n, p, checked=False)
        for _ in range(e):
            elem = ring_mul(elem, w.element)
            value *= w.claimed
    swapped = value != m
    if swapped:
        elem = swap(elem)
    params = {"m": m, "factors": {int(p): int(e) for p, e in factors.items()}, "swapped": swapped}
    return _finish(Witness(elem, m, "coprime", params), checked)


# -- Q_{4p} constructions ----------------------------------------------------------


def _q4p(p: int) -> GroupSpec:
    _require(is_odd_prime(p), f"p={p} must be an odd prime")
    return GroupSpec.dicyclic(p)


def _two_power_base(p: int, k: int) -> RingElement:
    G = GroupSpec.dicyclic(p)
    xp1 = _xp(p) + ONE
    if k == 4:
        return _elem(G, _xp(2) + ONE)
    if k == 6:
        return _elem(G, _xp(2) + ONE + xp1 * X)
    if k == 7:
        return _elem(G, _xp(4) + ONE + xp1 * (_xp(2) + X), xp1)
    if k == 9:
        return _elem(G, (_xp(4) + ONE) * (_xp(2) + ONE) + _xp(2) * xp1, xp1)
    raise AssertionError(k)


def _two_power_split(k: int) -> list[int]:
    parts = []
    while k > 9:
        parts.append(4)
        k -= 4
    parts += [4, 4] if k == 8 else [k]
    return parts


def witness_Q4p_two_powers(p: int, k: int, checked: bool = True) -> Witness:
    """Element of Q_{4p} with determinant 2^k, k = 4 or k >= 6."""
    G = _q4p(p)
    _require(k == 4 or k >= 6, f"2^{k} is not a determinant of Q_{4 * p} (need k = 4 or k >= 6)")
    parts = _two_power_split(k)
    elem = RingElement.identity(G)
    for part in parts:
        elem = ring_mul(elem, _two_power_base(p, part))
    return _finish(Witness(elem, 2**k, "q4p-two-power", {"p": p, "k": k, "parts": parts}), checked)


def _cube_element(p: int, m: int) -> tuple[RingElement, int]:
    delta = 1 if p % 4 == 1 else -1
    b = (p - delta) // 4
    h = all_ones(2 * p)
    f = all_ones(2 * b + delta) + h * m
    g = (_xp(p) + ONE) * all_ones(b) + h * m
    return _elem(_q4p(p), f, g), delta


def witness_Q4p_cube(p: int, m: int, checked: bool = True) -> Witness:
    """Element of Q_{4p} with determinant delta p^3 (1 + 4m), p = delta mod 4."""
    elem, delta = _cube_element(p, m)
    params = {"p": p, "m": m, "delta": delta}
    return _finish(Witness(elem, delta * p**3 * (1 + 4 * m), "q4p-p^3(1+4m)", params), checked)


def witness_Q4p_p_powers(p: int, ell: int, sign: int = 1, checked: bool = True) -> Witness:
    """Element of Q_{4p} with determinant sign * p^ell, ell >= 3."""
    _q4p(p)
    _require(ell >= 3, f"p^{ell} is not a determinant of Q_{4 * p} (need ell >= 3)")
    _require(sign in (1, -1), "sign must be +-1")
    q = p ** (ell - 3)
    e = 1 if q % 4 == 1 else -1
    m = (e * q - 1) // 4
    elem, delta = _cube_element(p, m)
    swapped = delta * e != sign
    if swapped:
        elem = swap(elem)
    params = {"p": p, "ell": ell, "m": m, "delta": delta, "swapped": swapped}
    return _finish(Witness(elem, sign * p**ell, "q4p-p-power", params), checked)


def _sum_of_two_squares(n: int) -> tuple[int, int]:
    for A in range(1, isqrt(n) + 1):
        B2 = n - A * A
        B = isqrt(B2)
        if B * B == B2:
            return A, B
    raise ValueError(f"{n} is not a sum of two squares")


def witness_Q4p_frontier(
    p: int,
    kind: str,
    t: int = 0,
    mu: int = 1,
    A: int | None = None,
    B: int | None = None,
    checked: bool = True,
) -> Witness:
    """Constructions for determinants with 2^5 exactly dividing them."""
    G = _q4p(p)
    h = all_ones(2 * p)
    phi_sq = cyclotomic(p).compose_power(2)
    half = (p * p + 1) // 2
    if kind == "half_p2plus1_2_5":
        elem = _elem(G, ONE + _xp(2), (X - ONE) * phi_sq)
        return _finish(Witness(elem, half * 2**5, "q4p-half-2^5", {"p": p}), checked)
    if kind == "neg_2_5_p_2tplus4":
        _require(t >= 0, "t must be >= 0")
        core = phi_sq**(t + 1) * 2 - h * p**t
        elem = _elem(G, ONE - _xp(2) + core, _xp(p) + ONE + core)
        return _finish(Witness(elem, -(2**5) * p ** (2 * t + 4), "q4p-2^5-p^(2t+4)", {"p": p, "t": t}), checked)
    if kind == "neg_half_2_4_p3_mu":
        _require(mu >= 1, "mu must be >= 1")
        elem = _elem(G, h * mu - ONE, cyclotomic(p).compose_neg() + h * mu)
        return _finish(Witness(elem, -half * 2**4 * p**3 * mu, "q4p-half-2^4-p^3", {"p": p, "mu": mu}), checked)
    if kind == "p5_sum_of_squares":
        _require(p % 4 == 1, "p5_sum_of_squares needs p = 1 mod 4")
        if A is None or B is None:
            A, B = _sum_of_two_squares(2 * p)
        _require(A * A + B * B == 2 * p, f"{A}^2 + {B}^2 != 2p")
        core = (_xp(p) - ONE) * phi_sq
        elem = _elem(G, ONE + X + core * A, core * B)
        return _finish(Witness(elem, 2**5 * p**5, "q4p-2^5-p^5", {"p": p, "A": A, "B": B}), checked)
    if kind == "p5_special":
        _require(p == 5, "p5_special is specific to p = 5")
        xp1 = _xp(p) + ONE
        elem = _elem(G, ONE - X + _xp(2) + xp1 * X, ONE + xp1 * (X + _xp(2)))
        return _finish(Witness(elem, -(2**5) * p**3, "q4p-2^5-p^3", {"p": p}), checked)
    raise ValueError(f"unknown frontier kind {kind!r}")


# -- sharpness of the divisibility laws -------------------------------------------


def witness_divisibility_sharpness(
    G: GroupSpec, case: str, p: int | None = None, m: int = 1, checked: bool = True
) -> Witness:
    """Elements whose determinants attain the exponents in the divisibility laws.

    ``valuation`` on the result holds the exact prime power asserted.  Where a
    closed form for the whole determinant is known it is the claim; otherwise
    the claim is the computed value and only the valuation is asserted.
    """
    n = G.n
    N = G.x_modulus

    def pick_odd_p():
        ps = odd_prime_factors(n)
        _require(bool(ps), f"n={n} has no odd prime factor")
        if p is None:
            return ps[0]
        _require(p in ps, f"p={p} does not divide n={n}")
        return p

    if case in ("odd_p_dicyclic", "two_power_dicyclic", "four_x_minus_1"):
        _dicyclic(G)
    elif case in ("cyclic_n_sq", "cyclic_p_shift", "cyclic_4_shift"):
        _require(G.family is Family.CYCLIC, f"{case} needs a cyclic group")
    else:
        raise ValueError(f"unknown sharpness case {case!r}")

    xn1 = _xp(n) + ONE
    if case == "odd_p_dicyclic":
        q = pick_odd_p()
        alpha = valuation(q, n)
        elem = _elem(G, ONE - xn1 * (ONE - X), xn1 * ((q - 1) // 2))
        w = Witness(elem, det_exact(elem), "sharp-odd-p", {"p": q, "alpha": alpha}, (q, 2 * alpha + 1))
    elif case == "two_power_dicyclic":
        alpha = valuation(2, n)
        h = all_ones(N)
        elem = _elem(G, _xp(2 ** (alpha + 1)) + ONE + h * m, h * m)
        claimed = 2 ** (2 ** (alpha + 2)) * (1 + 2 * m * n)
        w = Witness(elem, claimed, "sharp-two-power", {"alpha": alpha, "m": m}, (2, 2 ** (alpha + 2)))
    elif case == "four_x_minus_1":
        alpha = valuation(2, n)
        _require(alpha >= 1, "four_x_minus_1 needs n even")
        elem = _elem(G, X + IntPoly((3,)))
        claimed = (3**N - 1) ** 2
        w = Witness(elem, claimed, "sharp-4+(x-1)", {"alpha": alpha}, (2, 2 * alpha + 6))
    elif case == "cyclic_n_sq":
        base = X - ONE + all_ones(n)
        # the bare element has determinant (-1)^(n-1) n^2; the unit x has
        # determinant (-1)^(n-1), so one extra factor of x lands on +n^2
        unit = n % 2 == 0
        elem = _elem(G, base * X if unit else base)
        w = Witness(elem, n * n, "cyclic-n^2", {"n": n, "unit_x": int(unit)})
    elif case == "cyclic_p_shift":
        q = pick_odd_p()
        alpha = valuation(q, n)
        elem = _elem(G, X + IntPoly((q - 1,)))
        claimed = (q - 1) ** n - (-1) ** n
        w = Witness(elem, claimed, "cyclic-p+(x-1)", {"p": q, "alpha": alpha}, (q, alpha + 1))
    else:
        alpha = valuation(2, n)
        _require(alpha >= 1, "cyclic_4_shift needs n even")
        elem = _elem(G, X + IntPoly((3,)))
        claimed = 3**n - (-1) ** n
        w = Witness(elem, claimed, "cyclic-4+(x-1)", {"alpha": alpha}, (2, alpha + 2))
    return _finish(w, checked)
