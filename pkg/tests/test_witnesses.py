from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gdet.arith import VerificationError, valuation
from gdet.detengine import det_exact
from gdet.groupring import GroupSpec, RingElement
from gdet.laws import Status, classify
from gdet.witnesses import (
    Witness,
    witness_basic,
    witness_coprime,
    witness_divisibility_sharpness,
    witness_prime,
    witness_Q4p_cube,
    witness_Q4p_frontier,
    witness_Q4p_p_powers,
    witness_Q4p_two_powers,
)

Q = GroupSpec.dicyclic
PRIMES = (3, 5, 7, 11, 13)


def test_sixteen_in_q12():
    w = witness_basic(Q(3), "sixteen")
    assert w.claimed == 16
    assert w.element.f.coeffs == (1, 0, 1, 0, 0, 0) and not any(w.element.g.coeffs)


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_two_n_minus_one(n):
    w = witness_basic(Q(n), "two_n_minus_one")
    assert w.claimed == det_exact(w.element) == 2 * n - 1


def test_two_n_minus_one_element_in_q12():
    # 1 + (x^3+1)x + y (x^3+1)x
    w = witness_basic(Q(3), "two_n_minus_one")
    assert w.element.f.coeffs == (1, 1, 0, 0, 1, 0)
    assert w.element.g.coeffs == (0, 1, 0, 0, 1, 0)


def test_trivial_q8():
    assert witness_basic(Q(2), "trivial").claimed == -7


@pytest.mark.parametrize("n,want", [(1, 16), (2, 256), (3, 16), (4, 65536), (6, 256)])
def test_crude2(n, want):
    assert witness_basic(Q(n), "crude2").claimed == want


def test_parity_preconditions():
    with pytest.raises(ValueError):
        witness_basic(Q(2), "sixteen")
    with pytest.raises(ValueError):
        witness_basic(Q(4), "two_n_minus_one")


@pytest.mark.parametrize("n", [3, 5, 7, 9, 15])
def test_prime_witness_grid(n):
    ps = [p for p in (3, 5, 7, 11, 13, 17, 19) if n % p][:3]
    for p in ps:
        w = witness_prime(n, p)
        delta = 1 if p % 4 == 1 else -1
        assert w.claimed == delta * p == det_exact(w.element)


@pytest.mark.parametrize("n,p", [(3, 5), (3, 7), (5, 3), (9, 11), (15, 7)])
def test_exponent_representative_does_not_matter(n, p):
    # a_i and a_i + n give the same determinant
    assert det_exact(witness_prime(n, p, shift=1).element) == witness_prime(n, p).claimed


@pytest.mark.parametrize("n,p", [(3, 7), (5, 11), (3, 13)])
def test_degenerate_h_factor(n, p):
    # p = 1 mod n makes the odd inverse 1, so (x^m+1)/(x+1) = 1
    w = witness_prime(n, p)
    assert w.params["m"] == 1
    assert det_exact(w.element) == w.claimed


def test_coprime_examples():
    assert witness_coprime(3, 5).claimed == 5
    w = witness_coprime(3, 1)
    assert w.element == RingElement.identity(Q(3))
    assert det_exact(witness_coprime(5, -21).element) == -21


@given(st.sampled_from([3, 5, 7, 9, 15]), st.integers(-400, 400))
def test_coprime_any_unit(n, m):
    if gcd(m, 2 * n) != 1:
        with pytest.raises(ValueError):
            witness_coprime(n, m, checked=False)
        return
    w = witness_coprime(n, m)
    assert w.claimed == m and gcd(det_exact(w.element), 2 * n) == 1


def test_coprime_errors():
    with pytest.raises(ValueError):
        witness_coprime(4, 5)
    with pytest.raises(ValueError):
        witness_coprime(3, 6)


@pytest.mark.parametrize("p", PRIMES)
def test_two_powers(p):
    for k in (4, 6, 7, 9, 10, 11, 12, 13):
        assert witness_Q4p_two_powers(p, k).claimed == 2**k
    for k in (1, 2, 3, 5):
        with pytest.raises(ValueError):
            witness_Q4p_two_powers(p, k)


def test_two_power_examples():
    w = witness_Q4p_two_powers(3, 7)
    # g = x^3 + 1, f = x^4 + 1 + (x^3+1)(x^2+x), folded mod x^6 - 1
    assert w.element.g.coeffs == (1, 0, 0, 1, 0, 0)
    assert w.element.f.coeffs == (1, 1, 1, 0, 2, 1)
    assert witness_Q4p_two_powers(5, 10).params["parts"] == [4, 6]


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("m", range(-2, 3))
def test_cube_family(p, m):
    w = witness_Q4p_cube(p, m)
    delta = 1 if p % 4 == 1 else -1
    assert w.claimed == delta * p**3 * (1 + 4 * m)


@pytest.mark.parametrize("p,ell,sign,want,m", [(3, 3, -1, -27, 0), (3, 4, 1, 81, -1), (5, 4, 1, 625, 1)])
def test_p_power_examples(p, ell, sign, want, m):
    w = witness_Q4p_p_powers(p, ell, sign)
    assert w.claimed == want and w.params["m"] == m


@pytest.mark.parametrize("p", PRIMES)
def test_p_powers_both_signs(p):
    for ell in range(3, 8):
        for s in (1, -1):
            assert witness_Q4p_p_powers(p, ell, s).claimed == s * p**ell
    with pytest.raises(ValueError):
        witness_Q4p_p_powers(p, 2)


def test_frontier_examples():
    w = witness_Q4p_frontier(3, "half_p2plus1_2_5")
    assert w.claimed == 160
    assert w.element.f.coeffs == (1, 0, 1, 0, 0, 0)
    assert witness_Q4p_frontier(3, "neg_2_5_p_2tplus4", t=0).claimed == -2592
    assert witness_Q4p_frontier(5, "p5_sum_of_squares", A=1, B=3).claimed == 100000
    assert witness_Q4p_frontier(5, "p5_special").claimed == -4000


@pytest.mark.parametrize("p", PRIMES)
def test_frontier_grid(p):
    half = (p * p + 1) // 2
    assert witness_Q4p_frontier(p, "half_p2plus1_2_5").claimed == half * 32
    for t in (0, 1):
        assert witness_Q4p_frontier(p, "neg_2_5_p_2tplus4", t=t).claimed == -(2**5) * p ** (2 * t + 4)
    for mu in (1, 2):
        assert witness_Q4p_frontier(p, "neg_half_2_4_p3_mu", mu=mu).claimed == -half * 16 * p**3 * mu


def test_frontier_preconditions():
    with pytest.raises(ValueError):
        witness_Q4p_frontier(7, "p5_sum_of_squares")
    with pytest.raises(ValueError):
        witness_Q4p_frontier(13, "p5_special")
    with pytest.raises(ValueError):
        witness_Q4p_frontier(5, "p5_sum_of_squares", A=2, B=2)
    assert witness_Q4p_frontier(13, "p5_sum_of_squares").claimed == 2**5 * 13**5


def test_q4p_witnesses_classify_in():
    for p in PRIMES:
        vals = [witness_Q4p_two_powers(p, k).claimed for k in (4, 6, 7, 9)]
        vals += [witness_Q4p_cube(p, m).claimed for m in range(-2, 3)]
        vals += [witness_Q4p_p_powers(p, 4, s).claimed for s in (1, -1)]
        vals += [witness_Q4p_frontier(p, "half_p2plus1_2_5").claimed]
        vals += [witness_Q4p_frontier(p, "neg_2_5_p_2tplus4", t=t).claimed for t in (0, 1)]
        vals += [witness_Q4p_frontier(p, "neg_half_2_4_p3_mu", mu=mu).claimed for mu in (1, 2, 3)]
        if p % 4 == 1:
            vals.append(witness_Q4p_frontier(p, "p5_sum_of_squares").claimed)
        if p == 5:
            vals.append(witness_Q4p_frontier(p, "p5_special").claimed)
        for v in vals:
            assert classify("Q4p", v, p).status is Status.IN, (p, v)


def test_sharpness_examples():
    w = witness_divisibility_sharpness(Q(9), "odd_p_dicyclic")
    assert w.valuation == (3, 5) and valuation(3, w.claimed) == 5
    w = witness_divisibility_sharpness(Q(3), "two_power_dicyclic", m=1)
    assert w.claimed == 112
    assert witness_divisibility_sharpness(GroupSpec.cyclic(6), "cyclic_n_sq").claimed == 36


@pytest.mark.parametrize("n", [4, 6, 9, 12, 15])
def test_cyclic_n_squared(n):
    assert witness_divisibility_sharpness(GroupSpec.cyclic(n), "cyclic_n_sq").claimed == n * n


@pytest.mark.parametrize("n", [2, 4, 6, 8, 3, 5, 9])
def test_cyclic_n_squared_bare_element_sign(n):
    # without the extra unit x the element has determinant (-1)^(n-1) n^2
    G = GroupSpec.cyclic(n)
    f = [0] * n
    f[0], f[1] = -1, 1
    f = [c + 1 for c in f]
    assert det_exact(RingElement.from_coeffs(G, f)) == (-1) ** (n - 1) * n * n


@pytest.mark.parametrize("n", [9, 27, 6, 12])
def test_sharpness_valuations(n):
    alpha2 = valuation(2, n)
    alpha3 = valuation(3, n)
    w = witness_divisibility_sharpness(GroupSpec.cyclic(n), "cyclic_p_shift")
    assert valuation(3, det_exact(w.element)) == alpha3 + 1
    w = witness_divisibility_sharpness(Q(n), "odd_p_dicyclic")
    assert valuation(3, det_exact(w.element)) == 2 * alpha3 + 1
    for m in (-1, 0, 1, 2):
        w = witness_divisibility_sharpness(Q(n), "two_power_dicyclic", m=m)
        assert w.claimed == 2 ** (2 ** (alpha2 + 2)) * (1 + 2 * m * n)
    if alpha2:
        w = witness_divisibility_sharpness(GroupSpec.cyclic(n), "cyclic_4_shift")
        assert valuation(2, det_exact(w.element)) == alpha2 + 2
        w = witness_divisibility_sharpness(Q(n), "four_x_minus_1")
        assert valuation(2, det_exact(w.element)) == 2 * alpha2 + 6


def test_sharpness_preconditions():
    with pytest.raises(ValueError):
        witness_divisibility_sharpness(Q(9), "four_x_minus_1")
    with pytest.raises(ValueError):
        witness_divisibility_sharpness(Q(4), "odd_p_dicyclic")
    with pytest.raises(ValueError):
        witness_divisibility_sharpness(GroupSpec.cyclic(9), "cyclic_4_shift")
    with pytest.raises(ValueError):
        witness_divisibility_sharpness(Q(3), "cyclic_n_sq")


def test_checked_mode_catches_bad_claim():
    w = witness_basic(Q(3), "sixteen")
    bad = Witness(w.element, 17, "x^2+1")
    with pytest.raises(VerificationError):
        bad.verify()
    bad_val = Witness(w.element, 16, "x^2+1", {}, (2, 3))
    with pytest.raises(VerificationError):
        bad_val.verify()
