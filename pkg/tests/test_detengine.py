from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gdet.detengine import det_exact, det_factored, det_matrix_oracle, is_square, measure_poly, root_poly
from gdet.groupring import Family, GroupSpec, RingElement
from gdet.intpoly import IntPoly, resultant_modular
from strategies import elements


def test_x2_plus_1_in_q12():
    G = GroupSpec.dicyclic(3)
    a = RingElement.from_coeffs(G, [1, 0, 1])
    assert measure_poly(a).coeffs == (2, 0, 1, 0, 1, 0)
    assert det_exact(a) == 16
    fd = det_factored(a)
    assert fd.parts == {1: 4, 2: 4, 3: 1, 6: 1}
    assert fd.total == fd.product() == 16


@pytest.mark.parametrize("G", [GroupSpec(f, n) for f in Family for n in (1, 2, 3, 4, 5)])
def test_trivial_element(G):
    a = RingElement.from_vector(G, [0] + [1] * (G.order - 1))
    assert det_exact(a) == (-1) ** (G.order - 1) * (G.order - 1)


def test_frozen_matrix_values():
    # computed with the Bareiss and CRT matrix routes
    cases = [
        (GroupSpec.dicyclic(6), [3, -1, 4, 1, -5, 9, 2, -6, 5, 3, -5, 8, 9, -7, 9, 3, 2, -3, 8, 4, -6, 2, 6, 4],
         249474479770463973725700000000),
        (GroupSpec.dihedral(5), [2, 7, -1, 8, 2, 8, -1, 8, 2, 8], -17482381),
        (GroupSpec.cyclic(9), [1, -4, 1, 4, 2, 1, 3, 5, 6], 12355225),
    ]
    for G, vec, want in cases:
        assert det_exact(RingElement.from_vector(G, vec)) == want


@given(elements(bound=5, max_n=6))
def test_engine_matches_bareiss(a):
    assert det_exact(a) == det_matrix_oracle(a)


@given(elements(bound=3, max_n=4))
def test_bareiss_matches_crt(a):
    assert det_matrix_oracle(a, "bareiss") == det_matrix_oracle(a, "crt")


@given(elements(bound=4, max_n=8))
def test_factored_parts_multiply_out(a):
    fd = det_factored(a)
    assert fd.total == fd.product() == det_exact(a)


@given(elements(bound=4, max_n=8, families=(Family.DIHEDRAL, Family.DICYCLIC)))
def test_parts_beyond_two_are_squares(a):
    # B is fixed by x -> 1/x, so conjugate roots pair up
    for d, v in det_factored(a).parts.items():
        if d >= 3:
            assert is_square(v)


@pytest.mark.parametrize("n", [35, 40, 64])
def test_large_modulus_routes_agree(n):
    rng = random.Random(n)
    G = GroupSpec.dicyclic(n)
    N = G.x_modulus
    xN = IntPoly.monomial(N) - IntPoly((1,))
    for _ in range(3):
        a = RingElement.from_vector(G, [rng.randint(-2, 2) for _ in range(G.order)])
        B = root_poly(a).to_intpoly()
        assert det_exact(a) == resultant_modular(xN, B)


def test_large_sparse_element():
    G = GroupSpec.dicyclic(15015)
    a = RingElement.from_coeffs(G, [1, 0, 1])
    assert det_exact(a) == 16


def test_zero_element():
    a = RingElement.from_coeffs(GroupSpec.dicyclic(4), [0])
    assert det_exact(a) == 0
    assert set(det_factored(a).parts.values()) == {0}


def test_errors():
    with pytest.raises(ValueError):
        measure_poly(RingElement.identity(GroupSpec.cyclic(3)))
    with pytest.raises(ValueError):
        det_matrix_oracle(RingElement.identity(GroupSpec.cyclic(3)), "lu")


@given(st.integers(-50, 10**6))
def test_is_square(v):
    assert is_square(v) == (v >= 0 and int(v**0.5 + 0.5) ** 2 == v)
