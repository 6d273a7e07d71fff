from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gdet.groupring import (
    Family,
    GroupSpec,
    GroupWord,
    RingElement,
    ring_mul,
    ring_mul_convolution,
    swap,
    to_matrix,
    word_inv,
    word_mul,
)
from strategies import element_pairs, elements, groups


@st.composite
def words(draw, G):
    y = draw(st.integers(0, 1)) if G.has_y else 0
    return GroupWord(y, draw(st.integers(0, G.x_modulus - 1)))


def test_orders_and_names():
    assert GroupSpec.dicyclic(3).order == 12
    assert GroupSpec.dihedral(5).order == 10
    assert GroupSpec.cyclic(7).order == 7
    assert [GroupSpec(f, 4).name for f in Family] == ["Z_4", "D_8", "Q_16"]


def test_bad_parameter():
    with pytest.raises(ValueError):
        GroupSpec.dicyclic(0)


def test_enumeration_order():
    G = GroupSpec.dicyclic(2)
    ws = G.words()
    assert ws[:4] == [GroupWord(0, i) for i in range(4)]
    assert ws[4:] == [GroupWord(1, i) for i in range(4)]
    assert [G.index(w) for w in ws] == list(range(8))


@pytest.mark.parametrize("n", [1, 2, 3, 6])
def test_defining_relations(n):
    Q, D = GroupSpec.dicyclic(n), GroupSpec.dihedral(n)
    y, x = GroupWord(1, 0), GroupWord(0, 1)
    assert word_mul(Q, y, y) == GroupWord(0, n % (2 * n))
    assert word_mul(D, y, y) == GroupWord(0, 0)
    for G in (Q, D):
        # x y = y x^{-1}
        assert word_mul(G, x, y) == word_mul(G, y, word_inv(G, x))


@given(groups(6), st.data())
def test_word_associativity_and_inverse(G, data):
    a, b, c = (data.draw(words(G)) for _ in range(3))
    assert word_mul(G, word_mul(G, a, b), c) == word_mul(G, a, word_mul(G, b, c))
    assert word_mul(G, a, word_inv(G, a)) == GroupWord(0, 0)
    assert word_mul(G, word_inv(G, a), a) == GroupWord(0, 0)


@given(element_pairs(4, 6))
def test_closed_form_product_matches_convolution(pair):
    a, b = pair
    assert ring_mul(a, b) == ring_mul_convolution(a, b)


@given(groups(5), st.data())
def test_ring_associative(G, data):
    a, b, c = (data.draw(elements(G, 3)) for _ in range(3))
    assert (a * b) * c == a * (b * c)


@given(elements(bound=5))
def test_identity_and_scalars(a):
    one = RingElement.identity(a.group)
    assert a * one == a == one * a
    assert 3 * a == a + a + a
    assert a - a == RingElement.from_coeffs(a.group, [0])


@given(elements(bound=3))
def test_matrix_rows_are_permutations(a):
    m = to_matrix(a)
    vec = sorted(a.vector())
    assert all(sorted(row) == vec for row in m)
    assert all(m[i][i] == a.vector()[0] for i in range(len(m)))


def test_matrix_convention():
    # entry (i, j) is the coefficient of g_i g_j^{-1}
    G = GroupSpec.dicyclic(2)
    a = RingElement.word(G, GroupWord(1, 1))
    ws = G.words()
    m = to_matrix(a)
    for i, gi in enumerate(ws):
        for j, gj in enumerate(ws):
            expect = 1 if word_mul(G, gi, word_inv(G, gj)) == GroupWord(1, 1) else 0
            assert m[i][j] == expect


def test_from_vector_errors():
    with pytest.raises(ValueError):
        RingElement.from_vector(GroupSpec.cyclic(3), [1, 2])
    with pytest.raises(ValueError):
        RingElement.from_coeffs(GroupSpec.cyclic(3), [1], [1])
    with pytest.raises(ValueError):
        RingElement.word(GroupSpec.cyclic(3), GroupWord(1, 0))


def test_group_mismatch():
    a = RingElement.identity(GroupSpec.dicyclic(2))
    b = RingElement.identity(GroupSpec.dihedral(4))
    with pytest.raises(ValueError):
        a * b


def test_swap_and_power():
    G = GroupSpec.dicyclic(3)
    a = RingElement.from_coeffs(G, [1, 2], [0, 0, 5])
    assert swap(a).f == a.g and swap(a).g == a.f
    y = RingElement.word(G, GroupWord(1, 0))
    assert y**4 == RingElement.identity(G)
    assert y**2 == RingElement.word(G, GroupWord(0, 3))
    with pytest.raises(ValueError):
        swap(RingElement.identity(GroupSpec.cyclic(2)))
