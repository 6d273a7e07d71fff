from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gdet.detengine import det_exact
from gdet.groupring import GroupSpec, RingElement
from gdet.search import (
    SearchSpec,
    batch_determinants,
    frontier_match,
    search_box,
    search_frontier,
    thread_count,
    verify_lambda,
)
from strategies import groups

Q = GroupSpec.dicyclic


def test_q8_minimum():
    r = search_box(SearchSpec(Q(2), 1))
    assert r.exhausted and r.elements_visited == 6561
    assert abs(r.best_value) == 7 and det_exact(r.best_element) == r.best_value


def test_q12_minimum():
    r = search_box(SearchSpec(Q(3), 1))
    assert abs(r.best_value) == 5


def test_z2_minimum():
    # with coefficients in {-1,0,1} every Z_2 determinant has |det| <= 1
    assert search_box(SearchSpec(GroupSpec.cyclic(2), 1)).best_value is None
    assert abs(search_box(SearchSpec(GroupSpec.cyclic(2), 2)).best_value) == 3


def test_tie_break_prefers_negative_then_lex():
    r = search_box(SearchSpec(Q(2), 1))
    assert r.best_value == -7
    # first element in lexicographic order with determinant -7
    from itertools import product

    for vec in product((-1, 0, 1), repeat=8):
        if det_exact(RingElement.from_vector(Q(2), vec)) == -7:
            assert r.best_element.vector() == vec
            break


@pytest.mark.parametrize("n", [2, 3])
def test_screening_is_conservative(n):
    a = search_box(SearchSpec(Q(n), 1, screen=True))
    b = search_box(SearchSpec(Q(n), 1, screen=False))
    assert (a.best_value, a.best_element) == (b.best_value, b.best_element)
    a = search_box(SearchSpec(Q(n), 1, mode="spectrum", value_cap=500, screen=True))
    b = search_box(SearchSpec(Q(n), 1, mode="spectrum", value_cap=500, screen=False))
    assert a.spectrum == b.spectrum


def test_parallel_equals_serial():
    spec = SearchSpec(Q(3), 1, mode="spectrum")
    a = search_box(spec, threads=1)
    b = search_box(spec, threads=4)
    assert a.spectrum == b.spectrum and a.best_value == b.best_value
    assert a.elements_visited == b.elements_visited


def test_spectrum_multiplicities_sum_to_box():
    r = search_box(SearchSpec(Q(2), 1, mode="spectrum"))
    assert sum(e.multiplicity for e in r.spectrum) == 6561
    assert r.values == sorted(r.values)
    assert not r.violations


def test_budget_prefix():
    spec = SearchSpec(GroupSpec.dihedral(3), 1, mode="spectrum", budget=300, screen=False)
    r = search_box(spec)
    assert not r.exhausted and r.elements_visited == 300
    from itertools import islice, product

    want = {}
    for vec in islice(product((-1, 0, 1), repeat=6), 300):
        d = det_exact(RingElement.from_vector(spec.group, vec))
        want[d] = want.get(d, 0) + 1
    assert {e.value: e.multiplicity for e in r.spectrum} == want


def test_random_sampling_reproducible():
    spec = SearchSpec(Q(4), 2, mode="spectrum", sampling="random", budget=5000, seed=11)
    a, b = search_box(spec, threads=1), search_box(spec, threads=3)
    assert a.spectrum == b.spectrum and not a.exhausted
    c = search_box(SearchSpec(Q(4), 2, mode="spectrum", sampling="random", budget=5000, seed=12))
    assert c.spectrum != a.spectrum
    assert not a.violations


@given(groups(7), st.integers(1, 6), st.data())
def test_bulk_matches_exact(G, b, data):
    rows = data.draw(
        st.lists(st.lists(st.integers(-b, b), min_size=G.order, max_size=G.order), min_size=1, max_size=6)
    )
    got = batch_determinants(G, np.array(rows))
    assert [int(v) for v in got] == [det_exact(RingElement.from_vector(G, r)) for r in rows]


def test_bulk_many_primes():
    # large coefficients push the bound past two primes
    G = Q(5)
    rng = np.random.default_rng(3)
    X = rng.integers(-40, 41, size=(20, G.order))
    got = batch_determinants(G, X)
    assert isinstance(got, list)
    assert got == [det_exact(RingElement.from_vector(G, r.tolist())) for r in X]


def test_frontier_p5_finds_special_value():
    r = search_frontier(5, 1, coeff_min=0)
    assert r.exhausted and -4000 in r.values
    assert all(frontier_match(v, 5) for v in r.values)


def test_frontier_p3_empty():
    r = search_frontier(3, 1)
    assert r.exhausted and r.values == []


def test_frontier_p13_budget():
    r = search_frontier(13, 1, budget=3000)
    assert not r.exhausted and r.elements_visited == 3000 and r.values == []


def test_frontier_match():
    assert frontier_match(-4000, 5)
    assert frontier_match(32 * 3, 7)
    assert not frontier_match(32 * 25, 7)
    assert not frontier_match(64 * 3, 7)
    assert not frontier_match(32 * 7**4, 7)


@pytest.mark.parametrize("n,value", [(3, 5), (105, 11), (9, 5)])
def test_verify_lambda(n, value):
    r = verify_lambda(n)
    assert r.value == value
    assert abs(det_exact(r.witness.element)) == value
    assert {abs(c["value"]) for c in r.certificate} == set(range(2, value))


def test_verify_lambda_errors():
    with pytest.raises(ValueError):
        verify_lambda(4)
    with pytest.raises(ValueError):
        verify_lambda(1)


def test_spec_errors():
    with pytest.raises(ValueError):
        SearchSpec(Q(2), 1, budget=0)
    with pytest.raises(ValueError):
        SearchSpec(Q(2), 0)
    with pytest.raises(ValueError):
        SearchSpec(Q(2), 1, mode="fastest")
    with pytest.raises(ValueError):
        SearchSpec(Q(2), 1, sampling="random")
    with pytest.raises(ValueError):
        SearchSpec(Q(2), 1, mode="frontier", frontier_p=3)


def test_thread_count_env(monkeypatch):
    monkeypatch.setenv("GDET_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("GDET_THREADS", "x")
    with pytest.raises(ValueError):
        thread_count()
