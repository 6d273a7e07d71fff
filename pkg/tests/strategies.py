"""Hypothesis strategies shared across the suite."""

from __future__ import annotations

from hypothesis import strategies as st

from gdet import Family, GroupSpec, RingElement


def groups(max_n: int = 8, families=tuple(Family)):
    return st.builds(GroupSpec, st.sampled_from(families), st.integers(1, max_n))


@st.composite
def elements(draw, group=None, bound: int = 4, max_n: int = 8, families=tuple(Family)):
    G = group if group is not None else draw(groups(max_n, families))
    vec = draw(st.lists(st.integers(-bound, bound), min_size=G.order, max_size=G.order))
    return RingElement.from_vector(G, vec)


@st.composite
def element_pairs(draw, bound: int = 3, max_n: int = 6):
    G = draw(groups(max_n))
    return draw(elements(G, bound)), draw(elements(G, bound))


def int_polys(max_deg: int = 8, bound: int = 9, nonzero: bool = True):
    lists = st.lists(st.integers(-bound, bound), min_size=1, max_size=max_deg + 1)
    if nonzero:
        lists = lists.filter(lambda c: any(c))
    return lists
