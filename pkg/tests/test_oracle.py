"""Bounded-window oracle: graph, cycle search, escape search, collapse."""

import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slcterm.analyzer import decide, witness_trace
from slcterm.oracle import (
    PreconditionSignError,
    TransGraph,
    build_graph,
    diagonal_collapse,
    find_cycle,
    find_escape,
)
from slcterm.poly2 import contains

from conftest import (
    SEED,
    empty_loop,
    inc_loop,
    pair_loop,
    quad_loop,
    random_slc,
    slab_loop,
    thin_loop,
)


def test_build_graph_golden():
    g = build_graph(inc_loop(), 3)
    assert g.states() == [-3, -2, -1, 0, 1, 2]
    assert list(g.edges()) == [(-3, -2), (-2, -1), (-1, 0), (0, 1), (1, 2), (2, 3)]
    # x = 3 has only the out-of-window successor 4, so it is not a source
    assert list(g.succ(3)) == []
    assert g.has_edge(0, 1) and not g.has_edge(0, 2)

    g = build_graph(slab_loop(), 10)
    assert list(g.edges()) == [(4, 5), (5, 6), (7, 9), (8, 10)]

    g = build_graph(empty_loop(), 5)
    assert g.states() == [] and list(g.edges()) == []


def test_graph_edges_match_contains():
    rng = random.Random(SEED + 10)
    for _ in range(60):
        p = random_slc(rng)
        g = build_graph(p, 12)
        for x in range(-12, 13):
            for y in range(-12, 13):
                assert g.has_edge(x, y) == contains(p, (x, y))


def test_find_cycle_golden():
    assert find_cycle(build_graph(pair_loop(), 2)) == [0, 1]
    assert find_cycle(build_graph(quad_loop(), 5)) == [0, -2]
    assert find_cycle(build_graph(inc_loop(), 5)) is None
    assert find_cycle(build_graph(slab_loop(), 10)) is None
    assert find_cycle(build_graph(empty_loop(), 5)) is None


def test_find_cycle_edges_close():
    for build, bound in ((pair_loop, 2), (quad_loop, 5)):
        p = build()
        cyc = find_cycle(build_graph(p, bound))
        assert cyc is not None and len(set(cyc)) == len(cyc)
        for i, s in enumerate(cyc):
            assert contains(p, (s, cyc[(i + 1) % len(cyc)]))


def test_find_escape_golden():
    g = build_graph(inc_loop(), 5)
    assert find_escape(g, inc_loop()) == [0, 1, 2, 3, 4, 5]
    # a shorter cap discards long traces but keeps later starts alive
    assert find_escape(g, inc_loop(), 3) == [3, 4, 5]
    assert find_escape(g, inc_loop(), 5) == [1, 2, 3, 4, 5]
    assert find_escape(build_graph(slab_loop(), 10), slab_loop()) == [8, 10]
    assert find_escape(build_graph(thin_loop(), 100), thin_loop()) == [55, 73, 97]
    assert find_escape(build_graph(empty_loop(), 5), empty_loop()) is None


def test_find_escape_contract():
    # every returned trace: valid edges, inside the window, and the last
    # state has an integer successor beyond it
    rng = random.Random(SEED + 12)
    seen = 0
    for _ in range(150):
        p = random_slc(rng)
        g = build_graph(p, 16)
        trace = find_escape(g, p, 50)
        if trace is None:
            continue
        seen += 1
        assert len(trace) <= 50
        assert all(abs(s) <= 16 for s in trace)
        for a, b in zip(trace, trace[1:]):
            assert contains(p, (a, b))
        last = trace[-1]
        assert any(contains(p, (last, y)) for y in
                   list(range(17, 40)) + list(range(-39, -16)))
    assert seen >= 20


def test_oracle_determinism():
    for build, bound in ((quad_loop, 5), (slab_loop, 10), (inc_loop, 5)):
        p = build()
        g = build_graph(p, bound)
        assert find_cycle(g) == find_cycle(g)
        assert find_escape(g, p) == find_escape(g, p)


def test_oracle_sees_nt_verdicts():
    # any non-terminating verdict must show up in a 64-window as a cycle
    # or an escape, unless the witness only lives outside the window
    rng = random.Random(SEED + 11)
    checked = misses = 0
    for _ in range(300):
        p = random_slc(rng)
        v = decide(p)
        if v.kind != "non-terminating":
            continue
        checked += 1
        g = build_graph(p, 64)
        if find_cycle(g) is not None or find_escape(g, p) is not None:
            continue
        misses += 1
        trace = witness_trace(p, v, 130)
        exits = [i for i, s in enumerate(trace) if abs(s) > 64]
        assert exits, "a witness inside the window must yield a cycle"
        k = exits[0]
        assert k == 0 or (k == 1 and trace[0] not in g.span)
    assert checked >= 100
    assert misses <= checked * 0.05


def test_diagonal_collapse_golden():
    assert diagonal_collapse(1, 3, 2) == F(7, 3)
    assert diagonal_collapse(0, 2, 0) == 1
    assert diagonal_collapse(F(1, 2), 0, F(3, 2)) == F(3, 8)
    with pytest.raises(PreconditionSignError):
        diagonal_collapse(2, 2, 3)
    with pytest.raises(PreconditionSignError):
        diagonal_collapse(3, 2, 2)
    with pytest.raises(PreconditionSignError):
        diagonal_collapse(1, 2, 3)


@given(
    st.integers(-50, 50),
    st.sampled_from((1, -1)),
    st.integers(1, 50),
    st.integers(1, 50),
)
def test_diagonal_collapse_on_segment(alpha, s, da, db):
    # (r, r) lies on the segment from (a, alpha) to (alpha, b)
    a, b = alpha + s * da, alpha + s * db
    r = diagonal_collapse(a, alpha, b)
    lam = F(a - r, a - alpha)
    assert 0 < lam < 1
    assert alpha + lam * (b - alpha) == r
    assert (1 - lam) * a + lam * alpha == r


def test_transgraph_succ_missing_state():
    g = TransGraph(2, {0: (1, 1)})
    assert list(g.succ(5)) == []
    assert not g.has_edge(5, 0)
