import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subquad.closure import is_transitive
from subquad.comparability import (
    ForcingContradiction,
    Orientation,
    forces,
    is_comparability,
    orient_transitively,
    validate_contradiction,
)
from subquad.graph import DirectedGraph, UndirectedGraph
from tests.oracles import has_transitive_orientation


def cycle(n):
    return UndirectedGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def check_certificate(g, v):
    if v.is_comparability:
        assert is_transitive(v.orientation.directed).transitive
        assert v.orientation.base == g
    elif v.contradiction is not None:
        assert validate_contradiction(g, v.contradiction)
    else:
        a, b, c = v.witness
        d = v.rejected.directed
        assert d.has_edge(a, b) and d.has_edge(b, c) and not d.has_edge(a, c)


@pytest.mark.parametrize("n", range(3, 13))
def test_cycles(n):
    v = is_comparability(cycle(n))
    assert v.is_comparability == (n == 3 or n % 2 == 0)
    check_certificate(cycle(n), v)


def test_odd_cycle_raises_with_chain():
    g = cycle(5)
    with pytest.raises(ForcingContradiction) as info:
        orient_transitively(g)
    assert validate_contradiction(g, info.value)


def test_forcing_step():
    g = UndirectedGraph.from_edges(3, [(0, 1), (0, 2)])
    assert forces((0, 1), (0, 2), g)
    assert not forces((0, 1), (2, 0), g)
    tri = UndirectedGraph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    assert not forces((0, 1), (0, 2), tri)


def test_bad_chain_rejected():
    g = cycle(5)
    fake = ForcingContradiction((0, 1), [(0, 1), (1, 0)])
    assert not validate_contradiction(g, fake)


def test_orientation_must_cover_each_edge_once():
    g = UndirectedGraph.from_edges(2, [(0, 1)])
    with pytest.raises(ValueError):
        Orientation(g, DirectedGraph.from_edges(2, []))


def test_exhaustive_agreement():
    rng = random.Random(2024)
    seen = 0
    while seen < 300:
        n = rng.randint(1, 8)
        p = rng.random()
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        if len(edges) > 14:
            continue
        seen += 1
        g = UndirectedGraph.from_edges(n, edges)
        v = is_comparability(g)
        assert v.is_comparability == has_transitive_orientation(n, edges), edges
        check_certificate(g, v)


@st.composite
def bipartite(draw):
    n = draw(st.integers(1, 14))
    side = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if side[u] != side[v]]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return UndirectedGraph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


@given(bipartite())
@settings(max_examples=150, deadline=None)
def test_bipartite_graphs_are_comparability(g):
    v = is_comparability(g)
    assert v.is_comparability
    check_certificate(g, v)


def test_complete_graphs_and_empty():
    for n in range(0, 7):
        g = UndirectedGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
        assert is_comparability(g).is_comparability
