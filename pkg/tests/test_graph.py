import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subquad.graph import (
    UNREACHABLE,
    CycleDetected,
    DirectedGraph,
    UndirectedGraph,
    apsp_unweighted,
    bfs_distances,
    condense_scc,
    reachability_sets,
    strongly_connected_components,
    topological_order,
)
from tests.oracles import bfs, reach_by_dfs


@st.composite
def digraphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    if n == 0:
        return DirectedGraph(0, ())
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1])
    return DirectedGraph.from_edges(n, draw(st.lists(pairs, max_size=3 * n)))


def test_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        DirectedGraph(2, ((1, 1), ()))
    with pytest.raises(ValueError):
        DirectedGraph(2, ((0,), ()))
    with pytest.raises(ValueError):
        UndirectedGraph(2, ((1,), ()))


def test_loops_only_when_allowed():
    g = DirectedGraph.from_edges(2, [(0, 0), (0, 1)], allow_loops=True)
    assert g.has_loops() and g.edge_count == 2


def test_topological_order_prefers_small_ids():
    g = DirectedGraph.from_edges(4, [(3, 0), (2, 1)])
    assert topological_order(g).order == (2, 1, 3, 0)


def test_cycle_is_reported():
    g = DirectedGraph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    with pytest.raises(CycleDetected) as info:
        topological_order(g)
    cyc = info.value.cycle
    assert set(cyc) == {0, 1, 2}
    assert all(g.has_edge(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1]))


@given(digraphs())
@settings(max_examples=150, deadline=None)
def test_scc_matches_mutual_reachability(g):
    reach = reach_by_dfs(g.n, list(g.edges()))
    comps = strongly_connected_components(g)
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    label = {v: i for i, c in enumerate(comps) for v in c}
    for u in range(g.n):
        for v in range(g.n):
            mutual = u == v or ((u, v) in reach and (v, u) in reach)
            assert mutual == (label[u] == label[v])


@given(digraphs())
@settings(max_examples=150, deadline=None)
def test_condensation_is_acyclic_and_faithful(g):
    dag, comp = condense_scc(g)
    order = topological_order(dag)
    assert order.is_valid_for(dag)
    for u, v in g.edges():
        assert comp[u] == comp[v] or dag.has_edge(comp[u], comp[v])


def test_acyclic_input_condenses_to_itself():
    g = DirectedGraph.from_edges(4, [(0, 2), (1, 2), (2, 3)])
    dag, comp = condense_scc(g)
    assert dag == g and comp == (0, 1, 2, 3)


@given(digraphs())
@settings(max_examples=100, deadline=None)
def test_reachability_sets(g):
    reach = reach_by_dfs(g.n, list(g.edges()))
    got = {(s, t) for s, ts in enumerate(reachability_sets(g)) for t in ts}
    assert got == reach


def test_distances_against_dict_bfs():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 15)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.2]
        g = UndirectedGraph.from_edges(n, edges)
        adj = {v: list(g.adjacency[v]) for v in range(n)}
        d = apsp_unweighted(g)
        for s in range(n):
            ref = bfs(adj, s)
            assert bfs_distances(g, s) == [ref.get(t, UNREACHABLE) for t in range(n)]
            assert d.row(s) == bfs_distances(g, s)


def test_distance_matrix_summaries():
    path = UndirectedGraph.from_edges(3, [(0, 1), (1, 2)])
    d = apsp_unweighted(path)
    assert d.diameter() == 2
    assert d.farness().tolist() == [3, 2, 3]
    assert d.eccentricities().tolist() == [2, 1, 2]
