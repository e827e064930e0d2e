import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subquad.graph import UndirectedGraph
from subquad.problems import (
    BinaryMatrixPair,
    GraphInstance,
    InstanceError,
    PromiseViolation,
    SetFamilyInstance,
    SplitCnfInstance,
    VectorCollection,
    WildcardStringPair,
    betweenness_all,
    betweenness_of_vertex,
    check_witness,
    closeness,
    diameter_2_or_3,
    family_to_vectors,
    farness,
    hyperbolicity_fixed_pair,
    is_split_graph,
    local_align_wildcard,
    min_closeness,
    solve,
    solve_3_dominating,
    solve_dominated_vertex,
    solve_ksat_star,
    solve_maximal_elements,
    solve_orthogonal_vectors,
    solve_sperner,
    solve_subset_2_dominating,
    solve_subset_graph,
    solve_two_covering,
    solve_two_disjoint_sets,
    validate_instance,
    vectors_to_family,
    zeros_in_matmul,
)
from tests.oracles import betweenness_triple_loop, bfs, hyperbolicity_quadruples

rng = random.Random(77)


@st.composite
def families(draw, max_x=6, max_n=9):
    x = draw(st.integers(0, max_x))
    sets = draw(st.lists(st.frozensets(st.integers(0, max(0, x - 1)), max_size=x) if x else st.just(frozenset()), max_size=max_n))
    return SetFamilyInstance.from_sets(x, sets)


def rand_graph(n, p):
    return UndirectedGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def connected(n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    edges += [(i, rng.randrange(i)) for i in range(1, n)]
    return UndirectedGraph.from_edges(n, edges)


# set families --------------------------------------------------------------


def test_family_examples():
    f = SetFamilyInstance.from_sets(2, [[0], [1]])
    assert solve_two_disjoint_sets(f).witness == (0, 1)
    assert solve_two_covering(f).value
    assert not solve_sperner(f).value
    g = SetFamilyInstance.from_sets(2, [[0], [0, 1]])
    assert not solve_two_disjoint_sets(g).value
    assert solve_sperner(g).witness == (0, 1)
    assert solve_maximal_elements(g).value == (1,)
    assert solve_subset_graph(g).value == ((0, 1),)
    assert not solve_two_covering(SetFamilyInstance.from_sets(3, [[0], [1]])).value


def test_empty_set_semantics():
    f = SetFamilyInstance.from_sets(2, [[], [0, 1]])
    assert solve_two_disjoint_sets(f).value
    assert solve_sperner(f).witness == (0, 1)


def test_duplicates_are_distinct_members():
    f = SetFamilyInstance.from_sets(1, [[0], [0]])
    assert solve_sperner(f).value
    assert solve_maximal_elements(f).value == (0,)


@given(families())
@settings(max_examples=200, deadline=None)
def test_family_solvers_match_set_oracles(f):
    sets = [set(s) for s in f.sets]
    pairs = list(itertools.combinations(range(len(sets)), 2))
    ordered = list(itertools.permutations(range(len(sets)), 2))
    everything = set(range(f.ground_size))
    assert solve_two_disjoint_sets(f).value == any(not sets[p] & sets[q] for p, q in pairs)
    assert solve_two_covering(f).value == any(sets[p] | sets[q] == everything for p, q in pairs)
    assert solve_sperner(f).value == any(sets[p] <= sets[q] for p, q in ordered)
    assert set(solve_subset_graph(f).value) == {(p, q) for p, q in ordered if sets[p] <= sets[q]}
    maximal = [p for p in range(len(sets)) if not any(sets[p] < sets[q] or (sets[p] == sets[q] and q < p) for q in range(len(sets)) if q != p)]
    assert list(solve_maximal_elements(f).value) == maximal
    for tag in ("two-disjoint-sets", "two-covering", "sperner-family"):
        assert check_witness(tag, f, solve(tag, f))


@given(families())
@settings(max_examples=100, deadline=None)
def test_vector_encoding_round_trip(f):
    vc = family_to_vectors(f)
    assert vectors_to_family(vc) == SetFamilyInstance(f.ground_size, f.sets)
    assert solve_orthogonal_vectors(vc).value == solve_two_disjoint_sets(f).value


def test_vector_encoding_examples():
    assert family_to_vectors(SetFamilyInstance.from_sets(2, [[0], []])).vectors == ("10", "00")


def test_big_promise_enforced():
    with pytest.raises(PromiseViolation):
        SetFamilyInstance.from_sets(2, [[0]], big_flag=True)
    ok = SetFamilyInstance.from_sets(1, [[0], []], big_flag=True)
    validate_instance("big-two-disjoint-sets", ok)
    with pytest.raises(PromiseViolation):
        validate_instance("big-two-disjoint-sets", SetFamilyInstance.from_sets(5, [[0], [1]]))


def test_bad_family_rejected():
    with pytest.raises(InstanceError):
        SetFamilyInstance(2, ((2,),))


# split CNF -------------------------------------------------------------------


def test_ksat_examples():
    i = SplitCnfInstance(1, 1, ((1, 2),), ("1",), ("0",))
    assert solve_ksat_star(i).witness == (0, 0)
    unsat = SplitCnfInstance(1, 1, ((1,), (-1,)), ("0", "1"), ("0",))
    assert not solve_ksat_star(unsat).value
    none = SplitCnfInstance(1, 1, (), ("0",), ())
    assert not solve_ksat_star(none).value


def test_ksat_against_full_evaluation():
    for _ in range(300):
        nx, ny = rng.randint(1, 3), rng.randint(1, 3)
        cl = tuple(tuple(rng.choice((1, -1)) * rng.randint(1, nx + ny) for _ in range(rng.randint(1, 3))) for _ in range(rng.randint(0, 5)))
        xe = tuple("".join(rng.choice("01") for _ in range(nx)) for _ in range(rng.randint(0, 4)))
        ye = tuple("".join(rng.choice("01") for _ in range(ny)) for _ in range(rng.randint(0, 4)))
        i = SplitCnfInstance(nx, ny, cl, xe, ye)

        def sat(a, b):
            bits = a + b
            return all(any((bits[abs(l) - 1] == "1") == (l > 0) for l in c) for c in cl)

        v = solve_ksat_star(i)
        assert v.value == any(sat(a, b) for a in xe for b in ye)
        assert check_witness("ksat-star", i, v)


def test_ksat_rejects_wide_clause():
    with pytest.raises(InstanceError):
        SplitCnfInstance(2, 2, ((1, 2, 3, 4),), (), ())


# graphs ----------------------------------------------------------------------


def test_dominated_vertex_examples():
    star = GraphInstance(UndirectedGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))
    assert solve_dominated_vertex(star).value
    c5 = GraphInstance(UndirectedGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)]))
    assert not solve_dominated_vertex(c5).value


def test_dominated_vertex_random():
    for _ in range(200):
        g = rand_graph(rng.randint(0, 9), rng.random())
        nb = [set(r) for r in g.adjacency]
        want = any(nb[w] <= nb[v] for v, w in itertools.permutations(range(g.n), 2))
        v = solve_dominated_vertex(GraphInstance(g))
        assert v.value == want
        assert check_witness("graph-dominated-vertex", GraphInstance(g), v)


def test_betweenness_examples():
    path = UndirectedGraph.from_edges(3, [(0, 1), (1, 2)])
    assert betweenness_of_vertex(GraphInstance(path, vertex=1)).value == 1
    assert betweenness_all(GraphInstance(path)).value == (0, 1, 0)
    k4 = UndirectedGraph.from_edges(4, list(itertools.combinations(range(4), 2)))
    assert set(betweenness_all(GraphInstance(k4)).value) == {0}


def test_betweenness_against_triple_loop():
    for _ in range(60):
        n = rng.randint(1, 10)
        g = rand_graph(n, rng.uniform(0.1, 0.7))
        adj = {v: list(g.adjacency[v]) for v in range(n)}
        allv = betweenness_all(GraphInstance(g)).value
        for v in range(n):
            want = betweenness_triple_loop(n, adj, v)
            got = betweenness_of_vertex(GraphInstance(g, vertex=v)).value
            assert isinstance(got, Fraction) and got == want == allv[v]


def test_closeness_examples():
    assert farness(UndirectedGraph.from_edges(2, [(0, 1)])) == [1, 1]
    path = UndirectedGraph.from_edges(3, [(0, 1), (1, 2)])
    assert farness(path) == [3, 2, 3]
    assert min_closeness(GraphInstance(path, threshold=Fraction(1, 2))).witness == 0
    assert not min_closeness(GraphInstance(path, threshold=Fraction(1, 3))).value
    split = UndirectedGraph.from_edges(3, [(0, 1)])
    assert closeness(split)[2] == 0
    assert closeness(UndirectedGraph.from_edges(1, [])) == [None]


def test_farness_against_dict_bfs():
    for _ in range(100):
        n = rng.randint(1, 10)
        g = connected(n, 0.2)
        adj = {v: list(g.adjacency[v]) for v in range(n)}
        assert farness(g) == [sum(bfs(adj, s).values()) for s in range(n)]


def test_diameter_examples():
    c4 = UndirectedGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    p4 = UndirectedGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert diameter_2_or_3(GraphInstance(c4)).value
    assert not diameter_2_or_3(GraphInstance(p4)).value
    p5 = UndirectedGraph.from_edges(5, [(i, i + 1) for i in range(4)])
    with pytest.raises(PromiseViolation):
        diameter_2_or_3(GraphInstance(p5), check_promise=True)


def test_split_recognition_brute_force():
    for _ in range(200):
        n = rng.randint(0, 7)
        g = rand_graph(n, rng.random())
        want = False
        for mask in range(1 << n):
            k = [v for v in range(n) if mask >> v & 1]
            i = [v for v in range(n) if not mask >> v & 1]
            if all(g.has_edge(a, b) for a, b in itertools.combinations(k, 2)) and not any(
                g.has_edge(a, b) for a, b in itertools.combinations(i, 2)
            ):
                want = True
                break
        assert is_split_graph(g) == want


def test_hyperbolicity_examples():
    k4 = UndirectedGraph.from_edges(4, list(itertools.combinations(range(4), 2)))
    assert hyperbolicity_fixed_pair(GraphInstance(k4, pair=(0, 1))).value == 0
    c4 = UndirectedGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    # single quadruple: sums 2+2, 1+1, 1+1, so the un-halved value is 2
    assert hyperbolicity_fixed_pair(GraphInstance(c4, pair=(0, 2))).value == 2


def test_hyperbolicity_against_quadruples():
    for _ in range(60):
        n = rng.randint(2, 14)
        g = connected(n, 0.2)
        x, y = rng.sample(range(n), 2)
        adj = {v: list(g.adjacency[v]) for v in range(n)}
        inst = GraphInstance(g, pair=(x, y))
        v = hyperbolicity_fixed_pair(inst)
        assert v.value == hyperbolicity_quadruples(n, adj, x, y)
        assert check_witness("hyperbolicity-2-fixed-vertices", inst, v)


def test_three_dominating_examples():
    star = UndirectedGraph.from_edges(5, [(0, i) for i in range(1, 5)])
    assert solve_3_dominating(GraphInstance(star)).value
    three_k2 = UndirectedGraph.from_edges(6, [(0, 1), (2, 3), (4, 5)])
    assert solve_3_dominating(GraphInstance(three_k2)).value
    assert not solve_3_dominating(GraphInstance(UndirectedGraph.from_edges(4, []))).value


def test_three_dominating_brute_force():
    for _ in range(200):
        n = rng.randint(0, 9)
        g = rand_graph(n, rng.uniform(0.05, 0.5))
        closed = [set(g.adjacency[v]) | {v} for v in range(n)]
        want = n <= 3 or any(set().union(*(closed[v] for v in t)) == set(range(n)) for t in itertools.combinations(range(n), 3))
        inst = GraphInstance(g)
        v = solve_3_dominating(inst)
        assert v.value == want
        assert check_witness("3-dominating-set", inst, v)


def test_subset_two_dominating():
    star = UndirectedGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert solve_subset_2_dominating(GraphInstance(star, subset=(1, 2, 3))).value
    empty = UndirectedGraph.from_edges(5, [])
    assert not solve_subset_2_dominating(GraphInstance(empty, subset=(0, 1, 2))).value
    # equality mode demands the union be exactly the subset
    assert not solve_subset_2_dominating(GraphInstance(star, subset=(1, 2, 3)), equality=True).value
    assert solve_subset_2_dominating(GraphInstance(star, subset=(0, 1, 2, 3)), equality=True).value


def test_subset_two_dominating_brute_force():
    for _ in range(200):
        n = rng.randint(2, 9)
        g = rand_graph(n, rng.uniform(0.1, 0.6))
        sub = tuple(v for v in range(n) if rng.random() < 0.5)
        closed = [set(g.adjacency[v]) | {v} for v in range(n)]
        want = any(set(sub) <= closed[v] | closed[w] for v, w in itertools.combinations(range(n), 2))
        inst = GraphInstance(g, subset=sub)
        v = solve_subset_2_dominating(inst)
        assert v.value == want
        assert check_witness("bipartite-subset-2-dominating-set", inst, v)


def test_sides_must_be_bipartition():
    tri = UndirectedGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(InstanceError):
        GraphInstance(tri, sides=(0,))


# matrices and strings ----------------------------------------------------------


def test_matmul_examples():
    ones = tuple(tuple(range(3)) for _ in range(3))
    assert not zeros_in_matmul(BinaryMatrixPair(ones, 3, ones, 3)).value
    zero_row = ((),) + ones[1:]
    assert zeros_in_matmul(BinaryMatrixPair(zero_row, 3, ones, 3)).witness == (0, 0)


def test_matmul_against_triple_loop():
    for _ in range(200):
        r, k, c = rng.randint(1, 6), rng.randint(0, 6), rng.randint(1, 6)
        p = rng.random()
        left = tuple(tuple(j for j in range(k) if rng.random() < p) for _ in range(r))
        right = tuple(tuple(j for j in range(c) if rng.random() < p) for _ in range(k))
        m = BinaryMatrixPair(left, k, right, c)
        prod = [[any(t in left[i] and j in right[t] for t in range(k)) for j in range(c)] for i in range(r)]
        first = next(((i, j) for i in range(r) for j in range(c) if not prod[i][j]), None)
        v = zeros_in_matmul(m)
        assert v.value == (first is not None)
        assert v.witness == first


@pytest.mark.parametrize("s1,s2,want", [("01", "1", 1), ("00", "11", 0), ("010", "***", 3)])
def test_alignment_examples(s1, s2, want):
    assert local_align_wildcard(WildcardStringPair(s1, s2)).value == want


def test_alignment_window_brute_force():
    def ok(a, b):
        return all(x == y or "*" in (x, y) for x, y in zip(a, b))

    for _ in range(300):
        s1 = "".join(rng.choice("01*") for _ in range(rng.randint(0, 12)))
        s2 = "".join(rng.choice("01*") for _ in range(rng.randint(0, 12)))
        want = max(
            [L for L in range(1, min(len(s1), len(s2)) + 1) for i in range(len(s1) - L + 1) for j in range(len(s2) - L + 1) if ok(s1[i : i + L], s2[j : j + L])],
            default=0,
        )
        inst = WildcardStringPair(s1, s2)
        v = local_align_wildcard(inst)
        assert v.value == want
        assert check_witness("local-string-align", inst, v)


def test_wildcard_alphabet():
    with pytest.raises(InstanceError):
        WildcardStringPair("012", "")
    with pytest.raises(InstanceError):
        VectorCollection(2, ("1",))
