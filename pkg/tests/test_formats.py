from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subquad.formats import (
    FormatError,
    detect_kind,
    load,
    read_cnf,
    read_family,
    read_graph,
    read_instance,
    save,
    write_instance,
)
from subquad.generators import sample_instances
from subquad.graph import DirectedGraph, UndirectedGraph
from subquad.problems import (
    PROBLEMS,
    GraphInstance,
    SetFamilyInstance,
    SplitCnfInstance,
    VectorCollection,
    WildcardStringPair,
)


def roundtrip(inst):
    text = write_instance(inst)
    return read_instance(text, detect_kind(text))


@pytest.mark.parametrize("tag", sorted(PROBLEMS))
def test_generated_instances_round_trip(tag):
    for inst in sample_instances(tag, 15, seed=21):
        assert roundtrip(inst) == inst


def test_graph_instance_with_every_parameter():
    g = UndirectedGraph.from_edges(4, [(0, 1), (2, 3), (0, 3)])
    gi = GraphInstance(g, vertex=2, pair=(0, 3), threshold=Fraction(3, 7), subset=(1, 2), sides=(0, 2))
    assert roundtrip(gi) == gi


def test_directed_graph_and_loops():
    g = DirectedGraph.from_edges(3, [(0, 0), (0, 1), (2, 1)], allow_loops=True)
    back = read_graph(write_instance(g))
    assert back.edge_set() == g.edge_set()


def test_family_text_and_big_line():
    f = read_family("# two sets\nsf 3 2\n2 0 2\n0\n")
    assert f.sets == ((0, 2), ()) and not f.big_flag
    # the flag is validated: three elements is too many for two sets
    with pytest.raises(FormatError):
        read_family("sf 3 2\n2 0 2\n0\nbig\n")
    assert roundtrip(SetFamilyInstance.from_sets(1, [[0], []], big_flag=True)).big_flag


def test_cnf_empty_clause_and_empty_evals():
    i = SplitCnfInstance(0, 2, ((), (-1, 2)), ("", ""), ("01",))
    assert roundtrip(i) == i
    text = "kcnf* 1 1 3\n1 -2 0\nxevals 1\n1\nyevals 0\n"
    assert read_cnf(text).clauses == ((1, -2),)


def test_strings_keep_hash_characters_out():
    p = WildcardStringPair("0*1", "")
    assert roundtrip(p) == p


def test_vectors():
    v = VectorCollection(3, ("101", "000"))
    assert roundtrip(v) == v


@pytest.mark.parametrize("text", [
    "ug 2 1\n0 5\n",
    "ug 2 2\n0 1\n",
    "ug 3 2\n0 1\n1 0\n",
    "sf 2 1\n3 0 1\n",
    "sf x 1\n",
    "kcnf* 1 1 3\n1 2\nxevals 0\nyevals 0\n",
])
def test_malformed_input(text):
    with pytest.raises(ValueError):
        read_instance(text, detect_kind(text))


def test_unknown_header():
    with pytest.raises(FormatError):
        detect_kind("zz 1 2\n")


def test_save_and_load(tmp_path):
    f = SetFamilyInstance.from_sets(2, [[0], [1]])
    path = tmp_path / "f.sf"
    save(path, f)
    assert load(path) == f


@given(st.integers(0, 8), st.data())
@settings(max_examples=80, deadline=None)
def test_family_round_trip_property(x, data):
    sets = data.draw(st.lists(st.frozensets(st.integers(0, x - 1)) if x else st.just(frozenset()), max_size=6))
    f = SetFamilyInstance.from_sets(x, sets)
    assert read_family(write_instance(f)) == f
