import json

import pytest

from subquad.cli import main


@pytest.fixture
def f2(tmp_path):
    p = tmp_path / "f2.sf"
    p.write_text("sf 2 2\n1 0\n1 1\n")
    return p


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_prints_witness(capsys, f2):
    code, out, _ = run(capsys, "solve", "two-disjoint-sets", f2)
    assert code == 0 and out.strip() == "true witness 0 1"


def test_solve_json(capsys, f2):
    code, out, _ = run(capsys, "solve", "two-disjoint-sets", f2, "--format", "json")
    assert json.loads(out) == {"kind": "bool", "value": True, "witness": [0, 1]}


def test_rational_output(capsys, tmp_path):
    p = tmp_path / "g.ug"
    p.write_text("ug 3 2\n0 1\n1 2\nvertex 1\n")
    _, out, _ = run(capsys, "solve", "betweenness-centrality-vertex", p)
    assert out.strip() == "1"


def test_unknown_subcommand(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 2 and "invalid choice" in err


def test_data_errors(capsys, tmp_path):
    bad = tmp_path / "bad.sf"
    bad.write_text("sf 2 x\n")
    assert run(capsys, "solve", "two-disjoint-sets", bad)[0] == 3
    assert run(capsys, "solve", "two-disjoint-sets", tmp_path / "missing")[0] == 3
    big = tmp_path / "big.sf"
    big.write_text("sf 5 2\n1 0\n1 1\n")
    assert run(capsys, "solve", "big-two-disjoint-sets", big)[0] == 3


def test_verify_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "ksat-star", "big-two-disjoint-sets", "--count", 100, "--seed", 7)
    assert code == 0 and "passed 100 failed 0" in out


def test_verify_report_text_matches_json(capsys):
    args = ["verify", "big-two-covering", "local-string-align", "--count", 20, "--seed", 3, "--planted", "mixed"]
    _, text, _ = run(capsys, *args)
    _, js, _ = run(capsys, *args, "--format", "json")
    d = json.loads(js)
    assert f"max_blowup {d['max_blowup']!r} worst_bound_use {d['worst_bound_use']!r}" in text
    assert f"instances {d['instances']} passed {d['passed']} failed {d['failed']}" in text


def test_verify_unknown_pair(capsys):
    assert run(capsys, "verify", "ksat-star", "subset-graph")[0] == 2


def test_gen_is_byte_identical(capsys, tmp_path):
    _, a, _ = run(capsys, "gen", "ksat-star", "--seed", 4, "--planted", "no")
    _, b, _ = run(capsys, "gen", "ksat-star", "--seed", 4, "--planted", "no")
    assert a == b and a.startswith("kcnf*")


def test_gen_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("SUBQUAD_SEED", "4")
    _, a, _ = run(capsys, "gen", "ksat-star", "--planted", "no")
    _, b, _ = run(capsys, "gen", "ksat-star", "--seed", 4, "--planted", "no")
    assert a == b


def test_gen_many_needs_out(capsys, tmp_path):
    assert run(capsys, "gen", "two-covering", "--count", 3)[0] == 2
    assert run(capsys, "gen", "two-covering", "--count", 4, "--planted", "mixed", "--out", tmp_path / "d")[0] == 0
    files = sorted((tmp_path / "d").iterdir())
    assert len(files) == 4
    answers = [run(capsys, "solve", "two-covering", f)[1].split()[0] for f in files]
    assert answers == ["true", "false", "true", "false"]


def test_infeasible_gen(capsys):
    assert run(capsys, "gen", "sperner-family", "--planted", "no", "--family-size", 30, "--ground-size", 4)[0] == 3


def test_reduce_writes_target(capsys, f2, tmp_path):
    out = tmp_path / "out.ug"
    code, msg, _ = run(capsys, "reduce", "two-covering", "bipartite-subset-2-dominating-set", f2, out)
    assert code == 0 and "size_in=" in msg
    _, ans, _ = run(capsys, "solve", "bipartite-subset-2-dominating-set", out)
    assert ans.startswith("true")


def test_closure_and_checks(capsys, tmp_path):
    p = tmp_path / "p.dg"
    p.write_text("dg 4 3\n0 1\n1 2\n2 3\n")
    code, out, _ = run(capsys, "closure", p, "--method", "gk")
    assert code == 0 and "# edges_in=3 edges_out=6 method=gk" in out
    _, js, _ = run(capsys, "closure", p, "--method", "matrix", "--format", "json")
    assert json.loads(js)["edges_out"] == 6
    _, out, _ = run(capsys, "check-transitive", p)
    assert out.startswith("false witness")
    assert run(capsys, "closure", p, "--omega", "1.5")[0] == 2
    c5 = tmp_path / "c5.ug"
    c5.write_text("ug 5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n")
    _, out, _ = run(capsys, "check-comparability", c5)
    assert out.startswith("false chain")
    c4 = tmp_path / "c4.ug"
    c4.write_text("ug 4 4\n0 1\n1 2\n2 3\n0 3\n")
    _, out, _ = run(capsys, "check-comparability", c4, "--format", "json")
    assert json.loads(out)["comparability"] is True


def test_wrong_graph_kind(capsys, tmp_path):
    p = tmp_path / "u.ug"
    p.write_text("ug 2 1\n0 1\n")
    assert run(capsys, "closure", p)[0] == 3


def test_bench(capsys, tmp_path):
    code, out, _ = run(capsys, "bench", "--family", "constant", "--sizes", "128,256,512", "--repeats", 1, "--out", tmp_path)
    assert code == 0 and "work_exponent" in out
    assert (tmp_path / "closure_constant.csv").exists()
    assert run(capsys, "bench", "--sizes", "a,b")[0] == 2
