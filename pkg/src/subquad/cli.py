"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 bad data.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from fractions import Fraction
from pathlib import Path

from . import formats
from .bench import FAMILIES, BenchConfig, bench_closure
from .closure import DEFAULT_OMEGA, InvalidExponent, closure_of_general_digraph, is_transitive
from .comparability import is_comparability
from .generators import GeneratorSpec, InfeasibleSpec, default_seed, generate, sample_instances
from .graph import CycleDetected, DirectedGraph, GraphFormatError, UndirectedGraph
from .problems import PROBLEMS, InstanceError, PromiseViolation, UnknownProblem, Verdict, get_problem, solve, validate_instance
from .reductions import BackTranslationError, UnknownReductionPair, reduce, verify_reduction

EXIT_FAIL, EXIT_USAGE, EXIT_DATA = 1, 2, 3
_DATA_ERRORS = (ValueError, InstanceError, PromiseViolation, CycleDetected, OSError, InfeasibleSpec, BackTranslationError)
_USAGE_ERRORS = (UnknownProblem, UnknownReductionPair, InvalidExponent)


class UsageError(Exception):
    pass


def _token(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (tuple, list)):
        return ",".join(_token(y) for y in x)
    return str(x)


def _plain(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (tuple, list)):
        return [_plain(y) for y in x]
    return x


def render_verdict(v: Verdict) -> str:
    if isinstance(v.value, (tuple, list)):
        head = " ".join(_token(y) for y in v.value)
    else:
        head = _token(v.value)
    if v.witness is None:
        return head
    w = v.witness if isinstance(v.witness, (tuple, list)) else (v.witness,)
    return f"{head} witness {' '.join(_token(y) for y in w)}".rstrip()


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _load_graph(path, directed: bool):
    g = formats.read_graph(Path(path).read_text())
    if directed and not isinstance(g, DirectedGraph):
        raise GraphFormatError("expected a directed graph (dg header)")
    if not directed and not isinstance(g, UndirectedGraph):
        raise GraphFormatError("expected an undirected graph (ug header)")
    return g


def cmd_gen(args) -> int:
    if args.count > 1 and not args.out:
        raise UsageError("--count above 1 needs --out DIR")
    base = GeneratorSpec(
        args.problem, seed=args.seed, n=args.n, ground_size=args.ground_size,
        family_size=args.family_size, density=args.density, x_evals=args.x_evals,
        y_evals=args.y_evals, var_count=args.var_count, clause_count=args.clause_count, k=args.k,
    )
    for i in range(args.count):
        plant = ("yes", "no")[i % 2] if args.planted == "mixed" else args.planted
        inst = generate(replace(base, plant=plant, seed=args.seed + i))
        text = formats.write_instance(inst)
        if not args.out:
            sys.stdout.write(text)
        elif args.count == 1 and not Path(args.out).is_dir():
            Path(args.out).write_text(text)
        else:
            Path(args.out).mkdir(parents=True, exist_ok=True)
            (Path(args.out) / f"{args.problem}_{i:04d}.txt").write_text(text)
    return 0


def cmd_solve(args) -> int:
    prob = get_problem(args.problem)
    inst = formats.read_instance(Path(args.file).read_text(), prob.instance_type)
    validate_instance(args.problem, inst)
    v = solve(args.problem, inst)
    _emit(args, {"kind": v.kind, "value": _plain(v.value), "witness": _plain(v.witness)}, render_verdict(v))
    return 0


def cmd_reduce(args) -> int:
    src = get_problem(args.source)
    inst = formats.read_instance(Path(args.infile).read_text(), src.instance_type)
    validate_instance(args.source, inst)
    rec = reduce(args.source, args.target, inst)
    Path(args.outfile).write_text(formats.write_instance(rec.instance))
    payload = {"source": rec.source_problem, "target": rec.target_problem, "size_in": rec.size_in, "size_out": rec.size_out}
    _emit(args, payload, f"# {rec.source_problem} -> {rec.target_problem} size_in={rec.size_in} size_out={rec.size_out}")
    return 0


def cmd_verify(args) -> int:
    insts = sample_instances(args.source, args.count, args.seed, args.planted)
    rep = verify_reduction(args.source, args.target, insts)
    d = rep.as_dict()
    lines = [
        f"{d['source']} -> {d['target']}",
        f"instances {d['instances']} passed {d['passed']} failed {d['failed']}",
        f"max_blowup {d['max_blowup']!r} worst_bound_use {d['worst_bound_use']!r}",
    ]
    lines += [f"FAIL #{f['index']}: {f['error']} expected={f['expected']} got={f['got']}" for f in d["failures"]]
    _emit(args, d, "\n".join(lines))
    return 0 if rep.ok else EXIT_FAIL


def cmd_closure(args) -> int:
    g = _load_graph(args.file, directed=True)
    res = closure_of_general_digraph(g, args.method, args.omega)
    if args.format == "json":
        print(json.dumps({
            "edges_in": res.input_edges, "edges_out": res.closure_edges,
            "method": res.method_used.value, "work": res.work_counter,
            "edges": [list(e) for e in res.closure.edges()],
        }, sort_keys=True))
    else:
        sys.stdout.write(formats.write_graph(res.closure))
        print(f"# edges_in={res.input_edges} edges_out={res.closure_edges} method={res.method_used.value} work={res.work_counter}")
    return 0


def cmd_check_transitive(args) -> int:
    g = _load_graph(args.file, directed=True)
    chk = is_transitive(g)
    _emit(args, {"transitive": chk.transitive, "witness": _plain(chk.witness)},
          "true" if chk.transitive else f"false witness {_token(chk.witness).replace(',', ' ')}")
    return 0


def cmd_check_comparability(args) -> int:
    g = _load_graph(args.file, directed=False)
    v = is_comparability(g)
    if v.is_comparability:
        arcs = sorted(v.orientation.directed.edges())
        _emit(args, {"comparability": True, "orientation": [list(a) for a in arcs]},
              "true orientation " + " ".join(f"{a}>{b}" for a, b in arcs))
    elif v.contradiction is not None:
        chain = v.contradiction.chain
        _emit(args, {"comparability": False, "chain": [list(a) for a in chain]},
              "false chain " + " ".join(f"{a}>{b}" for a, b in chain))
    else:
        _emit(args, {"comparability": False, "witness": list(v.witness)},
              "false witness " + " ".join(map(str, v.witness)))
    return 0


def cmd_bench(args) -> int:
    try:
        sizes = tuple(int(s) for s in args.sizes.split(","))
    except ValueError:
        raise UsageError(f"bad --sizes {args.sizes!r}") from None
    cfg = BenchConfig(args.family, sizes, args.repeats, args.seed, args.density)
    rep = bench_closure(cfg, args.out)
    _emit(args, rep.as_dict(), rep.to_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="subquad", description="Fine-grained reduction harness and transitive closure tools.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=default_seed())
    sub = p.add_subparsers(dest="command", required=True)
    tags = sorted(PROBLEMS)

    g = sub.add_parser("gen", parents=[common], help="generate instances")
    g.add_argument("problem", choices=tags)
    g.add_argument("--planted", choices=("yes", "no", "random", "mixed"), default="random")
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--out")
    g.add_argument("--n", type=int, default=12)
    g.add_argument("--ground-size", type=int)
    g.add_argument("--family-size", type=int, default=16)
    g.add_argument("--density", type=float, default=0.4)
    g.add_argument("--x-evals", type=int, default=6)
    g.add_argument("--y-evals", type=int, default=6)
    g.add_argument("--var-count", type=int, default=4)
    g.add_argument("--clause-count", type=int, default=5)
    g.add_argument("--k", type=int, default=3)
    g.set_defaults(fn=cmd_gen)

    s = sub.add_parser("solve", parents=[common], help="run the reference solver")
    s.add_argument("problem", choices=tags)
    s.add_argument("file")
    s.set_defaults(fn=cmd_solve)

    r = sub.add_parser("reduce", parents=[common], help="apply one reduction")
    r.add_argument("source", choices=tags)
    r.add_argument("target", choices=tags)
    r.add_argument("infile")
    r.add_argument("outfile")
    r.set_defaults(fn=cmd_reduce)

    v = sub.add_parser("verify", parents=[common], help="check a reduction on generated instances")
    v.add_argument("source", choices=tags)
    v.add_argument("target", choices=tags)
    v.add_argument("--count", type=int, default=100)
    v.add_argument("--planted", choices=("yes", "no", "random", "mixed"), default="random")
    v.set_defaults(fn=cmd_verify)

    c = sub.add_parser("closure", parents=[common], help="transitive closure of a dg file")
    c.add_argument("file")
    c.add_argument("--method", choices=("gk", "matrix", "hybrid"), default="hybrid")
    c.add_argument("--omega", type=float, default=DEFAULT_OMEGA)
    c.set_defaults(fn=cmd_closure)

    t = sub.add_parser("check-transitive", parents=[common], help="test a dg file for transitivity")
    t.add_argument("file")
    t.set_defaults(fn=cmd_check_transitive)

    cc = sub.add_parser("check-comparability", parents=[common], help="test a ug file for a transitive orientation")
    cc.add_argument("file")
    cc.set_defaults(fn=cmd_check_comparability)

    b = sub.add_parser("bench", parents=[common], help="closure scaling benchmark")
    b.add_argument("--family", choices=FAMILIES, default="sparse")
    b.add_argument("--sizes", default=",".join(str(2**k) for k in range(10, 16)))
    b.add_argument("--repeats", type=int, default=3)
    b.add_argument("--density", type=float, default=0.05)
    b.add_argument("--out", default="results")
    b.set_defaults(fn=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (UsageError, *_USAGE_ERRORS) as exc:
        print(f"subquad: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _DATA_ERRORS as exc:
        print(f"subquad: data error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
