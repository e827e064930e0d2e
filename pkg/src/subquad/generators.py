"""Seeded instance generators with planted answers.

All randomness comes from numpy's PCG64 bit generator seeded with the
config's 64-bit seed, so a config and seed always produce the same instance.  Planted
instances are checked against the reference solver before they are returned.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations
from typing import Optional

import numpy as np

from .graph import UndirectedGraph
from .problems import (
    GraphInstance,
    SetFamilyInstance,
    SplitCnfInstance,
    WildcardStringPair,
    BinaryMatrixPair,
    big_bound,
    diameter,
    family_to_vectors,
    farness,
    get_problem,
    solve,
)

SEED_ENV = "SUBQUAD_SEED"
PLANTS = ("yes", "no", "random")
_MAX_TRIES = 400


class InfeasibleSpec(ValueError):
    pass


def default_seed() -> int:
    return int(os.environ.get(SEED_ENV, "0"))


@dataclass(frozen=True)
class GeneratorSpec:
    problem: str
    plant: str = "random"
    seed: int = 0
    n: int = 12
    ground_size: Optional[int] = None
    family_size: int = 16
    density: float = 0.4
    x_evals: int = 6
    y_evals: int = 6
    var_count: int = 4
    clause_count: int = 5
    k: int = 3

    def __post_init__(self):
        if self.plant not in PLANTS:
            raise ValueError(f"plant must be one of {PLANTS}")
        get_problem(self.problem)


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed & (2**64 - 1)))


def _subset(rng, universe, p) -> list[int]:
    universe = list(universe)
    if not universe:
        return []
    keep = rng.random(len(universe)) < p
    return [u for u, k in zip(universe, keep) if k]


def _ground(spec: GeneratorSpec, big: bool) -> int:
    cap = int(big_bound(spec.family_size)) if big else None
    x = spec.ground_size if spec.ground_size is not None else min(8, cap or 8)
    if cap is not None and x > cap:
        raise InfeasibleSpec(f"|X|={x} breaks the polylog promise for |C|={spec.family_size} (cap {cap})")
    return x


def _family(rng, x, count, p) -> list[list[int]]:
    return [_subset(rng, range(x), p) for _ in range(count)]


def _two_indices(rng, count) -> tuple[int, int]:
    a, b = rng.choice(count, size=2, replace=False)
    return int(a), int(b)


def _gen_tds(rng, spec, x, plant):
    n = spec.family_size
    if plant == "no":
        if n >= 2 and x == 0:
            raise InfeasibleSpec("no-instances with two or more sets need a ground element")
        sentinel = int(rng.integers(x)) if x else 0
        return [sorted(set(s) | {sentinel}) for s in _family(rng, x, n, spec.density)] if x else [[] for _ in range(n)][:n]
    sets = _family(rng, x, n, spec.density)
    if plant == "yes":
        if n < 2:
            raise InfeasibleSpec("a disjoint pair needs two sets")
        a, b = _two_indices(rng, n)
        sets[a] = _subset(rng, range(x), spec.density)
        sets[b] = _subset(rng, sorted(set(range(x)) - set(sets[a])), spec.density)
    return sets


def _gen_sperner(rng, spec, x, plant):
    n = spec.family_size
    if plant == "no":
        r = x // 2
        if math.comb(x, r) < n:
            raise InfeasibleSpec(f"only {math.comb(x, r)} distinct {r}-subsets of {x} elements")
        picked: set[tuple[int, ...]] = set()
        while len(picked) < n:
            picked.add(tuple(sorted(int(e) for e in rng.choice(x, size=r, replace=False))))
        out = sorted(picked)
        order = rng.permutation(n)
        return [list(out[i]) for i in order]
    sets = _family(rng, x, n, spec.density)
    if plant == "yes":
        if n < 2:
            raise InfeasibleSpec("a containment pair needs two sets")
        a, b = _two_indices(rng, n)
        sets[a] = _subset(rng, sets[b], 0.5)
    return sets


def _gen_tcov(rng, spec, x, plant):
    n = spec.family_size
    if plant == "no":
        if x == 0:
            raise InfeasibleSpec("an uncoverable element needs a non-empty ground set")
        hole = int(rng.integers(x))
        return [[e for e in s if e != hole] for s in _family(rng, x, n, spec.density)]
    sets = _family(rng, x, n, spec.density)
    if plant == "yes":
        if n < 2:
            raise InfeasibleSpec("a covering pair needs two sets")
        a, b = _two_indices(rng, n)
        sets[a] = _subset(rng, range(x), 0.5)
        rest = sorted(set(range(x)) - set(sets[a]))
        sets[b] = sorted(set(rest) | set(_subset(rng, sets[a], spec.density)))
    return sets


_FAMILY_GENS = {
    "two-disjoint-sets": _gen_tds,
    "sperner-family": _gen_sperner,
    "two-covering": _gen_tcov,
    "maximal-elements-family": _gen_sperner,
    "subset-graph": _gen_sperner,
    "orthogonal-binary-vectors": _gen_tds,
}


def _gen_family(rng, spec: GeneratorSpec) -> SetFamilyInstance:
    big = spec.problem.startswith("big-")
    base = spec.problem[4:] if big else spec.problem
    x = _ground(spec, big)
    sets = _FAMILY_GENS[base](rng, spec, x, spec.plant)
    return SetFamilyInstance.from_sets(x, sets, big_flag=big)


def _gen_ksat(rng, spec: GeneratorSpec) -> SplitCnfInstance:
    nx = ny = spec.var_count
    nvars = nx + ny
    if nvars == 0:
        raise InfeasibleSpec("need at least one variable")

    def bits(width):
        return "".join("1" if b else "0" for b in rng.random(width) < 0.5)

    def clause():
        width = int(rng.integers(1, spec.k + 1))
        vars_ = rng.choice(nvars, size=min(width, nvars), replace=False) + 1
        return tuple(int(v) if rng.random() < 0.5 else -int(v) for v in vars_)

    xe = [bits(nx) for _ in range(spec.x_evals)]
    ye = [bits(ny) for _ in range(spec.y_evals)]
    clauses = [clause() for _ in range(spec.clause_count)]

    def value(lit, a, b):
        v = abs(lit)
        bit = a[v - 1] if v <= nx else b[v - 1 - nx]
        return (bit == "1") == (lit > 0)

    if spec.plant == "yes":
        if not xe or not ye:
            raise InfeasibleSpec("a satisfying pair needs evaluations on both sides")
        a, b = xe[int(rng.integers(len(xe)))], ye[int(rng.integers(len(ye)))]
        # flip one literal of each falsified clause so (a, b) satisfies everything
        fixed = []
        for c in clauses:
            if not any(value(l, a, b) for l in c):
                j = int(rng.integers(len(c)))
                c = c[:j] + (-c[j],) + c[j + 1 :]
            fixed.append(c)
        clauses = fixed
    elif spec.plant == "no":
        limit = max(spec.clause_count, int(big_bound(len(xe) + len(ye))) - 2)
        while True:
            inst = SplitCnfInstance(nx, ny, tuple(clauses), tuple(xe), tuple(ye), spec.k)
            verdict = solve("ksat-star", inst)
            if not verdict.value:
                break
            if len(clauses) >= limit:
                raise InfeasibleSpec("could not block every evaluation pair within the clause budget")
            p, q = verdict.witness
            a, b = xe[p], ye[q]
            # a clause falsified by the surviving pair
            width = min(spec.k, nvars)
            vars_ = rng.choice(nvars, size=width, replace=False) + 1
            lits = []
            for v in vars_:
                v = int(v)
                bit = a[v - 1] if v <= nx else b[v - 1 - nx]
                lits.append(-v if bit == "1" else v)
            clauses.append(tuple(lits))
    return SplitCnfInstance(nx, ny, tuple(clauses), tuple(xe), tuple(ye), spec.k)


def _random_graph(rng, n, p) -> UndirectedGraph:
    if n < 2:
        return UndirectedGraph.from_edges(n, [])
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return UndirectedGraph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def _connected_graph(rng, n, p) -> UndirectedGraph:
    base = _random_graph(rng, n, p)
    order = rng.permutation(n).tolist()
    tree = [(order[i], order[int(rng.integers(i))]) for i in range(1, n)]
    return UndirectedGraph.from_edges(n, list(base.edges()) + tree)


def _bipartite(rng, n, p, force_side=None):
    side = [v for v in range(n) if rng.random() < 0.5] if force_side is None else list(force_side)
    left = set(side)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if (u in left) != (v in left) and rng.random() < p]
    return UndirectedGraph.from_edges(n, edges), tuple(sorted(side))


def _crown(rng, n) -> GraphInstance:
    # K_{k,k} minus a perfect matching: all neighbourhoods pairwise incomparable
    if n % 2 or n < 4:
        raise InfeasibleSpec("bipartite no-instances need an even vertex count of at least 4")
    k = n // 2
    perm = rng.permutation(n).tolist()
    edges = [(perm[i], perm[k + j]) for i in range(k) for j in range(k) if i != j]
    return GraphInstance(UndirectedGraph.from_edges(n, edges), sides=tuple(sorted(perm[:k])))


def _reject(make, want: bool, tag: str, attempts: int = _MAX_TRIES):
    for _ in range(attempts):
        inst = make()
        if solve(tag, inst).value == want:
            return inst
    raise InfeasibleSpec(f"no {'yes' if want else 'no'}-instance of {tag} found in {attempts} draws")


def _gen_graph(rng, spec: GeneratorSpec):
    tag, n, p, plant = spec.problem, spec.n, spec.density, spec.plant
    if tag in ("graph-dominated-vertex", "bip-graph-dominated-vertex"):
        bip = tag.startswith("bip")

        def make():
            if bip:
                g, side = _bipartite(rng, n, p)
                return GraphInstance(g, sides=side)
            return GraphInstance(_random_graph(rng, n, p))

        if plant == "no":
            try:
                return _reject(make, False, tag, attempts=100)
            except InfeasibleSpec:
                if not bip:
                    raise
            return _crown(rng, n)
        gi = make()
        if plant == "yes":
            if n < 2:
                raise InfeasibleSpec("domination needs two vertices")
            g = gi.graph
            side = set(gi.sides or ())
            same = [(v, w) for v, w in combinations(range(n), 2) if (v in side) == (w in side)]
            v, w = same[int(rng.integers(len(same)))] if bip and same else _two_indices(rng, n)
            if bip and not same:
                raise InfeasibleSpec("no two vertices on one side")
            # w keeps only neighbours it shares with v
            edges = [(a, b) for a, b in g.edges() if w not in (a, b) or (v in (a, b)) is False and (b if a == w else a) in g.adjacency[v]]
            edges = [(a, b) for a, b in edges if {a, b} != {v, w}]
            gi = GraphInstance(UndirectedGraph.from_edges(n, edges), sides=gi.sides)
        return gi
    if tag in ("betweenness-centrality-vertex", "betweenness-centrality", "hyperbolicity-2-fixed-vertices"):
        g = _connected_graph(rng, n, p)
        if tag == "betweenness-centrality-vertex":
            return GraphInstance(g, vertex=int(rng.integers(n)))
        if tag == "hyperbolicity-2-fixed-vertices":
            if n < 2:
                raise InfeasibleSpec("two fixed vertices need n >= 2")
            return GraphInstance(g, pair=_two_indices(rng, n))
        return GraphInstance(g)
    if tag == "minimum-closeness-centrality":
        g = _connected_graph(rng, n, p)
        top = max(f for f in farness(g) if f is not None) if n > 1 else 0
        if top <= 1:
            raise InfeasibleSpec("closeness thresholds need a vertex with farness above 1")
        if plant == "yes":
            sigma = Fraction(1, top - 1)
        elif plant == "no":
            sigma = Fraction(1, top)
        else:
            sigma = Fraction(1, int(rng.integers(1, 2 * top)))
        return GraphInstance(g, threshold=sigma)
    if tag == "graph-diameter-2-or-3":
        if n < 4 and plant == "no":
            raise InfeasibleSpec("diameter 3 needs four vertices")
        want = {"yes": (2,), "no": (3,), "random": (2, 3)}[plant]
        for _ in range(_MAX_TRIES):
            q = float(rng.uniform(0.15, 0.7))
            g = _connected_graph(rng, n, q)
            if diameter(g) in want:
                return GraphInstance(g)
        raise InfeasibleSpec("no graph with the requested diameter found")
    if tag == "split-graph-diameter-2-or-3":
        return _gen_split(rng, spec)
    if tag in ("3-dominating-set", "bipartite-3-dominating-set"):
        bip = tag.startswith("bip")

        def make(q=p):
            if bip:
                g, side = _bipartite(rng, n, q)
                return GraphInstance(g, sides=side)
            return GraphInstance(_random_graph(rng, n, q))

        if plant == "no":
            if n < 4:
                raise InfeasibleSpec("every graph on three or fewer vertices has a 3-dominating set")
            return _reject(lambda: make(min(p, 2.0 / n)), False, tag)
        gi = make()
        if plant == "yes" and n > 3:
            side = set(gi.sides or ())
            triple = [int(v) for v in rng.choice(n, size=3, replace=False)]
            if bip and len({v in side for v in triple}) == 1:
                other = [v for v in range(n) if (v in side) != (triple[0] in side)]
                if not other:
                    raise InfeasibleSpec("bipartition has an empty side")
                triple[2] = other[int(rng.integers(len(other)))]
            edges = list(gi.graph.edges())
            for u in range(n):
                if u in triple:
                    continue
                options = [t for t in triple if not bip or (t in side) != (u in side)]
                if not options:
                    raise InfeasibleSpec("cannot dominate a vertex across the bipartition")
                edges.append((u, options[int(rng.integers(len(options)))]))
            gi = GraphInstance(UndirectedGraph.from_edges(n, edges), sides=gi.sides)
        return gi
    if tag == "bipartite-subset-2-dominating-set":
        g, side = _bipartite(rng, n, p)
        subset = side
        if plant == "yes":
            other = [v for v in range(n) if v not in set(side)]
            if len(other) < 2:
                raise InfeasibleSpec("need two vertices opposite the target subset")
            a, b = (other[i] for i in _two_indices(rng, len(other)))
            edges = list(g.edges()) + [(u, a if rng.random() < 0.5 else b) for u in subset]
            g = UndirectedGraph.from_edges(n, edges)
        elif plant == "no":
            if len(subset) < 3:
                raise InfeasibleSpec("need three target vertices to isolate")
            lonely = {subset[int(i)] for i in rng.choice(len(subset), size=3, replace=False)}
            g = UndirectedGraph.from_edges(n, [(a, b) for a, b in g.edges() if a not in lonely and b not in lonely])
        return GraphInstance(g, subset=subset, sides=side)
    raise InfeasibleSpec(f"no graph generator for {tag}")


def _gen_split(rng, spec: GeneratorSpec) -> GraphInstance:
    n = spec.n
    if n < 4:
        raise InfeasibleSpec("split graphs with a diameter promise need four vertices")
    k = max(1, n // 3)
    clique, indep = list(range(k)), list(range(k, n))
    edges = [(a, b) for a, b in combinations(clique, 2)]
    nbrs = {v: set(_subset(rng, clique, spec.density)) or {int(rng.integers(k))} for v in indep}
    if spec.plant == "yes":
        hub = int(rng.integers(k))
        for v in indep:
            nbrs[v].add(hub)
    elif spec.plant == "no":
        if k < 2:
            raise InfeasibleSpec("two disjoint neighbourhoods need two clique vertices")
        a, b = indep[0], indep[1]
        cut = int(rng.integers(1, k))
        nbrs[a] = set(_subset(rng, clique[:cut], 0.7)) or {clique[0]}
        nbrs[b] = set(_subset(rng, clique[cut:], 0.7)) or {clique[-1]}
    for v, ns in nbrs.items():
        edges += [(v, u) for u in ns]
    perm = rng.permutation(n).tolist()
    g = UndirectedGraph.from_edges(n, [(perm[a], perm[b]) for a, b in edges])
    return GraphInstance(g)


def _gen_matrices(rng, spec: GeneratorSpec) -> BinaryMatrixPair:
    r = inner = cols = spec.n
    left = [_subset(rng, range(inner), spec.density) for _ in range(r)]
    right = [_subset(rng, range(cols), spec.density) for _ in range(inner)]
    if spec.plant == "yes":
        i, j = int(rng.integers(r)), int(rng.integers(cols))
        left[i] = [k for k in left[i] if j not in right[k]]
    elif spec.plant == "no":
        if inner == 0 or cols == 0:
            raise InfeasibleSpec("a zero-free product needs positive dimensions")
        hub = int(rng.integers(inner))
        right[hub] = list(range(cols))
        left = [sorted(set(row) | {hub}) for row in left]
    return BinaryMatrixPair(tuple(map(tuple, left)), inner, tuple(map(tuple, right)), cols)


def _gen_strings(rng, spec: GeneratorSpec) -> WildcardStringPair:
    def s():
        return "".join(rng.choice(list("01*"), size=spec.n, p=[0.4, 0.4, 0.2]).tolist())

    return WildcardStringPair(s(), s())


def generate(spec: GeneratorSpec):
    """Build one instance; planted answers are confirmed by the reference solver."""
    rng = _rng(spec.seed)
    tag = spec.problem
    base = tag[4:] if tag.startswith("big-") else tag
    if base in _FAMILY_GENS:
        inst = _gen_family(rng, spec)
        if tag == "orthogonal-binary-vectors":
            inst = family_to_vectors(inst)
    elif tag == "ksat-star":
        inst = _gen_ksat(rng, spec)
    elif tag == "zeros-matrix-multiplication":
        inst = _gen_matrices(rng, spec)
    elif tag == "local-string-align":
        inst = _gen_strings(rng, spec)
    else:
        inst = _gen_graph(rng, spec)
    if spec.plant != "random":
        verdict = solve(tag, inst)
        if verdict.kind != "bool":
            raise InfeasibleSpec(f"{tag} has no yes/no answer to plant")
        if verdict.value != (spec.plant == "yes"):
            raise AssertionError(f"planted {spec.plant} instance of {tag} solved to {verdict.value}")
    return inst


def generate_batch(spec: GeneratorSpec, count: int) -> list:
    """``count`` instances from consecutive seeds starting at ``spec.seed``."""
    return [generate(replace(spec, seed=spec.seed + i)) for i in range(count)]


def _draw_spec(tag: str, rng: np.random.Generator, plant: str) -> GeneratorSpec:
    big = tag.startswith("big-")
    fs = int(rng.integers(2, 25)) if big else int(rng.integers(0, 13))
    cap = int(big_bound(fs)) if big else 6
    return GeneratorSpec(
        tag,
        plant=plant,
        seed=int(rng.integers(2**63)),
        n=int(rng.integers(4 if "diameter" in tag else 1, 11)),
        ground_size=int(rng.integers(0, min(8, cap) + 1)),
        family_size=fs,
        density=float(rng.uniform(0.1, 0.9)),
        x_evals=int(rng.integers(0, 6)),
        y_evals=int(rng.integers(0, 6)),
        var_count=int(rng.integers(1, 4)),
        clause_count=int(rng.integers(0, 7)),
    )


def sample_instances(tag: str, count: int, seed: int = 0, planted: str = "random") -> list:
    """``count`` instances of varied size; ``planted`` is yes, no, random or mixed.

    Problems without a yes/no answer fall back to random instances.  Draws
    whose size conflicts with the plant are redrawn.
    """
    if planted not in PLANTS + ("mixed",):
        raise ValueError(f"planted must be one of {PLANTS + ('mixed',)}")
    rng = _rng(seed)
    boolean = get_problem(tag).big or tag not in _VALUED
    out = []
    for i in range(count):
        plant = ("yes", "no")[i % 2] if planted == "mixed" else planted
        if not boolean:
            plant = "random"
        for _ in range(_MAX_TRIES):
            try:
                out.append(generate(_draw_spec(tag, rng, plant)))
                break
            except InfeasibleSpec:
                continue
        else:
            raise InfeasibleSpec(f"could not draw a {plant} instance of {tag}")
    return out


_VALUED = frozenset({
    "maximal-elements-family",
    "subset-graph",
    "betweenness-centrality-vertex",
    "betweenness-centrality",
    "hyperbolicity-2-fixed-vertices",
    "local-string-align",
})
