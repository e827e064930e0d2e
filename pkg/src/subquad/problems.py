"""Problem zoo: instance types and straightforward reference solvers.

Every solver here is the definitional (usually quadratic) algorithm.  They
are the ground truth that reductions are checked against, so they favour
obviousness over speed; the only tricks are bitmask set operations and a
vectorised diagonal scan for string alignment.

Set families use index semantics: two members are distinct when their
indices differ, even if the sets are equal.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional, Sequence

import numpy as np

from .graph import UNREACHABLE, UndirectedGraph, apsp_unweighted, bfs_distances

BIG_C = 1.0
BIG_K = 3


class InstanceError(ValueError):
    pass


class PromiseViolation(ValueError):
    pass


def big_bound(family_size: int, c: float = BIG_C, k: int = BIG_K) -> float:
    return c * math.log2(max(2, family_size)) ** k


def _mask(items) -> int:
    out = 0
    for x in items:
        out |= 1 << x
    return out


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class SetFamilyInstance:
    ground_size: int
    sets: tuple[tuple[int, ...], ...]
    big_flag: bool = False

    def __post_init__(self):
        if self.ground_size < 0:
            raise InstanceError("ground size must be non-negative")
        for i, s in enumerate(self.sets):
            if any(not 0 <= e < self.ground_size for e in s):
                raise InstanceError(f"set {i} has an element outside the ground set")
            if any(a >= b for a, b in zip(s, s[1:])):
                raise InstanceError(f"set {i} is not sorted and duplicate-free")
        if self.big_flag and not self.satisfies_big_promise():
            raise PromiseViolation(
                f"|X|={self.ground_size} exceeds {big_bound(len(self.sets)):.1f} for |C|={len(self.sets)}"
            )

    @classmethod
    def from_sets(cls, ground_size: int, sets: Sequence, big_flag: bool = False) -> SetFamilyInstance:
        return cls(ground_size, tuple(tuple(sorted(set(s))) for s in sets), big_flag)

    def satisfies_big_promise(self, c: float = BIG_C, k: int = BIG_K) -> bool:
        return self.ground_size <= big_bound(len(self.sets), c, k)

    def masks(self) -> list[int]:
        return [_mask(s) for s in self.sets]

    @property
    def full_mask(self) -> int:
        return (1 << self.ground_size) - 1


@dataclass(frozen=True)
class SplitCnfInstance:
    """Clauses in DIMACS literals; x variables are 1..nx, y variables nx+1..nx+ny."""

    x_var_count: int
    y_var_count: int
    clauses: tuple[tuple[int, ...], ...]
    x_evals: tuple[str, ...]
    y_evals: tuple[str, ...]
    k: int = 3

    def __post_init__(self):
        nvars = self.x_var_count + self.y_var_count
        for c in self.clauses:
            if len(c) > self.k:
                raise InstanceError(f"clause {c} wider than k={self.k}")
            for lit in c:
                if lit == 0 or abs(lit) > nvars:
                    raise InstanceError(f"literal {lit} references no declared variable")
        for evals, width in ((self.x_evals, self.x_var_count), (self.y_evals, self.y_var_count)):
            for e in evals:
                if len(e) != width or set(e) - {"0", "1"}:
                    raise InstanceError(f"evaluation {e!r} is not a {width}-bit string")

    def value_of(self, lit: int, a: str, b: str) -> bool:
        var = abs(lit)
        bit = a[var - 1] if var <= self.x_var_count else b[var - 1 - self.x_var_count]
        return (bit == "1") == (lit > 0)

    def satisfied_by_x(self, a: str) -> int:
        """Mask of clauses already satisfied by the x half ``a``."""
        out = 0
        for i, c in enumerate(self.clauses):
            if any(abs(l) <= self.x_var_count and self.value_of(l, a, "") for l in c):
                out |= 1 << i
        return out

    def satisfied_by_y(self, b: str) -> int:
        out = 0
        for i, c in enumerate(self.clauses):
            if any(abs(l) > self.x_var_count and self.value_of(l, "", b) for l in c):
                out |= 1 << i
        return out


@dataclass(frozen=True)
class WildcardStringPair:
    s1: str
    s2: str

    def __post_init__(self):
        for s in (self.s1, self.s2):
            if set(s) - set("01*"):
                raise InstanceError(f"string {s!r} uses symbols outside 0, 1, *")


@dataclass(frozen=True)
class BinaryMatrixPair:
    """``left`` is r x inner, ``right`` is inner x cols; rows list their one-columns."""

    left: tuple[tuple[int, ...], ...]
    inner: int
    right: tuple[tuple[int, ...], ...]
    cols: int

    def __post_init__(self):
        if len(self.right) != self.inner:
            raise InstanceError("right matrix needs one row per left column")
        for rows, width in ((self.left, self.inner), (self.right, self.cols)):
            for r in rows:
                if any(not 0 <= j < width for j in r) or any(a >= b for a, b in zip(r, r[1:])):
                    raise InstanceError(f"bad matrix row {r}")


@dataclass(frozen=True)
class VectorCollection:
    dim: int
    vectors: tuple[str, ...]

    def __post_init__(self):
        for v in self.vectors:
            if len(v) != self.dim or set(v) - {"0", "1"}:
                raise InstanceError(f"vector {v!r} is not a {self.dim}-bit string")


@dataclass(frozen=True)
class GraphInstance:
    """A graph plus whichever parameters the problem takes."""

    graph: UndirectedGraph
    vertex: Optional[int] = None
    pair: Optional[tuple[int, int]] = None
    threshold: Optional[Fraction] = None
    subset: Optional[tuple[int, ...]] = None
    # one side of a bipartition; the other side is the complement
    sides: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        n = self.graph.n
        for v in ([self.vertex] if self.vertex is not None else []) + list(self.pair or ()):
            if not 0 <= v < n:
                raise InstanceError(f"vertex {v} out of range")
        for group in (self.subset, self.sides):
            if group is not None and any(not 0 <= v < n for v in group):
                raise InstanceError("vertex subset out of range")
        if self.sides is not None and not is_bipartition(self.graph, self.sides):
            raise InstanceError("sides do not form a bipartition")


def is_bipartition(g: UndirectedGraph, side: Sequence[int]) -> bool:
    left = set(side)
    return all((u in left) != (v in left) for u, v in g.edges())


def vectors_to_family(vc: VectorCollection) -> SetFamilyInstance:
    return SetFamilyInstance(vc.dim, tuple(tuple(i for i, b in enumerate(v) if b == "1") for v in vc.vectors))


def family_to_vectors(sf: SetFamilyInstance) -> VectorCollection:
    out = []
    for s in sf.sets:
        row = ["0"] * sf.ground_size
        for e in s:
            row[e] = "1"
        out.append("".join(row))
    return VectorCollection(sf.ground_size, tuple(out))


@dataclass(frozen=True)
class Verdict:
    kind: str  # bool, rational, integer, vector, witness
    value: Any
    witness: Any = None


def _yes(w) -> Verdict:
    return Verdict("bool", True, w)


NO = Verdict("bool", False)


# -- set families ---------------------------------------------------------


def solve_ksat_star(i: SplitCnfInstance) -> Verdict:
    full = (1 << len(i.clauses)) - 1
    xs = [i.satisfied_by_x(a) for a in i.x_evals]
    ys = [i.satisfied_by_y(b) for b in i.y_evals]
    for p, ma in enumerate(xs):
        for q, mb in enumerate(ys):
            if ma | mb == full:
                return _yes((p, q))
    return NO


def _sorted_disjoint(a, b) -> bool:
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return False
        if a[i] < b[j]:
            i += 1
        else:
            j += 1
    return True


def solve_two_disjoint_sets(i: SetFamilyInstance) -> Verdict:
    sets = i.sets
    for p in range(len(sets)):
        for q in range(p + 1, len(sets)):
            if _sorted_disjoint(sets[p], sets[q]):
                return _yes((p, q))
    return NO


def solve_sperner(i: SetFamilyInstance) -> Verdict:
    """Looks for an ordered pair ``(p, q)`` with ``sets[p] <= sets[q]``."""
    masks = i.masks()
    for p, a in enumerate(masks):
        for q, b in enumerate(masks):
            if p != q and a & ~b == 0:
                return _yes((p, q))
    return NO


def solve_two_covering(i: SetFamilyInstance) -> Verdict:
    masks = i.masks()
    full = i.full_mask
    for p in range(len(masks)):
        for q in range(p + 1, len(masks)):
            if masks[p] | masks[q] == full:
                return _yes((p, q))
    return NO


def solve_maximal_elements(i: SetFamilyInstance) -> Verdict:
    """Indices of inclusion-maximal members; of equal members only the lowest index survives."""
    masks = i.masks()
    keep = []
    for p, a in enumerate(masks):
        dominated = False
        for q, b in enumerate(masks):
            if q == p or a & ~b:
                continue
            if a != b or q < p:
                dominated = True
                break
        if not dominated:
            keep.append(p)
    return Verdict("witness", tuple(keep))


def solve_subset_graph(i: SetFamilyInstance) -> Verdict:
    masks = i.masks()
    edges = tuple(
        (p, q) for p, a in enumerate(masks) for q, b in enumerate(masks) if p != q and a & ~b == 0
    )
    return Verdict("witness", edges)


def solve_orthogonal_vectors(vc: VectorCollection) -> Verdict:
    ints = [int(v, 2) if v else 0 for v in vc.vectors]
    for p in range(len(ints)):
        for q in range(p + 1, len(ints)):
            if ints[p] & ints[q] == 0:
                return _yes((p, q))
    return NO


# -- graphs ---------------------------------------------------------------


def _closed(g: UndirectedGraph) -> list[int]:
    return [_mask(row) | (1 << v) for v, row in enumerate(g.adjacency)]


def solve_dominated_vertex(gi: GraphInstance) -> Verdict:
    """Ordered pair ``(v, w)`` of distinct vertices with ``N(v) >= N(w)``."""
    g = gi.graph
    nb = [_mask(row) for row in g.adjacency]
    for v in range(g.n):
        for w in range(g.n):
            if v != w and nb[w] & ~nb[v] == 0:
                return _yes((v, w))
    return NO


def _path_counts(g: UndirectedGraph, s: int):
    dist = [-1] * g.n
    sigma = [0] * g.n
    dist[s] = 0
    sigma[s] = 1
    order = [s]
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
                order.append(w)
            if dist[w] == dist[v] + 1:
                sigma[w] += sigma[v]
    return dist, sigma, order


def betweenness_of_vertex(gi: GraphInstance) -> Verdict:
    """Exact sum over unordered pairs ``{s, t}`` avoiding ``v``; disconnected pairs add 0."""
    g, v = gi.graph, gi.vertex
    if v is None:
        raise InstanceError("betweenness needs a vertex")
    dv, sv, _ = _path_counts(g, v)
    total = Fraction(0)
    for s in range(g.n):
        if s == v or dv[s] < 0:
            continue
        ds, ss, _ = _path_counts(g, s)
        num = Fraction(0)
        for t in range(s + 1, g.n):
            if t != v and dv[t] >= 0 and ds[v] + dv[t] == ds[t]:
                num += Fraction(sv[t], ss[t])
        total += ss[v] * num
    return Verdict("rational", total)


def betweenness_all(gi: GraphInstance) -> Verdict:
    """Brandes accumulation with exact rationals, halved for unordered pairs."""
    g = gi.graph
    cb = [Fraction(0)] * g.n
    for s in range(g.n):
        dist, sigma, order = _path_counts(g, s)
        delta = [Fraction(0)] * g.n
        for w in reversed(order):
            for v in g.adjacency[w]:
                if dist[v] == dist[w] - 1:
                    delta[v] += Fraction(sigma[v], sigma[w]) * (1 + delta[w])
            if w != s:
                cb[w] += delta[w]
    return Verdict("vector", tuple(c / 2 for c in cb))


def farness(g: UndirectedGraph) -> list[Optional[int]]:
    """Sum of distances per vertex; ``None`` if some vertex is unreachable."""
    out: list[Optional[int]] = []
    for v in range(g.n):
        d = bfs_distances(g, v)
        out.append(None if UNREACHABLE in d else sum(d))
    return out


def closeness(g: UndirectedGraph) -> list[Optional[Fraction]]:
    """``1/farness``; 0 for vertices that do not reach everything, ``None`` when farness is 0."""
    out: list[Optional[Fraction]] = []
    for f in farness(g):
        if f is None:
            out.append(Fraction(0))
        elif f == 0:
            out.append(None)
        else:
            out.append(Fraction(1, f))
    return out


def min_closeness(gi: GraphInstance) -> Verdict:
    sigma = gi.threshold
    if sigma is None:
        raise InstanceError("closeness needs a threshold")
    for v, c in enumerate(closeness(gi.graph)):
        if c is not None and c < sigma:
            return _yes(v)
    return NO


def diameter(g: UndirectedGraph) -> int:
    return apsp_unweighted(g).diameter()


def diameter_2_or_3(gi: GraphInstance, check_promise: bool = False) -> Verdict:
    """True when the diameter is at most 2 (a complete graph counts as 2)."""
    d = diameter(gi.graph)
    if check_promise and d > 3:
        raise PromiseViolation(f"diameter {d} is not in {{2, 3}}")
    return Verdict("bool", d <= 2)


def is_split_graph(g: UndirectedGraph) -> bool:
    # degree-sequence test of Hammer and Simeone
    deg = sorted((len(r) for r in g.adjacency), reverse=True)
    m = 0
    for i, d in enumerate(deg):
        if d >= i:
            m = i + 1
    return sum(deg[:m]) == m * (m - 1) + sum(deg[m:])


def hyperbolicity_fixed_pair(gi: GraphInstance) -> Verdict:
    if gi.pair is None:
        raise InstanceError("hyperbolicity needs a vertex pair")
    x, y = gi.pair
    d = apsp_unweighted(gi.graph).dist.astype(np.int64)
    rest = np.array([v for v in range(gi.graph.n) if v not in (x, y)], dtype=np.int64)
    if rest.size < 2:
        return Verdict("integer", 0)
    vi, wi = np.triu_indices(rest.size, k=1)
    v, w = rest[vi], rest[wi]
    sums = np.stack([d[x, y] + d[v, w], d[x, v] + d[y, w], d[x, w] + d[y, v]])
    sums.sort(axis=0)
    hyp = sums[2] - sums[1]
    best = int(np.argmax(hyp))
    return Verdict("integer", int(hyp[best]), (int(v[best]), int(w[best])))


def quadruple_hyperbolicity(d, x, y, v, w) -> int:
    sums = sorted((d[x][y] + d[v][w], d[x][v] + d[y][w], d[x][w] + d[y][v]))
    return sums[2] - sums[1]


def solve_3_dominating(gi: GraphInstance) -> Verdict:
    """A dominating set of at most three vertices (exactly three when ``n >= 3``)."""
    g = gi.graph
    n = g.n
    if n <= 3:
        return _yes(tuple(range(n)))
    closed = _closed(g)
    full = (1 << n) - 1
    for v in range(n):
        for w in range(v + 1, n):
            missing = full & ~(closed[v] | closed[w])
            if not missing:
                x = next(x for x in range(n) if x not in (v, w))
                return _yes(tuple(sorted((v, w, x))))
            # whoever completes the triple must dominate the lowest missing vertex
            y = (missing & -missing).bit_length() - 1
            for x in _bits(closed[y]):
                if x not in (v, w) and missing & ~closed[x] == 0:
                    return _yes(tuple(sorted((v, w, x))))
    return NO


def solve_subset_2_dominating(gi: GraphInstance, equality: bool = False) -> Verdict:
    """Pair of distinct vertices whose closed neighbourhoods cover ``subset``.

    With ``equality`` the union must be exactly the subset.
    """
    g = gi.graph
    if gi.subset is None:
        raise InstanceError("subset domination needs a target subset")
    target = _mask(gi.subset)
    closed = _closed(g)
    for v in range(g.n):
        for w in range(v + 1, g.n):
            u = closed[v] | closed[w]
            if (u == target) if equality else (target & ~u == 0):
                return _yes((v, w))
    return NO


def zeros_in_matmul(p: BinaryMatrixPair) -> Verdict:
    full = (1 << p.cols) - 1
    right = [_mask(r) for r in p.right]
    for i, row in enumerate(p.left):
        acc = 0
        for k in row:
            acc |= right[k]
        if acc != full:
            missing = full & ~acc
            return _yes((i, (missing & -missing).bit_length() - 1))
    return NO


def _matches(a: str, b: str) -> bool:
    return a == b or a == "*" or b == "*"


def local_align_wildcard(p: WildcardStringPair) -> Verdict:
    """Longest pair of equal-length windows matching position by position.

    Witness is ``(start1, start2)``; one numpy pass per diagonal.
    """
    a = np.frombuffer(p.s1.encode(), dtype=np.uint8)
    b = np.frombuffer(p.s2.encode(), dtype=np.uint8)
    star = ord("*")
    best, where = 0, (0, 0)
    for off in range(-(len(a) - 1), len(b)):
        i0, j0 = max(0, -off), max(0, off)
        length = min(len(a) - i0, len(b) - j0)
        if length <= best:
            continue
        x, y = a[i0 : i0 + length], b[j0 : j0 + length]
        ok = (x == y) | (x == star) | (y == star)
        breaks = np.flatnonzero(~np.concatenate(([False], ok, [False])))
        runs = np.diff(breaks) - 1
        k = int(np.argmax(runs))
        if runs[k] > best:
            best = int(runs[k])
            where = (i0 + int(breaks[k]), j0 + int(breaks[k]))
    return Verdict("integer", best, where if best else None)


# -- witness checks -------------------------------------------------------


def _pair_ok(w, n) -> bool:
    return isinstance(w, tuple) and len(w) == 2 and all(0 <= x < n for x in w) and w[0] != w[1]


def check_witness(tag: str, inst, verdict: Verdict) -> bool:
    """Re-validate a verdict's witness directly against the instance."""
    w = verdict.witness
    if verdict.kind == "bool" and not verdict.value:
        return w is None
    family = {"two-disjoint-sets", "sperner-family", "two-covering"}
    base = tag[4:] if tag.startswith("big-") else tag
    if base in family:
        if not _pair_ok(w, len(inst.sets)):
            return False
        a, b = (set(inst.sets[x]) for x in w)
        if base == "two-disjoint-sets":
            return not a & b
        if base == "sperner-family":
            return a <= b
        return len(a | b) == inst.ground_size
    if tag == "ksat-star":
        p, q = w
        a, b = inst.x_evals[p], inst.y_evals[q]
        return all(any(inst.value_of(l, a, b) for l in c) for c in inst.clauses)
    if tag == "orthogonal-binary-vectors":
        return _pair_ok(w, len(inst.vectors)) and all(
            not (x == y == "1") for x, y in zip(inst.vectors[w[0]], inst.vectors[w[1]])
        )
    if tag in ("graph-dominated-vertex", "bip-graph-dominated-vertex"):
        g = inst.graph
        return _pair_ok(w, g.n) and set(g.adjacency[w[1]]) <= set(g.adjacency[w[0]])
    if tag == "minimum-closeness-centrality":
        c = closeness(inst.graph)[w]
        return c is not None and c < inst.threshold
    if tag in ("3-dominating-set", "bipartite-3-dominating-set"):
        g = inst.graph
        if len(set(w)) != len(w) or len(w) != min(3, g.n):
            return False
        covered = set(w).union(*(g.adjacency[x] for x in w))
        return len(covered) == g.n
    if tag == "bipartite-subset-2-dominating-set":
        g = inst.graph
        if not _pair_ok(w, g.n):
            return False
        covered = set(w) | set(g.adjacency[w[0]]) | set(g.adjacency[w[1]])
        return set(inst.subset) <= covered
    if tag == "zeros-matrix-multiplication":
        i, j = w
        return not any(j in inst.right[k] for k in inst.left[i])
    if tag == "hyperbolicity-2-fixed-vertices":
        if w is None:
            return verdict.value == 0
        x, y = inst.pair
        d = [bfs_distances(inst.graph, s) for s in range(inst.graph.n)]
        return not {x, y} & set(w) and quadruple_hyperbolicity(d, x, y, *w) == verdict.value
    if tag == "local-string-align":
        if w is None:
            return verdict.value == 0
        i, j = w
        n = verdict.value
        s1, s2 = inst.s1[i : i + n], inst.s2[j : j + n]
        return len(s1) == len(s2) == n and all(_matches(a, b) for a, b in zip(s1, s2))
    # value-only verdicts carry nothing to check
    return True


# -- sizes and registry ---------------------------------------------------


def instance_size(inst) -> int:
    """Element count of the natural sparse encoding."""
    if isinstance(inst, SetFamilyInstance):
        return inst.ground_size + len(inst.sets) + sum(len(s) for s in inst.sets)
    if isinstance(inst, SplitCnfInstance):
        return (
            inst.x_var_count + inst.y_var_count + sum(len(c) for c in inst.clauses) + len(inst.clauses)
            + len(inst.x_evals) * inst.x_var_count + len(inst.y_evals) * inst.y_var_count
        )
    if isinstance(inst, GraphInstance):
        extra = len(inst.subset or ()) + len(inst.sides or ())
        return inst.graph.n + inst.graph.edge_count + extra
    if isinstance(inst, UndirectedGraph):
        return inst.n + inst.edge_count
    if isinstance(inst, WildcardStringPair):
        return len(inst.s1) + len(inst.s2)
    if isinstance(inst, BinaryMatrixPair):
        return (
            len(inst.left) + inst.inner + inst.cols
            + sum(len(r) for r in inst.left) + sum(len(r) for r in inst.right)
        )
    if isinstance(inst, VectorCollection):
        return inst.dim + len(inst.vectors) + sum(v.count("1") for v in inst.vectors)
    raise TypeError(f"no size for {type(inst).__name__}")


@dataclass(frozen=True)
class Problem:
    tag: str
    instance_type: type
    solve: Callable[[Any], Verdict]
    big: bool = False
    bipartite: bool = False
    split: bool = False
    description: str = field(default="", compare=False)


PROBLEMS: dict[str, Problem] = {}


def _register(*problems: Problem) -> None:
    for p in problems:
        PROBLEMS[p.tag] = p


_register(
    Problem("ksat-star", SplitCnfInstance, solve_ksat_star, description="split CNF with explicit half evaluations"),
    Problem("two-disjoint-sets", SetFamilyInstance, solve_two_disjoint_sets),
    Problem("big-two-disjoint-sets", SetFamilyInstance, solve_two_disjoint_sets, big=True),
    Problem("sperner-family", SetFamilyInstance, solve_sperner),
    Problem("big-sperner-family", SetFamilyInstance, solve_sperner, big=True),
    Problem("two-covering", SetFamilyInstance, solve_two_covering),
    Problem("big-two-covering", SetFamilyInstance, solve_two_covering, big=True),
    Problem("maximal-elements-family", SetFamilyInstance, solve_maximal_elements),
    Problem("subset-graph", SetFamilyInstance, solve_subset_graph),
    Problem("orthogonal-binary-vectors", VectorCollection, solve_orthogonal_vectors),
    Problem("graph-dominated-vertex", GraphInstance, solve_dominated_vertex),
    Problem("bip-graph-dominated-vertex", GraphInstance, solve_dominated_vertex, bipartite=True),
    Problem("betweenness-centrality-vertex", GraphInstance, betweenness_of_vertex),
    Problem("betweenness-centrality", GraphInstance, betweenness_all),
    Problem("minimum-closeness-centrality", GraphInstance, min_closeness),
    Problem("graph-diameter-2-or-3", GraphInstance, diameter_2_or_3),
    Problem("split-graph-diameter-2-or-3", GraphInstance, diameter_2_or_3, split=True),
    Problem("hyperbolicity-2-fixed-vertices", GraphInstance, hyperbolicity_fixed_pair),
    Problem("zeros-matrix-multiplication", BinaryMatrixPair, zeros_in_matmul),
    Problem("3-dominating-set", GraphInstance, solve_3_dominating),
    Problem("bipartite-3-dominating-set", GraphInstance, solve_3_dominating, bipartite=True),
    Problem("bipartite-subset-2-dominating-set", GraphInstance, solve_subset_2_dominating, bipartite=True),
    Problem("local-string-align", WildcardStringPair, local_align_wildcard),
)


class UnknownProblem(KeyError):
    pass


def get_problem(tag: str) -> Problem:
    try:
        return PROBLEMS[tag]
    except KeyError:
        raise UnknownProblem(tag) from None


def validate_instance(tag: str, inst) -> None:
    """Type and promise checks beyond what the instance constructors enforce."""
    p = get_problem(tag)
    if not isinstance(inst, p.instance_type):
        raise InstanceError(f"{tag} expects {p.instance_type.__name__}, got {type(inst).__name__}")
    if p.big and not inst.satisfies_big_promise():
        raise PromiseViolation(f"{tag} instance breaks the polylog ground-set promise")
    if p.bipartite and inst.sides is None:
        raise InstanceError(f"{tag} needs a bipartition")
    if p.split and not is_split_graph(inst.graph):
        raise PromiseViolation(f"{tag} instance is not a split graph")


def solve(tag: str, inst) -> Verdict:
    return get_problem(tag).solve(inst)
