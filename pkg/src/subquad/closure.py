"""Transitive closure and transitivity checking.

``gk_closure`` is the reverse-topological sweep that builds every vertex's
reach set from the reach sets of its successors.  Reach sets start as sorted
id lists and are promoted once (never demoted) to Python-int bitsets when they
grow past ``n/64 * log2(n)`` entries.  ``bitmatrix_closure`` squares a packed
boolean matrix, and ``hybrid_closure`` switches from the first to the second
once the closure is known to be dense.
"""

from __future__ import annotations

import enum
import math
from bisect import bisect_left, insort
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

import numpy as np

from .graph import DirectedGraph, condense_scc, topological_order

DEFAULT_OMEGA = 2.807


class Method(enum.Enum):
    GK = "gk"
    BITMATRIX = "matrix"


class InvalidExponent(ValueError):
    pass


@dataclass(frozen=True)
class ClosureResult:
    closure: DirectedGraph
    input_edges: int
    closure_edges: int
    method_used: Method
    work_counter: int
    # per vertex w: how many unions read N'(w); empty for the matrix method
    union_reads: tuple[int, ...] = ()

    def edge_set(self) -> set[tuple[int, int]]:
        return self.closure.edge_set()


@dataclass(frozen=True)
class CostProfile:
    alpha: float
    small_set_work: int
    large_set_work: int

    def small_bound(self, input_edges: int, n: int) -> float:
        return input_edges * n ** self.alpha

    def large_bound(self, closure_edges: int, n: int) -> float:
        return closure_edges ** 2 / n ** (2 * self.alpha - 1)


ReachSet = Union[list, int]


def promotion_threshold(n: int) -> float:
    return n / 64 * math.log2(n) if n > 1 else 0.0


def _merge(a: list, b: list) -> list:
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x < y:
            out.append(x)
            i += 1
        elif y < x:
            out.append(y)
            j += 1
        else:
            out.append(x)
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return out


def _to_bits(s: ReachSet) -> int:
    if isinstance(s, int):
        return s
    bits = 0
    for x in s:
        bits |= 1 << x
    return bits


def _bit_ids(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def _contains(s: ReachSet, x: int) -> bool:
    if isinstance(s, int):
        return (s >> x) & 1 == 1
    i = bisect_left(s, x)
    return i < len(s) and s[i] == x


def _size(s: ReachSet) -> int:
    return s.bit_count() if isinstance(s, int) else len(s)


def _gk_sweep(g: DirectedGraph, edge_budget: Optional[float] = None):
    """Run the sweep; return ``None`` once the running edge total exceeds the budget."""
    topo = topological_order(g)
    rank = topo.rank
    n = g.n
    limit = promotion_threshold(n)
    reach: list[ReachSet] = [[] for _ in range(n)]
    sizes = [0] * n
    reads = [0] * n
    total = 0
    # one unit per vertex and per inspected arc, plus union reads
    work = n + g.edge_count
    for v in reversed(topo.order):
        cur: ReachSet = []
        # successors in topological order: once w is reached through an
        # earlier successor, N'(w) is already inside N'(v)
        for w in sorted(g.adjacency[v], key=rank.__getitem__):
            if _contains(cur, w):
                continue
            rw = reach[w]
            work += sizes[w]
            reads[w] += 1
            if isinstance(cur, list) and isinstance(rw, list):
                cur = _merge(cur, rw) if rw else cur
                insort(cur, w)
                if len(cur) >= limit:
                    cur = _to_bits(cur)
            else:
                cur = _to_bits(cur) | _to_bits(rw) | (1 << w)
        reach[v] = cur
        sizes[v] = _size(cur)
        total += sizes[v]
        if edge_budget is not None and total > edge_budget:
            return None
    rows = [tuple(_bit_ids(s)) if isinstance(s, int) else tuple(s) for s in reach]
    return rows, total, work, tuple(reads)


def gk_closure(g: DirectedGraph) -> ClosureResult:
    rows, total, work, reads = _gk_sweep(g)
    return ClosureResult(
        closure=DirectedGraph(g.n, tuple(rows)),
        input_edges=g.edge_count,
        closure_edges=total,
        method_used=Method.GK,
        work_counter=work,
        union_reads=reads,
    )


def _pack(g: DirectedGraph) -> np.ndarray:
    n = g.n
    words = max(1, (n + 63) // 64)
    dense = np.zeros((n, words * 64), dtype=bool)
    for v, row in enumerate(g.adjacency):
        dense[v, list(row)] = True
    packed = np.packbits(dense, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8")


def _unpack(packed: np.ndarray, n: int) -> np.ndarray:
    return np.unpackbits(packed.view(np.uint8), axis=1, bitorder="little")[:, :n].astype(bool)


def bitmatrix_closure(g: DirectedGraph) -> ClosureResult:
    """Closure by repeated boolean squaring ``R <- R | R.R`` on 64-bit words."""
    topological_order(g)  # raises CycleDetected
    n = g.n
    if n == 0:
        return ClosureResult(g, 0, 0, Method.BITMATRIX, 0)
    r = _pack(g)
    words = r.shape[1]
    work = 0
    squarings = max(1, math.ceil(math.log2(n)))
    for _ in range(squarings):
        bits = _unpack(r, n)
        nxt = r.copy()
        for i in range(n):
            idx = np.flatnonzero(bits[i])
            if idx.size:
                nxt[i] |= np.bitwise_or.reduce(r[idx], axis=0)
                work += int(idx.size) * words
        if np.array_equal(nxt, r):
            break
        r = nxt
    bits = _unpack(r, n)
    rows = tuple(tuple(int(x) for x in np.flatnonzero(bits[i])) for i in range(n))
    closure = DirectedGraph(n, rows)
    return ClosureResult(closure, g.edge_count, closure.edge_count, Method.BITMATRIX, work)


def switch_threshold(n: int, omega_eff: float) -> float:
    return n ** ((3 * omega_eff - 1) / 4)


def hybrid_closure(g: DirectedGraph, omega_eff: float = DEFAULT_OMEGA) -> ClosureResult:
    """Sweep until the closure holds ``n**((3w-1)/4)`` edges, then square matrices."""
    if not 2 < omega_eff <= 3:
        raise InvalidExponent(f"omega_eff must lie in (2, 3], got {omega_eff}")
    swept = _gk_sweep(g, edge_budget=switch_threshold(g.n, omega_eff))
    if swept is None:
        return bitmatrix_closure(g)
    rows, total, work, reads = swept
    return ClosureResult(DirectedGraph(g.n, tuple(rows)), g.edge_count, total, Method.GK, work, reads)


def cost_profile(result: ClosureResult, alpha: Optional[float] = None) -> CostProfile:
    """Split the sweep's union work at reach-set size ``n**alpha``.

    Without an explicit ``alpha`` the reporting value
    ``clamp(log_n(m)/2 + 1/2, 1/2, 1)`` is used.
    """
    n = result.closure.n
    m = result.closure_edges
    if alpha is None:
        if n > 1 and m > 1:
            alpha = min(1.0, max(0.5, 0.5 * math.log(m, n) + 0.5))
        else:
            alpha = 0.5
    cut = n ** alpha
    small = large = 0
    for w, reads in enumerate(result.union_reads):
        if reads:
            size = len(result.closure.adjacency[w])
            if size <= cut:
                small += reads * size
            else:
                large += reads * size
    return CostProfile(alpha, small, large)


class TransitivityCheck(NamedTuple):
    transitive: bool
    witness: Optional[tuple[int, int, int]]
    work: int


def is_transitive(g: DirectedGraph) -> TransitivityCheck:
    """Check ``N(w) <= N(v)`` for every edge ``(v, w)``, stopping at the first miss.

    The condition is the definition of a transitive relation, so it holds for
    cyclic graphs as well; vertices are visited in reverse topological order
    of the condensation, mirroring the closure sweep.  On failure the witness
    ``(v, w, x)`` has edges ``(v, w)`` and ``(w, x)`` but not ``(v, x)``.
    """
    dag, comp = condense_scc(g)
    order = topological_order(dag).order
    members: list[list[int]] = [[] for _ in range(dag.n)]
    for v in range(g.n):
        members[comp[v]].append(v)
    nbrs = [frozenset(row) for row in g.adjacency]
    work = 0
    for c in reversed(order):
        for v in members[c]:
            nv = nbrs[v]
            for w in g.adjacency[v]:
                work += len(g.adjacency[w])
                if not nbrs[w] <= nv:
                    x = next(x for x in g.adjacency[w] if x not in nv)
                    return TransitivityCheck(False, (v, w, x), work)
    return TransitivityCheck(True, None, work)


def closure_of_general_digraph(
    g: DirectedGraph, method: str = "gk", omega_eff: float = DEFAULT_OMEGA
) -> ClosureResult:
    """Close an arbitrary digraph through its condensation.

    A vertex gets a self-loop exactly when it lies on a cycle: its component
    has two or more members, or the input already loops on it.
    """
    dag, comp = condense_scc(g)
    if method == "gk":
        inner = gk_closure(dag)
    elif method == "matrix":
        inner = bitmatrix_closure(dag)
    elif method == "hybrid":
        inner = hybrid_closure(dag, omega_eff)
    else:
        raise ValueError(f"unknown closure method {method!r}")
    members: list[list[int]] = [[] for _ in range(dag.n)]
    for v in range(g.n):
        members[comp[v]].append(v)
    cyclic = [len(m) > 1 for m in members]
    for v in range(g.n):
        if g.allow_loops and g.has_edge(v, v):
            cyclic[comp[v]] = True
    comp_rows = []
    for c in range(dag.n):
        out = []
        for d in inner.closure.adjacency[c]:
            out.extend(members[d])
        if cyclic[c]:
            out.extend(members[c])
        comp_rows.append(tuple(sorted(out)))
    rows = tuple(comp_rows[comp[v]] for v in range(g.n))
    closure = DirectedGraph(g.n, rows, allow_loops=any(cyclic))
    return ClosureResult(
        closure=closure,
        input_edges=g.edge_count,
        closure_edges=closure.edge_count,
        method_used=inner.method_used,
        work_counter=inner.work_counter,
    )
