"""Comparability graph recognition: orient, then test the orientation.

The orientation step peels implication classes off the graph one at a time
(Golumbic's decomposition).  Within the remaining edge set, an arc ``(a, b)``
forces ``(a, c)`` whenever ``b`` and ``c`` are not adjacent there, and forces
``(c, b)`` whenever ``a`` and ``c`` are not adjacent.  If a class ever contains
both directions of one edge the graph is not a comparability graph.  The
decision itself is made by running the transitivity check on the orientation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Union

from .closure import is_transitive
from .graph import DirectedGraph, UndirectedGraph

Arc = tuple[int, int]


class ForcingContradiction(ValueError):
    """Both directions of ``edge`` are forced; ``chain`` certifies it.

    ``chain`` runs from ``edge`` to its reverse and each consecutive pair of
    arcs is related by one forcing step in the *input* graph.
    """

    def __init__(self, edge: Arc, chain: list[Arc]):
        self.edge = edge
        self.chain = chain
        super().__init__(f"edge {edge} is forced in both directions")


@dataclass(frozen=True)
class Orientation:
    base: UndirectedGraph
    directed: DirectedGraph

    def __post_init__(self):
        if self.directed.n != self.base.n or self.directed.edge_count != self.base.edge_count:
            raise ValueError("orientation must keep vertices and orient every edge once")
        for u, v in self.base.edges():
            if self.directed.has_edge(u, v) == self.directed.has_edge(v, u):
                raise ValueError(f"edge {(u, v)} is not oriented exactly once")


def _forced(arc: Arc, adj: list[set[int]]):
    a, b = arc
    for c in adj[a]:
        if c != b and c not in adj[b]:
            yield (a, c)
    for c in adj[b]:
        if c != a and c not in adj[a]:
            yield (c, b)


def forces(arc: Arc, other: Arc, g: UndirectedGraph) -> bool:
    """One forcing step between two arcs of ``g``."""
    (a, b), (c, d) = arc, other
    if a == c and b != d:
        return g.has_edge(a, b) and g.has_edge(a, d) and not g.has_edge(b, d)
    if b == d and a != c:
        return g.has_edge(a, b) and g.has_edge(c, b) and not g.has_edge(a, c)
    return False


def _contradiction_chain(g: UndirectedGraph) -> tuple[Arc, list[Arc]]:
    adj = [set(row) for row in g.adjacency]
    seen: set[Arc] = set()
    for root in g.edges():
        if root in seen:
            continue
        parent: dict[Arc, Optional[Arc]] = {root: None}
        queue = deque([root])
        while queue:
            arc = queue.popleft()
            for nxt in _forced(arc, adj):
                if nxt not in parent:
                    parent[nxt] = arc
                    queue.append(nxt)
        seen.update(parent)
        for arc in parent:
            rev = (arc[1], arc[0])
            if rev in parent:
                def path(x):
                    out = []
                    while x is not None:
                        out.append(x)
                        x = parent[x]
                    return out
                # arc -> root -> rev; forcing is symmetric so the reversed
                # half is still a valid chain
                return arc, path(arc) + path(rev)[::-1][1:]
    raise AssertionError("no implication class contains an edge in both directions")


def orient_transitively(g: UndirectedGraph) -> Orientation:
    """Orient every edge; the result is transitive whenever ``g`` is a comparability graph.

    Seeds are taken as the lexicographically smallest remaining edge, oriented
    low id to high id.  Raises :class:`ForcingContradiction` when a class
    forces an edge both ways.
    """
    adj = [set(row) for row in g.adjacency]
    remaining = sorted(g.edges())
    oriented: set[Arc] = set()
    pos = 0
    while True:
        while pos < len(remaining) and remaining[pos][1] not in adj[remaining[pos][0]]:
            pos += 1
        if pos == len(remaining):
            break
        seed = remaining[pos]
        cls = {seed}
        queue = deque([seed])
        while queue:
            arc = queue.popleft()
            for nxt in _forced(arc, adj):
                if nxt in cls:
                    continue
                if (nxt[1], nxt[0]) in cls:
                    edge, chain = _contradiction_chain(g)
                    raise ForcingContradiction(edge, chain)
                cls.add(nxt)
                queue.append(nxt)
        oriented |= cls
        for a, b in cls:
            adj[a].discard(b)
            adj[b].discard(a)
    directed = DirectedGraph.from_edges(g.n, oriented)
    return Orientation(g, directed)


@dataclass(frozen=True)
class ComparabilityVerdict:
    is_comparability: bool
    orientation: Optional[Orientation] = None
    contradiction: Optional[ForcingContradiction] = None
    # orientation that failed the transitivity check, with its violating triple
    rejected: Optional[Orientation] = None
    witness: Optional[tuple[int, int, int]] = None

    @property
    def certificate(self) -> Union[Orientation, ForcingContradiction, tuple, None]:
        if self.is_comparability:
            return self.orientation
        return self.contradiction if self.contradiction is not None else self.witness


def is_comparability(g: UndirectedGraph) -> ComparabilityVerdict:
    try:
        orientation = orient_transitively(g)
    except ForcingContradiction as exc:
        return ComparabilityVerdict(False, contradiction=exc)
    check = is_transitive(orientation.directed)
    if check.transitive:
        return ComparabilityVerdict(True, orientation=orientation)
    return ComparabilityVerdict(False, rejected=orientation, witness=check.witness)


def validate_contradiction(g: UndirectedGraph, exc: ForcingContradiction) -> bool:
    chain = exc.chain
    if len(chain) < 2 or chain[0] != exc.edge or chain[-1] != (exc.edge[1], exc.edge[0]):
        return False
    if not all(g.has_edge(*arc) for arc in chain):
        return False
    return all(forces(a, b, g) for a, b in zip(chain, chain[1:]))
