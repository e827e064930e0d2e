"""Graph values, orderings, condensation and unweighted distances.

Vertices are dense integers ``0..n-1``.  Adjacency lists are sorted tuples and
every graph is immutable once built, so the same value can be shared freely
between callers.
"""

from __future__ import annotations

import heapq
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

# Reserved "unreachable" distance.  Fits int32; sums of up to 2**32 of them
# stay inside int64.
UNREACHABLE = int(np.iinfo(np.int32).max)


class CycleDetected(ValueError):
    """Raised when an operation that needs a DAG receives a cyclic graph."""

    def __init__(self, cycle: Sequence[int]):
        self.cycle = list(cycle)
        super().__init__(f"graph has a cycle through vertices {self.cycle}")


class GraphFormatError(ValueError):
    pass


def _normalise(n: int, adjacency: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(sorted(set(row))) for row in adjacency)
    if len(rows) != n:
        raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
    return rows


@dataclass(frozen=True)
class DirectedGraph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    allow_loops: bool = False
    edge_count: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        total = 0
        for v, row in enumerate(self.adjacency):
            prev = -1
            for w in row:
                if not 0 <= w < self.n:
                    raise ValueError(f"neighbor {w} of {v} out of range")
                if w <= prev:
                    raise ValueError(f"adjacency of {v} not strictly increasing")
                if w == v and not self.allow_loops:
                    raise ValueError(f"self-loop at {v} but loops are not allowed")
                prev = w
            total += len(row)
        object.__setattr__(self, "edge_count", total)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], allow_loops: bool = False) -> DirectedGraph:
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            rows[u].add(v)
        return cls(n, _normalise(n, rows), allow_loops)

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]], allow_loops: bool = False) -> DirectedGraph:
        return cls(len(adjacency), _normalise(len(adjacency), adjacency), allow_loops)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v, row in enumerate(self.adjacency):
            for w in row:
                yield v, w

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.edges())

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adjacency[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def reverse(self) -> DirectedGraph:
        return DirectedGraph.from_edges(self.n, ((w, v) for v, w in self.edges()), self.allow_loops)

    def has_loops(self) -> bool:
        return any(self.has_edge(v, v) for v in range(self.n))


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edge_count: int = field(init=False, compare=False)

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        total = 0
        for v, row in enumerate(self.adjacency):
            prev = -1
            for w in row:
                if not 0 <= w < self.n:
                    raise ValueError(f"neighbor {w} of {v} out of range")
                if w <= prev:
                    raise ValueError(f"adjacency of {v} not strictly increasing")
                if w == v:
                    raise ValueError(f"self-loop at {v}")
                prev = w
            total += len(row)
        for v, row in enumerate(self.adjacency):
            for w in row:
                row_w = self.adjacency[w]
                i = bisect_left(row_w, v)
                if i == len(row_w) or row_w[i] != v:
                    raise ValueError(f"adjacency not symmetric at ({v}, {w})")
        object.__setattr__(self, "edge_count", total // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> UndirectedGraph:
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, _normalise(n, rows))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each edge once, as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for v, row in enumerate(self.adjacency):
            for w in row:
                if v < w:
                    yield v, w

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adjacency[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def neighbor_sets(self) -> list[frozenset[int]]:
        return [frozenset(row) for row in self.adjacency]


Graph = Union[DirectedGraph, UndirectedGraph]


@dataclass(frozen=True)
class TopologicalOrder:
    order: tuple[int, ...]
    rank: tuple[int, ...]

    @classmethod
    def from_order(cls, order: Sequence[int]) -> TopologicalOrder:
        rank = [0] * len(order)
        for i, v in enumerate(order):
            rank[v] = i
        return cls(tuple(order), tuple(rank))

    def is_valid_for(self, g: DirectedGraph) -> bool:
        if sorted(self.order) != list(range(g.n)):
            return False
        return all(self.rank[v] < self.rank[w] for v, w in g.edges())


def _find_cycle(g: DirectedGraph, candidates: set[int]) -> list[int]:
    # every candidate has an in-edge from another candidate (Kahn leftovers),
    # so walking predecessors backwards must revisit a vertex.
    preds: dict[int, int] = {}
    for v in candidates:
        for w in g.adjacency[v]:
            if w in candidates and w not in preds:
                preds[w] = v
    v = min(candidates)
    seen: dict[int, int] = {}
    path: list[int] = []
    while v not in seen:
        seen[v] = len(path)
        path.append(v)
        v = preds[v]
    cycle = path[seen[v]:]
    cycle.reverse()
    return cycle


def topological_order(g: DirectedGraph) -> TopologicalOrder:
    """Kahn's method; among available vertices the smallest id goes first."""
    indeg = [0] * g.n
    for _, w in g.edges():
        indeg[w] += 1
    heap = [v for v in range(g.n) if indeg[v] == 0]
    heapq.heapify(heap)
    order: list[int] = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in g.adjacency[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) != g.n:
        placed = set(order)
        raise CycleDetected(_find_cycle(g, {v for v in range(g.n) if v not in placed}))
    return TopologicalOrder.from_order(order)


def strongly_connected_components(g: DirectedGraph) -> list[list[int]]:
    """Iterative Tarjan.  Components come out in reverse topological order."""
    index = [-1] * g.n
    low = [0] * g.n
    on_stack = [False] * g.n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(g.n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            row = g.adjacency[v]
            if i < len(row):
                work[-1] = (v, i + 1)
                w = row[i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return comps


def condense_scc(g: DirectedGraph) -> tuple[DirectedGraph, tuple[int, ...]]:
    """Collapse strongly connected components.

    Components are numbered by their smallest member, so an acyclic input
    condenses to itself.  Returns the component DAG and the vertex to
    component map.
    """
    comps = sorted(strongly_connected_components(g), key=lambda c: c[0])
    component_of = [0] * g.n
    for cid, comp in enumerate(comps):
        for v in comp:
            component_of[v] = cid
    dag_edges = {
        (component_of[v], component_of[w])
        for v, w in g.edges()
        if component_of[v] != component_of[w]
    }
    return DirectedGraph.from_edges(len(comps), dag_edges), tuple(component_of)


def bfs_distances(g: Graph, s: int) -> list[int]:
    if not 0 <= s < g.n:
        raise ValueError(f"source {s} out of range")
    dist = [UNREACHABLE] * g.n
    dist[s] = 0
    queue = deque([s])
    adj = g.adjacency
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for w in adj[v]:
            if dist[w] == UNREACHABLE:
                dist[w] = dv
                queue.append(w)
    return dist


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    dist: np.ndarray  # int32, UNREACHABLE for no path

    def __getitem__(self, key):
        return int(self.dist[key])

    def row(self, v: int) -> list[int]:
        return [int(x) for x in self.dist[v]]

    def eccentricities(self) -> np.ndarray:
        return self.dist.max(axis=1) if self.n else np.zeros(0, dtype=np.int32)

    def diameter(self) -> int:
        return int(self.dist.max()) if self.n else 0

    def farness(self) -> np.ndarray:
        return self.dist.sum(axis=1, dtype=np.int64)


def apsp_unweighted(g: Graph) -> DistanceMatrix:
    dist = np.empty((g.n, g.n), dtype=np.int32)
    for s in range(g.n):
        dist[s] = bfs_distances(g, s)
    dist.setflags(write=False)
    return DistanceMatrix(g.n, dist)


def reachability_sets(g: DirectedGraph) -> list[set[int]]:
    """Vertices reachable by a path of length >= 1, one BFS per source."""
    result = []
    for s in range(g.n):
        seen: set[int] = set()
        queue = deque(g.adjacency[s])
        seen.update(g.adjacency[s])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        result.append(seen)
    return result
