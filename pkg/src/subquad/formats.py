"""Plain-text instance formats.

Graphs: ``dg n m`` or ``ug n m`` then ``m`` lines ``u v``; optional trailing
parameter lines ``vertex v``, ``pair x y``, ``threshold p/q``,
``subset k v1 .. vk`` and ``sides k v1 .. vk``.  Set families: ``sf |X| |C|``
then one ``size e1 e2 ..`` line per member, optional ``big``.  Split CNF:
``kcnf* nx ny k``, 0-terminated DIMACS clause lines, then ``xevals t`` and
``yevals t`` blocks of bit strings.  Matrix pairs: two ``bm rows cols``
blocks of ``k c1 .. ck`` rows.  Vectors: ``ov d t`` then bit strings.
Wildcard string pairs are two bare lines over ``0``, ``1``, ``*``.

Lines starting with ``#`` are comments everywhere except in string pairs.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Union

from .graph import DirectedGraph, GraphFormatError, UndirectedGraph
from .problems import (
    BinaryMatrixPair,
    GraphInstance,
    InstanceError,
    SetFamilyInstance,
    SplitCnfInstance,
    VectorCollection,
    WildcardStringPair,
)


class FormatError(GraphFormatError):
    pass


def _lines(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line.split())
    return out


def _ints(tokens, what: str) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"expected integers in {what}: {' '.join(tokens)}") from None


# -- graphs ---------------------------------------------------------------


def write_graph(g: Union[DirectedGraph, UndirectedGraph]) -> str:
    kind = "dg" if isinstance(g, DirectedGraph) else "ug"
    edges = sorted(g.edges())
    return "".join([f"{kind} {g.n} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


def write_graph_instance(gi: GraphInstance) -> str:
    parts = [write_graph(gi.graph)]
    if gi.vertex is not None:
        parts.append(f"vertex {gi.vertex}\n")
    if gi.pair is not None:
        parts.append(f"pair {gi.pair[0]} {gi.pair[1]}\n")
    if gi.threshold is not None:
        parts.append(f"threshold {gi.threshold.numerator}/{gi.threshold.denominator}\n")
    for name in ("subset", "sides"):
        ids = getattr(gi, name)
        if ids is not None:
            parts.append(" ".join([name, str(len(ids))] + [str(v) for v in ids]) + "\n")
    return "".join(parts)


def _parse_graph(lines) -> tuple[Union[DirectedGraph, UndirectedGraph], list]:
    head = lines[0]
    if len(head) != 3 or head[0] not in ("dg", "ug"):
        raise FormatError(f"bad graph header {' '.join(head)!r}")
    n, m = _ints(head[1:], "graph header")
    if len(lines) < m + 1:
        raise FormatError(f"header promises {m} edges, found {len(lines) - 1} lines")
    edges = []
    seen = set()
    for toks in lines[1 : m + 1]:
        if len(toks) != 2:
            raise FormatError(f"bad edge line {' '.join(toks)!r}")
        u, v = _ints(toks, "edge line")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge ({u}, {v}) out of range for n={n}")
        key = (u, v) if head[0] == "dg" else (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"repeated edge {key}")
        seen.add(key)
        edges.append((u, v))
    try:
        if head[0] == "dg":
            g = DirectedGraph.from_edges(n, edges, allow_loops=any(u == v for u, v in edges))
        else:
            g = UndirectedGraph.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    return g, lines[m + 1 :]


def read_graph(text: str) -> Union[DirectedGraph, UndirectedGraph]:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty graph file")
    g, rest = _parse_graph(lines)
    if rest:
        raise FormatError(f"unexpected trailing line {' '.join(rest[0])!r}")
    return g


def read_graph_instance(text: str) -> GraphInstance:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty graph file")
    g, rest = _parse_graph(lines)
    if not isinstance(g, UndirectedGraph):
        raise FormatError("problem instances use undirected graphs")
    params: dict = {}
    for toks in rest:
        key = toks[0]
        if key == "vertex" and len(toks) == 2:
            params["vertex"] = _ints(toks[1:], "vertex")[0]
        elif key == "pair" and len(toks) == 3:
            params["pair"] = tuple(_ints(toks[1:], "pair"))
        elif key == "threshold" and len(toks) == 2:
            try:
                params["threshold"] = Fraction(toks[1])
            except (ValueError, ZeroDivisionError):
                raise FormatError(f"bad threshold {toks[1]!r}") from None
        elif key in ("subset", "sides") and len(toks) >= 2:
            count, *ids = _ints(toks[1:], key)
            if count != len(ids):
                raise FormatError(f"{key} line declares {count} ids, lists {len(ids)}")
            params[key] = tuple(ids)
        else:
            raise FormatError(f"unknown parameter line {' '.join(toks)!r}")
    try:
        return GraphInstance(g, **params)
    except InstanceError as exc:
        raise FormatError(str(exc)) from None


# -- set families ---------------------------------------------------------


def write_family(sf: SetFamilyInstance) -> str:
    parts = [f"sf {sf.ground_size} {len(sf.sets)}\n"]
    parts += [" ".join([str(len(s))] + [str(e) for e in s]) + "\n" for s in sf.sets]
    if sf.big_flag:
        parts.append("big\n")
    return "".join(parts)


def read_family(text: str) -> SetFamilyInstance:
    lines = _lines(text)
    if not lines or lines[0][0] != "sf" or len(lines[0]) != 3:
        raise FormatError("set family must start with 'sf |X| |C|'")
    x, count = _ints(lines[0][1:], "family header")
    body = lines[1:]
    big = bool(body) and body[-1] == ["big"]
    if big:
        body = body[:-1]
    if len(body) != count:
        raise FormatError(f"header promises {count} sets, found {len(body)}")
    sets = []
    for toks in body:
        size, *elems = _ints(toks, "set line")
        if size != len(elems):
            raise FormatError(f"set line declares {size} elements, lists {len(elems)}")
        if len(set(elems)) != len(elems):
            raise FormatError(f"set line repeats an element: {' '.join(toks)}")
        sets.append(sorted(elems))
    try:
        return SetFamilyInstance(x, tuple(tuple(s) for s in sets), big)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


# -- split CNF ------------------------------------------------------------


def write_cnf(i: SplitCnfInstance) -> str:
    parts = [f"kcnf* {i.x_var_count} {i.y_var_count} {i.k}\n"]
    parts += [" ".join(str(l) for l in c) + (" 0\n" if c else "0\n") for c in i.clauses]
    parts.append(f"xevals {len(i.x_evals)}\n")
    parts += [e + "\n" for e in i.x_evals]
    parts.append(f"yevals {len(i.y_evals)}\n")
    parts += [e + "\n" for e in i.y_evals]
    return "".join(parts)


def _evals(lines, pos: int, name: str, width: int):
    if pos >= len(lines) or lines[pos][0] != name or len(lines[pos]) != 2:
        raise FormatError(f"expected '{name} t' block")
    (t,) = _ints(lines[pos][1:], name)
    block = lines[pos + 1 : pos + 1 + t]
    if len(block) != t:
        raise FormatError(f"{name} block promises {t} evaluations")
    out = []
    for toks in block:
        # a zero-width evaluation is written as an empty line and never reaches here
        out.append(toks[0] if toks else "")
    return tuple(out), pos + 1 + t


def read_cnf(text: str) -> SplitCnfInstance:
    raw = [l.strip() for l in text.splitlines() if not l.strip().startswith("#")]
    lines = [l.split() if l else [] for l in raw]
    while lines and not lines[0]:
        lines.pop(0)
    if not lines or lines[0][0] != "kcnf*" or len(lines[0]) != 4:
        raise FormatError("split CNF must start with 'kcnf* nx ny k'")
    nx, ny, k = _ints(lines[0][1:], "cnf header")
    pos = 1
    clauses = []
    while pos < len(lines) and (not lines[pos] or lines[pos][0] != "xevals"):
        if lines[pos]:
            lits = _ints(lines[pos], "clause")
            if lits[-1] != 0 or 0 in lits[:-1]:
                raise FormatError(f"clause line must end with a single 0: {' '.join(lines[pos])}")
            clauses.append(tuple(lits[:-1]))
        pos += 1
    # evaluation blocks keep blank lines, which encode zero-width assignments
    xe, pos = _evals(lines, pos, "xevals", nx)
    ye, pos = _evals(lines, pos, "yevals", ny)
    if any(lines[pos:]):
        raise FormatError("trailing content after yevals block")
    try:
        return SplitCnfInstance(nx, ny, tuple(clauses), xe, ye, k)
    except InstanceError as exc:
        raise FormatError(str(exc)) from None


# -- strings, matrices, vectors -------------------------------------------


def write_strings(p: WildcardStringPair) -> str:
    return f"{p.s1}\n{p.s2}\n"


def read_strings(text: str) -> WildcardStringPair:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) != 2:
        raise FormatError(f"expected exactly two string lines, found {len(lines)}")
    try:
        return WildcardStringPair(lines[0].strip(), lines[1].strip())
    except InstanceError as exc:
        raise FormatError(str(exc)) from None


def _write_matrix(rows, cols) -> str:
    parts = [f"bm {len(rows)} {cols}\n"]
    parts += [" ".join([str(len(r))] + [str(c) for c in r]) + "\n" for r in rows]
    return "".join(parts)


def write_matrices(p: BinaryMatrixPair) -> str:
    return _write_matrix(p.left, p.inner) + _write_matrix(p.right, p.cols)


def read_matrices(text: str) -> BinaryMatrixPair:
    lines = _lines(text)
    blocks = []
    pos = 0
    for _ in range(2):
        if pos >= len(lines) or lines[pos][0] != "bm" or len(lines[pos]) != 3:
            raise FormatError("expected 'bm rows cols' header")
        r, c = _ints(lines[pos][1:], "matrix header")
        rows = []
        for toks in lines[pos + 1 : pos + 1 + r]:
            count, *cols = _ints(toks, "matrix row")
            if count != len(cols):
                raise FormatError(f"matrix row declares {count} entries, lists {len(cols)}")
            rows.append(tuple(sorted(cols)))
        if len(rows) != r:
            raise FormatError(f"matrix header promises {r} rows")
        blocks.append((tuple(rows), c))
        pos += 1 + r
    if pos != len(lines):
        raise FormatError("trailing content after second matrix")
    (left, inner), (right, cols) = blocks
    try:
        return BinaryMatrixPair(left, inner, right, cols)
    except InstanceError as exc:
        raise FormatError(str(exc)) from None


def write_vectors(vc: VectorCollection) -> str:
    return f"ov {vc.dim} {len(vc.vectors)}\n" + "".join(v + "\n" for v in vc.vectors)


def read_vectors(text: str) -> VectorCollection:
    lines = _lines(text)
    if not lines or lines[0][0] != "ov" or len(lines[0]) != 3:
        raise FormatError("vectors must start with 'ov d t'")
    d, t = _ints(lines[0][1:], "vector header")
    vecs = tuple(toks[0] for toks in lines[1:])
    if d == 0:
        vecs = ("",) * t
    if len(vecs) != t:
        raise FormatError(f"header promises {t} vectors, found {len(vecs)}")
    try:
        return VectorCollection(d, vecs)
    except InstanceError as exc:
        raise FormatError(str(exc)) from None


# -- dispatch -------------------------------------------------------------

_WRITERS = [
    (GraphInstance, write_graph_instance),
    (SetFamilyInstance, write_family),
    (SplitCnfInstance, write_cnf),
    (WildcardStringPair, write_strings),
    (BinaryMatrixPair, write_matrices),
    (VectorCollection, write_vectors),
    (DirectedGraph, write_graph),
    (UndirectedGraph, write_graph),
]

_READERS = {
    GraphInstance: read_graph_instance,
    SetFamilyInstance: read_family,
    SplitCnfInstance: read_cnf,
    WildcardStringPair: read_strings,
    BinaryMatrixPair: read_matrices,
    VectorCollection: read_vectors,
}


def write_instance(inst) -> str:
    for kind, writer in _WRITERS:
        if isinstance(inst, kind):
            return writer(inst)
    raise TypeError(f"no writer for {type(inst).__name__}")


def read_instance(text: str, kind: type):
    try:
        reader = _READERS[kind]
    except KeyError:
        raise TypeError(f"no reader for {kind.__name__}") from None
    return reader(text)


def detect_kind(text: str) -> type:
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head = line.split()[0]
        kinds = {"dg": GraphInstance, "ug": GraphInstance, "sf": SetFamilyInstance,
                 "kcnf*": SplitCnfInstance, "bm": BinaryMatrixPair, "ov": VectorCollection}
        if head in kinds:
            return kinds[head]
        if re.fullmatch(r"[01*]*", line):
            return WildcardStringPair
        raise FormatError(f"cannot tell the format from {line!r}")
    return WildcardStringPair


def load(path: Union[str, Path], kind: type = None):
    text = Path(path).read_text()
    return read_instance(text, kind or detect_kind(text))


def save(path: Union[str, Path], inst) -> None:
    Path(path).write_text(write_instance(inst))
