"""Transitive closure, comparability recognition and a SETH-hardness reduction harness."""

from .closure import bitmatrix_closure, gk_closure, hybrid_closure, is_transitive
from .comparability import is_comparability, orient_transitively
from .graph import DirectedGraph, UndirectedGraph
from .problems import PROBLEMS, Verdict, solve
from .reductions import REDUCTIONS, reduce, verify_reduction

__all__ = [
    "DirectedGraph",
    "UndirectedGraph",
    "gk_closure",
    "bitmatrix_closure",
    "hybrid_closure",
    "is_transitive",
    "is_comparability",
    "orient_transitively",
    "PROBLEMS",
    "Verdict",
    "solve",
    "REDUCTIONS",
    "reduce",
    "verify_reduction",
]
