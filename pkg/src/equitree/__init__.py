"""Equitable (q,t)-tree-colorings: decisions for K_{m,n}, gadgets, and exact oracles."""

from .coloring import UNBOUNDED, Coloring, DegreeBound, is_equitable, verify_tree_coloring
from .decider import decide_equitable_tree, decide_proper_equitable
from .graph import BipartitionMeta, Graph, complete, complete_bipartite, join

__all__ = [
    "UNBOUNDED",
    "BipartitionMeta",
    "Coloring",
    "DegreeBound",
    "Graph",
    "complete",
    "complete_bipartite",
    "decide_equitable_tree",
    "decide_proper_equitable",
    "is_equitable",
    "join",
    "verify_tree_coloring",
]
