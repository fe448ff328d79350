"""Exhaustive backtracking deciders for small graphs.

These are the ground truth the closed-form decider is checked against, so
they share no code with it beyond the graph and coloring types.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .coloring import UNBOUNDED, Coloring, DegreeBound
from .graph import Graph

DEFAULT_NODE_BUDGET = 10**8
BUDGET_ENV = "EQUITREE_NODE_BUDGET"


def default_node_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_NODE_BUDGET


class BudgetExceeded(RuntimeError):
    def __init__(self, budget: int):
        super().__init__(f"oracle search exceeded its node budget of {budget}")
        self.budget = budget


@dataclass(frozen=True)
class SearchConfig:
    node_budget: int = field(default_factory=default_node_budget)
    symmetry_breaking: bool = True
    equitable: bool = False
    t: DegreeBound = UNBOUNDED

    def __post_init__(self) -> None:
        if self.node_budget < 1:
            raise ValueError("node_budget must be >= 1")


def _order(g: Graph) -> list[int]:
    return sorted(g.vertices, key=lambda v: (-g.degree(v), v))


class _Counter:
    __slots__ = ("nodes", "budget")

    def __init__(self, budget: int):
        self.nodes = 0
        self.budget = budget

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.budget)


def oracle_proper(
    g: Graph,
    q: int,
    equitable: bool = False,
    node_budget: int | None = None,
    symmetry_breaking: bool = True,
) -> Coloring | None:
    """First proper q-coloring found (optionally equitable), or None."""
    if q < 1:
        raise ValueError("q must be >= 1")
    n = g.vertex_count
    order = _order(g)
    adj = g.adjacency
    color = [-1] * n
    sizes = [0] * q
    lo, hi = n // q, -(-n // q)
    counter = _Counter(node_budget if node_budget is not None else default_node_budget())

    def rec(i: int, used: int, deficit: int) -> bool:
        if i == n:
            return True
        v = order[i]
        limit = min(q, used + 1) if symmetry_breaking else q
        for c in range(limit):
            counter.tick()
            if any(color[u] == c for u in adj[v]):
                continue
            if equitable:
                if sizes[c] + 1 > hi:
                    continue
                d = deficit - (1 if sizes[c] < lo else 0)
                if d > n - i - 1:
                    continue
            else:
                d = 0
            color[v] = c
            sizes[c] += 1
            if rec(i + 1, max(used, c + 1), d):
                return True
            sizes[c] -= 1
            color[v] = -1
        return False

    if rec(0, 0, q * lo):
        return Coloring(tuple(color), q)
    return None


def oracle_tree(g: Graph, q: int, cfg: SearchConfig | None = None) -> Coloring | None:
    """First (q,t)-tree-coloring found (equitable if ``cfg.equitable``), or None.

    Forest-ness is tracked with one union-find over all vertices (unions only
    join same-class neighbors), undone on backtrack; no path compression so
    rollback stays exact.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    cfg = cfg or SearchConfig()
    t = cfg.t.t  # None when unbounded
    n = g.vertex_count
    order = _order(g)
    adj = g.adjacency
    color = [-1] * n
    sizes = [0] * q
    deg = [0] * n
    parent = list(range(n))
    weight = [1] * n
    lo, hi = n // q, -(-n // q)
    counter = _Counter(cfg.node_budget)

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(i: int, used: int, deficit: int) -> bool:
        if i == n:
            return True
        v = order[i]
        limit = min(q, used + 1) if cfg.symmetry_breaking else q
        for c in range(limit):
            counter.tick()
            if cfg.equitable:
                if sizes[c] + 1 > hi:
                    continue
                d = deficit - (1 if sizes[c] < lo else 0)
                if d > n - i - 1:
                    continue
            else:
                d = 0
            same = [u for u in adj[v] if color[u] == c]
            if t is not None and (len(same) > t or any(deg[u] >= t for u in same)):
                continue
            roots = {find(u) for u in same}
            if len(roots) < len(same):
                continue  # two neighbors already connected: v would close a cycle
            merged = []
            for rt in roots:
                rv = find(v)
                big, small = (rv, rt) if weight[rv] >= weight[rt] else (rt, rv)
                parent[small] = big
                weight[big] += weight[small]
                merged.append((small, big))
            for u in same:
                deg[u] += 1
            deg[v] = len(same)
            color[v] = c
            sizes[c] += 1
            if rec(i + 1, max(used, c + 1), d):
                return True
            sizes[c] -= 1
            color[v] = -1
            deg[v] = 0
            for u in same:
                deg[u] -= 1
            for small, big in reversed(merged):
                parent[small] = small
                weight[big] -= weight[small]
        return False

    if rec(0, 0, q * lo if cfg.equitable else 0):
        return Coloring(tuple(color), q)
    return None


def is_tree_colorable(
    g: Graph,
    q: int,
    t: DegreeBound = UNBOUNDED,
    equitable: bool = False,
    node_budget: int | None = None,
) -> bool:
    budget = node_budget if node_budget is not None else default_node_budget()
    return oracle_tree(g, q, SearchConfig(budget, True, equitable, t)) is not None


def is_colorable(g: Graph, q: int, equitable: bool = False, node_budget: int | None = None) -> bool:
    return oracle_proper(g, q, equitable, node_budget) is not None
