"""Reduction gadgets from proper q-coloring to (equitable) tree-coloring.

* ``gadget_npt``: every vertex gets t private copies of K_{2q-1}, fully joined to it.
* ``gadget_npi``: the join G v K_q.
* ``pad_equitable``: q*|V| isolated vertices appended.

Original vertices keep their ids in every gadget.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import UNBOUNDED, DegreeBound
from .graph import Graph, add_isolated, complete, join
from .oracle import SearchConfig, default_node_budget, oracle_proper, oracle_tree

KINDS = ("npt", "npi", "pad")


@dataclass(frozen=True)
class GadgetOutput:
    graph: Graph
    source_vertex_map: dict[int, int]
    gadget_regions: dict[str, tuple[int, ...]]

    def sidecar(self) -> dict:
        """JSON-ready description with 1-based vertex ids."""
        return {
            "vertex_count": self.graph.vertex_count,
            "source_vertex_map": {str(k + 1): v + 1 for k, v in sorted(self.source_vertex_map.items())},
            "regions": {name: [v + 1 for v in ids] for name, ids in self.gadget_regions.items()},
            "labels": list(self.graph.labels) if self.graph.labels is not None else None,
        }


def _base_labels(g: Graph) -> list[str]:
    return [f"G:v{v + 1}" for v in g.vertices]


def gadget_npt(g: Graph, q: int, t: int) -> GadgetOutput:
    if q < 2:
        raise ValueError("gadget_npt needs q >= 2")
    if t < 1:
        raise ValueError("gadget_npt needs t >= 1")
    size = 2 * q - 1
    n = g.vertex_count
    edges = set(g.edges)
    labels = _base_labels(g)
    regions: dict[str, tuple[int, ...]] = {"G": tuple(g.vertices)}
    nxt = n
    for v in g.vertices:
        for j in range(t):
            block = tuple(range(nxt, nxt + size))
            name = f"clique{v + 1}.{j + 1}"
            regions[name] = block
            labels.extend(f"{name}:v{i + 1}" for i in range(size))
            edges.update((x, y) for i, x in enumerate(block) for y in block[i + 1 :])
            edges.update((v, x) for x in block)
            nxt += size
    h = Graph(nxt, frozenset(edges), tuple(labels))
    return GadgetOutput(h, {v: v for v in g.vertices}, regions)


def gadget_npi(g: Graph, q: int) -> GadgetOutput:
    if q < 1:
        raise ValueError("gadget_npi needs q >= 1")
    h = join(g, complete(q))
    n = g.vertex_count
    labels = _base_labels(g) + [f"K:v{i + 1}" for i in range(q)]
    regions = {"G": tuple(range(n)), "K": tuple(range(n, n + q))}
    return GadgetOutput(h.with_labels(labels), {v: v for v in g.vertices}, regions)


def pad_equitable(g: Graph, q: int) -> GadgetOutput:
    if q < 1:
        raise ValueError("pad_equitable needs q >= 1")
    n = g.vertex_count
    h = add_isolated(g, q * n)
    labels = _base_labels(g) + [f"pad:v{i + 1}" for i in range(q * n)]
    regions = {"G": tuple(range(n)), "pad": tuple(range(n, n + q * n))}
    return GadgetOutput(h.with_labels(labels), {v: v for v in g.vertices}, regions)


def build_gadget(kind: str, g: Graph, q: int, t: DegreeBound = UNBOUNDED) -> GadgetOutput:
    if kind == "npt":
        if t.unbounded:
            raise ValueError("npt gadget needs a finite t")
        return gadget_npt(g, q, t.t)
    if kind == "npi":
        return gadget_npi(g, q)
    if kind == "pad":
        return pad_equitable(g, q)
    raise ValueError(f"unknown gadget kind {kind!r}")


@dataclass(frozen=True)
class EquivalenceReport:
    kind: str
    q: int
    t: DegreeBound
    left: bool  # source side: proper q-colorability (npt/npi) or (q,t)-tree-colorability (pad)
    right: bool  # oracle decision on the gadget
    gadget_vertices: int

    @property
    def agree(self) -> bool:
        return self.left == self.right


def check_reduction(
    g: Graph,
    kind: str,
    q: int,
    t: DegreeBound = UNBOUNDED,
    node_budget: int | None = None,
) -> EquivalenceReport:
    """Decide both sides of a gadget's equivalence with the oracle.

    Raises ``BudgetExceeded`` rather than guessing when a search runs out.
    """
    budget = node_budget if node_budget is not None else default_node_budget()
    out = build_gadget(kind, g, q, t)
    if kind == "pad":
        left = oracle_tree(g, q, SearchConfig(budget, t=t)) is not None
        right = oracle_tree(out.graph, q, SearchConfig(budget, equitable=True, t=t)) is not None
    else:
        left = oracle_proper(g, q, node_budget=budget) is not None
        rt = t if kind == "npt" else UNBOUNDED
        right = oracle_tree(out.graph, q, SearchConfig(budget, t=rt)) is not None
    return EquivalenceReport(kind, q, t, left, right, out.graph.vertex_count)
