"""Simple undirected graphs on dense 0-based vertex ids."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertices."""


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``. ``labels``
    is an optional per-vertex provenance string (gadget builders set it).
    """

    vertex_count: int
    edges: frozenset[tuple[int, int]] = frozenset()
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise GraphError("graph must have at least one vertex")
        for u, v in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise GraphError(f"bad edge ({u}, {v}) for {self.vertex_count} vertices")
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise GraphError("label map must cover every vertex")

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> Graph:
        """Build a graph, rejecting self-loops and duplicate edges."""
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            e = _norm(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        return cls(vertex_count, frozenset(seen), tuple(labels) if labels is not None else None)

    @classmethod
    def empty(cls, vertex_count: int) -> Graph:
        return cls(vertex_count)

    def with_labels(self, labels: Sequence[str]) -> Graph:
        return Graph(self.vertex_count, self.edges, tuple(labels))

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


@dataclass(frozen=True)
class BipartitionMeta:
    """Side membership of a complete bipartite graph."""

    x_vertices: tuple[int, ...]
    y_vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if set(self.x_vertices) & set(self.y_vertices):
            raise GraphError("bipartition sides overlap")

    @property
    def m(self) -> int:
        return len(self.x_vertices)

    @property
    def n(self) -> int:
        return len(self.y_vertices)

    def swapped(self) -> BipartitionMeta:
        return BipartitionMeta(self.y_vertices, self.x_vertices)


def complete_bipartite(m: int, n: int) -> tuple[Graph, BipartitionMeta]:
    """K_{m,n} with X = 0..m-1 and Y = m..m+n-1."""
    if m < 0 or n < 0:
        raise GraphError("side sizes must be nonnegative")
    if m + n == 0:
        raise GraphError("K_{0,0} is the empty graph")
    edges = frozenset((x, m + y) for x in range(m) for y in range(n))
    meta = BipartitionMeta(tuple(range(m)), tuple(range(m, m + n)))
    return Graph(m + n, edges), meta


def complete(k: int) -> Graph:
    if k < 1:
        raise GraphError("complete graph needs k >= 1")
    return Graph(k, frozenset((u, v) for u in range(k) for v in range(u + 1, k)))


def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError("cycle needs k >= 3")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus every edge between them.

    g keeps its ids; h's ids are shifted by ``g.vertex_count``.
    """
    off = g.vertex_count
    edges = set(g.edges)
    edges.update((u + off, v + off) for u, v in h.edges)
    edges.update((u, off + v) for u in g.vertices for v in h.vertices)
    labels = None
    if g.labels is not None or h.labels is not None:
        labels = tuple(g.label(v) for v in g.vertices) + tuple(h.label(v) for v in h.vertices)
    return Graph(off + h.vertex_count, frozenset(edges), labels)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.vertex_count
    edges = set(g.edges)
    edges.update((u + off, v + off) for u, v in h.edges)
    return Graph(off + h.vertex_count, frozenset(edges))


def add_isolated(g: Graph, count: int) -> Graph:
    if count < 0:
        raise GraphError("count must be nonnegative")
    labels = None
    if g.labels is not None:
        labels = g.labels + tuple(str(g.vertex_count + i) for i in range(count))
    return Graph(g.vertex_count + count, g.edges, labels)


def induced(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``s``, re-indexed in ascending id order.

    Returns the graph and the back-map (new id -> original id).
    """
    back = tuple(sorted(set(s)))
    for v in back:
        if not 0 <= v < g.vertex_count:
            raise GraphError(f"vertex {v} out of range")
    fwd = {v: i for i, v in enumerate(back)}
    edges = frozenset((fwd[u], fwd[v]) for u, v in g.edges if u in fwd and v in fwd)
    labels = tuple(g.labels[v] for v in back) if g.labels is not None else None
    return Graph(len(back), edges, labels), back


def component_count(g: Graph) -> int:
    seen = [False] * g.vertex_count
    count = 0
    for start in g.vertices:
        if seen[start]:
            continue
        count += 1
        seen[start] = True
        stack = [start]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return count


def is_forest(g: Graph) -> bool:
    return g.edge_count == g.vertex_count - component_count(g)


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adjacency), default=0)
