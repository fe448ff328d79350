"""Colorings, the tree-coloring verifier, and the K_{m,n} class-shape census."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import BipartitionMeta, Graph, GraphError, induced


class ColoringError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class DegreeBound:
    """Per-class degree cap: a positive integer, or ``None`` for unbounded."""

    t: int | None = None

    def __post_init__(self) -> None:
        if self.t is not None and self.t < 1:
            raise ColoringError(f"finite degree bound must be >= 1, got {self.t}")

    @classmethod
    def finite(cls, t: int) -> DegreeBound:
        return cls(t)

    @classmethod
    def parse(cls, text: str | int) -> DegreeBound:
        if isinstance(text, int):
            return cls(text)
        s = text.strip().lower()
        if s in ("inf", "infinity", "unbounded"):
            return UNBOUNDED
        try:
            return cls(int(s))
        except ValueError:
            raise ColoringError(f"bad degree bound {text!r}") from None

    @property
    def unbounded(self) -> bool:
        return self.t is None

    def allows(self, degree: int) -> bool:
        return self.t is None or degree <= self.t

    def __str__(self) -> str:
        return "inf" if self.t is None else str(self.t)

    def sort_key(self) -> tuple[int, int]:
        return (1, 0) if self.t is None else (0, self.t)


UNBOUNDED = DegreeBound(None)


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> color in 0..q-1. Empty classes are allowed."""

    assignment: tuple[int, ...]
    q: int

    def __post_init__(self) -> None:
        if self.q < 1:
            raise ColoringError("q must be >= 1")
        for v, c in enumerate(self.assignment):
            if not 0 <= c < self.q:
                raise ColoringError(f"vertex {v} has color {c} outside 0..{self.q - 1}")

    @classmethod
    def from_classes(cls, classes: Sequence[Iterable[int]], vertex_count: int) -> Coloring:
        assignment = [-1] * vertex_count
        for c, members in enumerate(classes):
            for v in members:
                if not 0 <= v < vertex_count:
                    raise ColoringError(f"vertex {v} out of range")
                if assignment[v] != -1:
                    raise ColoringError(f"vertex {v} colored twice")
                assignment[v] = c
        if -1 in assignment:
            raise ColoringError(f"vertex {assignment.index(-1)} is uncolored")
        return cls(tuple(assignment), len(classes))

    def __len__(self) -> int:
        return len(self.assignment)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.q)]
        for v, c in enumerate(self.assignment):
            out[c].append(v)
        return out

    def class_sizes(self) -> list[int]:
        sizes = [0] * self.q
        for c in self.assignment:
            sizes[c] += 1
        return sizes


def restrict(coloring: Coloring, s: Iterable[int]) -> Coloring:
    """Coloring of the subgraph induced by ``s`` (ascending re-index), same q."""
    vs = sorted(set(s))
    for v in vs:
        if not 0 <= v < len(coloring):
            raise ColoringError(f"vertex {v} out of range")
    return Coloring(tuple(coloring.assignment[v] for v in vs), coloring.q)


def is_equitable(coloring: Coloring) -> bool:
    sizes = coloring.class_sizes()
    return max(sizes) - min(sizes) <= 1


def is_proper(g: Graph, coloring: Coloring) -> bool:
    _check_sizes(g, coloring)
    col = coloring.assignment
    return all(col[u] != col[v] for u, v in g.edges)


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    color: int | None = None
    reason: str | None = None  # "cycle" or "degree-exceeded"
    edge: tuple[int, int] | None = None  # edge closing the cycle
    vertex: int | None = None  # over-degree vertex
    degree: int | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "ok"
        if self.reason == "cycle":
            return f"class {self.color + 1}: cycle closed by edge {self.edge[0] + 1}-{self.edge[1] + 1}"
        return (
            f"class {self.color + 1}: vertex {self.vertex + 1} has degree {self.degree} in its class"
        )


def _check_sizes(g: Graph, coloring: Coloring) -> None:
    if len(coloring) != g.vertex_count:
        raise ColoringError(
            f"coloring covers {len(coloring)} vertices, graph has {g.vertex_count}"
        )


def verify_tree_coloring(g: Graph, coloring: Coloring, t: DegreeBound = UNBOUNDED) -> VerifyReport:
    """Check that every class induces a forest with max degree within ``t``.

    The first failing class (by color index) is reported; within a class the
    cycle check runs before the degree check.
    """
    _check_sizes(g, coloring)
    col = coloring.assignment
    for c, members in enumerate(coloring.classes()):
        if len(members) < 2:
            continue
        parent = {v: v for v in members}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        deg = dict.fromkeys(members, 0)
        inner = [(u, v) for u, v in g.sorted_edges() if col[u] == c and col[v] == c]
        for u, v in inner:
            ru, rv = find(u), find(v)
            if ru == rv:
                return VerifyReport(False, c, "cycle", edge=(u, v))
            parent[ru] = rv
            deg[u] += 1
            deg[v] += 1
        if t.t is not None:
            for v in members:
                if deg[v] > t.t:
                    return VerifyReport(False, c, "degree-exceeded", vertex=v, degree=deg[v])
    return VerifyReport(True)


# Class shapes (|V_i & X|, |V_i & Y|) for k1..k8, as functions of a.
def shapes(a: int) -> tuple[tuple[int, int], ...]:
    return (
        (a + 1, 0),
        (a, 0),
        (0, a + 1),
        (0, a),
        (a, 1),
        (a - 1, 1),
        (1, a),
        (1, a - 1),
    )


@dataclass(frozen=True)
class ShapeCensus:
    counts: tuple[int, ...]  # k1..k8
    unclassified: int

    @property
    def total(self) -> int:
        return sum(self.counts) + self.unclassified


def shape_census(coloring: Coloring, meta: BipartitionMeta, a: int) -> ShapeCensus:
    """Count classes per shape; coincident shapes (a = 1) go to the lowest index."""
    if a < 1:
        raise ColoringError("shape census needs a >= 1")
    xs = set(meta.x_vertices)
    ys = set(meta.y_vertices)
    if len(xs) + len(ys) != len(coloring):
        raise ColoringError("bipartition does not match coloring size")
    table = shapes(a)
    counts = [0] * 8
    unclassified = 0
    pairs: Counter[tuple[int, int]] = Counter()
    for members in coloring.classes():
        pairs[(sum(v in xs for v in members), sum(v in ys for v in members))] += 1
    for pair, mult in pairs.items():
        try:
            counts[table.index(pair)] += mult
        except ValueError:
            unclassified += mult
    return ShapeCensus(tuple(counts), unclassified)


def class_graph(g: Graph, coloring: Coloring, color: int) -> Graph:
    """Subgraph induced by one color class (raises on an empty class)."""
    members = coloring.classes()[color]
    if not members:
        raise GraphError(f"class {color} is empty")
    return induced(g, members)[0]
