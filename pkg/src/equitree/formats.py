"""Text formats: DIMACS-like graphs and colorings (text and JSON).

Files use 1-based vertices and colors; everything in memory is 0-based.
"""

from __future__ import annotations

import json
from typing import Any

from .coloring import UNBOUNDED, Coloring, DegreeBound
from .graph import Graph, GraphError


class FormatError(ValueError):
    pass


def write_graph(g: Graph, comments: tuple[str, ...] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.vertex_count} {g.edge_count}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_graph(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        try:
            if parts[0] == "p":
                if header is not None or len(parts) != 4 or parts[1] != "edge":
                    raise FormatError(f"line {lineno}: bad problem line")
                header = (int(parts[2]), int(parts[3]))
            elif parts[0] == "e":
                if header is None or len(parts) != 3:
                    raise FormatError(f"line {lineno}: bad edge line")
                u, v = int(parts[1]), int(parts[2])
                if not (1 <= u <= header[0] and 1 <= v <= header[0]):
                    raise FormatError(f"line {lineno}: endpoint out of range")
                edges.append((u - 1, v - 1))
            else:
                raise FormatError(f"line {lineno}: unknown line type {parts[0]!r}")
        except ValueError as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"line {lineno}: {exc}") from None
    if header is None:
        raise FormatError("missing 'p edge' line")
    if len(edges) != header[1]:
        raise FormatError(f"header declares {header[1]} edges, found {len(edges)}")
    try:
        return Graph.from_edges(header[0], edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def _t_text(t: DegreeBound | None) -> str:
    # 0 marks a proper coloring: no edge may join two vertices of one class
    return "0" if t is None else str(t)


def _parse_t(text: str | int) -> DegreeBound | None:
    return None if str(text).strip() == "0" else DegreeBound.parse(text)


def write_coloring(coloring: Coloring, t: DegreeBound | None = UNBOUNDED) -> str:
    lines = [f"q {coloring.q} t {_t_text(t)}"]
    lines.extend(f"{v + 1} {c + 1}" for v, c in enumerate(coloring.assignment))
    return "\n".join(lines) + "\n"


def read_coloring(text: str) -> tuple[Coloring, DegreeBound | None]:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("c")]
    if not lines:
        raise FormatError("empty coloring file")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "q" or head[2] != "t":
        raise FormatError("coloring header must be 'q <q> t <t|inf>'")
    try:
        q = int(head[1])
        t = _parse_t(head[3])
        pairs = [tuple(int(x) for x in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    assignment = []
    for i, pair in enumerate(pairs):
        if len(pair) != 2 or pair[0] != i + 1:
            raise FormatError(f"expected vertex {i + 1} on line {i + 2}")
        assignment.append(pair[1] - 1)
    try:
        return Coloring(tuple(assignment), q), t
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def coloring_to_json(coloring: Coloring, t: DegreeBound | None = UNBOUNDED) -> dict[str, Any]:
    t_out: Any
    if t is None:
        t_out = 0
    else:
        t_out = "inf" if t.unbounded else t.t
    return {
        "q": coloring.q,
        "t": t_out,
        "classes": [[v + 1 for v in members] for members in coloring.classes()],
    }


def coloring_from_json(obj: dict[str, Any]) -> tuple[Coloring, DegreeBound | None]:
    try:
        q = int(obj["q"])
        raw_t = obj["t"]
        classes = [[int(v) - 1 for v in members] for members in obj["classes"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad coloring JSON: {exc}") from None
    if len(classes) != q:
        raise FormatError(f"expected {q} classes, got {len(classes)}")
    t = _parse_t(raw_t)
    n = sum(len(c) for c in classes)
    try:
        return Coloring.from_classes(classes, n), t
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def dumps_json(obj: Any) -> str:
    return json.dumps(obj, separators=(", ", ": ")) + "\n"
