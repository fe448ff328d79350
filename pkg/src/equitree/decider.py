"""Closed-form decisions and witnesses for equitable colorings of K_{m,n}.

Clauses are named ``A.i``, ``A.ii``, ``A.iii`` (proper equitable) and
``B.i``, ``B.ii`` (equitable tree). ``decide_*`` try A before B and the given
orientation before the swapped one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .coloring import UNBOUNDED, Coloring, ColoringError, DegreeBound, shapes
from .graph import BipartitionMeta, complete_bipartite
from .kvector import (
    DegenerateParams,
    Params,
    enumerate_tree,
    residual_proper,
    residual_tree,
)

AS_GIVEN = "as-given"
SWAPPED = "swapped"


def _cdiv(x: int, y: int) -> int:
    return -(-x // y)


def _a_r(m: int, n: int, q: int) -> tuple[int, int]:
    if q < 1:
        raise ValueError("q must be >= 1")
    a, r = divmod(m + n, q)
    if a < 1:
        raise DegenerateParams(f"a = 0 for m+n={m + n}, q={q}")
    return a, r


def condition_A(m: int, n: int, q: int) -> str | None:
    """First clause of Condition A satisfied by the ordered pair (m, n)."""
    a, r = _a_r(m, n, q)
    if r == 0:
        return "A.i" if m % a == 0 else None
    if r * (a + 1) >= m:
        c = _cdiv(m, a + 1)
        return "A.ii" if min(c, q - r) >= (a + 1) * c - m else None
    c = _cdiv(m - r, a)
    return "A.iii" if min(r, q - c) >= a * c + r - m else None


def condition_B(m: int, n: int, q: int) -> str | None:
    a, r = _a_r(m, n, q)
    if r == 0:
        return "B.ii" if q + (a - 1) * (m // a) >= m else None
    if r * (a + 1) >= m:
        return "B.i" if q + a * (m // (a + 1)) >= m else None
    return "B.ii" if q + r + (a - 1) * ((m - r) // a) >= m else None


def witness_A(m: int, n: int, q: int, clause: str) -> tuple[int, int, int, int]:
    if condition_A(m, n, q) != clause:
        raise ValueError(f"clause {clause} does not hold for (m={m}, n={n}, q={q})")
    a, r = _a_r(m, n, q)
    if clause == "A.i":
        # r = 0: every class has exactly a vertices
        k = (0, m // a, 0, n // a)
    else:
        c = _cdiv(m, a + 1) if clause == "A.ii" else _cdiv(m - r, a)
        k = (m - a * c, (a + 1) * c - m, r + a * c - m, m + q - r - (a + 1) * c)
    assert residual_proper(k, Params(m, n, q)) == (0, 0, 0) and min(k) >= 0
    return k


def witness_B(m: int, n: int, q: int, clause: str) -> tuple[int, ...]:
    if condition_B(m, n, q) != clause:
        raise ValueError(f"clause {clause} does not hold for (m={m}, n={n}, q={q})")
    a, r = _a_r(m, n, q)
    if clause == "B.i":
        f = m // (a + 1)
        k3 = max(0, r + a * f - m)
        k = (f, 0, k3, q + a * f - m - k3, 0, 0, r - f - k3, m + k3 - r - a * f)
    elif r == 0:
        f = m // a
        k = (0, f, 0, q + (a - 1) * f - m, 0, 0, 0, m - a * f)
    else:
        f = (m - r) // a
        k = (r, f - r, 0, q + r + (a - 1) * f - m, 0, 0, 0, m - r - a * f)
    assert residual_tree(k, Params(m, n, q)) == (0, 0, 0) and min(k) >= 0
    return k


def realize(meta: BipartitionMeta, q: int, a: int, k: Sequence[int]) -> Coloring:
    """Lay out classes in shape order, consuming X then Y ids in ascending order."""
    if len(k) not in (4, 8) or min(k) < 0:
        raise ColoringError(f"bad k-vector {tuple(k)}")
    if sum(k) != q:
        raise ColoringError(f"k-vector sums to {sum(k)}, expected q={q}")
    xs, ys = list(meta.x_vertices), list(meta.y_vertices)
    need_x = sum(c * sx for c, (sx, _) in zip(k, shapes(a)))
    need_y = sum(c * sy for c, (_, sy) in zip(k, shapes(a)))
    if (need_x, need_y) != (len(xs), len(ys)):
        raise ColoringError(f"k-vector {tuple(k)} is infeasible for |X|={len(xs)}, |Y|={len(ys)}")
    classes: list[list[int]] = []
    ix = iy = 0
    for count, (sx, sy) in zip(k, shapes(a)):
        for _ in range(count):
            classes.append(xs[ix : ix + sx] + ys[iy : iy + sy])
            ix += sx
            iy += sy
    return Coloring.from_classes(classes, len(xs) + len(ys))


def _degenerate_coloring(m: int, n: int, q: int) -> Coloring:
    return Coloring(tuple(v % q for v in range(m + n)), q)


@dataclass(frozen=True)
class Verdict:
    feasible: bool
    orientation: str
    clause: str
    a: int
    r: int
    witness_k: tuple[int, ...] | None = None
    witness_coloring: Coloring | None = None
    t: DegreeBound | None = None  # None marks the proper (no same-class edge) question

    def certificate(self) -> dict[str, Any]:
        cert: dict[str, Any] = {
            "feasible": self.feasible,
            "orientation": self.orientation,
            "clause": self.clause,
            "a": self.a,
            "r": self.r,
            "k": list(self.witness_k) if self.witness_k is not None else None,
        }
        if self.witness_coloring is not None:
            from .formats import coloring_to_json

            cert["coloring"] = coloring_to_json(self.witness_coloring, self.t)
        return cert


def _check_q(q: int) -> None:
    if q < 1:
        raise ValueError("q must be >= 1")


def _degenerate(m: int, n: int, q: int, t: DegreeBound | None, with_coloring: bool) -> Verdict | None:
    a, r = divmod(m + n, q)
    if a >= 1 and m >= 1 and n >= 1:
        return None
    col = _degenerate_coloring(m, n, q) if with_coloring else None
    return Verdict(True, AS_GIVEN, "degenerate", a, r, None, col, t)


def _realized(m, n, q, orientation, k, with_coloring) -> Coloring | None:
    if not with_coloring:
        return None
    _, meta = complete_bipartite(m, n)
    if orientation == SWAPPED:
        meta = meta.swapped()
    return realize(meta, q, (m + n) // q, k)


def decide_proper_equitable(m: int, n: int, q: int, with_coloring: bool = True) -> Verdict:
    """Does K_{m,n} have a proper equitable q-coloring?"""
    _check_q(q)
    deg = _degenerate(m, n, q, None, with_coloring)
    if deg is not None:
        return deg
    a, r = divmod(m + n, q)
    for orientation, (mm, nn) in ((AS_GIVEN, (m, n)), (SWAPPED, (n, m))):
        clause = condition_A(mm, nn, q)
        if clause is not None:
            k = witness_A(mm, nn, q, clause)
            col = _realized(m, n, q, orientation, k, with_coloring)
            return Verdict(True, orientation, clause, a, r, k, col, None)
    return Verdict(False, AS_GIVEN, "none", a, r)


def decide_equitable_tree(
    m: int, n: int, q: int, t: DegreeBound = UNBOUNDED, with_coloring: bool = True
) -> Verdict:
    """Does K_{m,n} have an equitable (q,t)-tree-coloring?

    For t >= a (or unbounded) the closed-form conditions decide; below that
    the shape-filtered k-vector search does.
    """
    _check_q(q)
    if not isinstance(t, DegreeBound):
        raise TypeError("t must be a DegreeBound")
    deg = _degenerate(m, n, q, t, with_coloring)
    if deg is not None:
        return deg
    a, r = divmod(m + n, q)
    if not t.allows(a):
        k = enumerate_tree(Params(m, n, q), t)
        if k is None:
            return Verdict(False, AS_GIVEN, "none", a, r, t=t)
        col = _realized(m, n, q, AS_GIVEN, k, with_coloring)
        return Verdict(True, AS_GIVEN, "enumerated", a, r, k, col, t)
    for cond, witness, width in ((condition_A, witness_A, 4), (condition_B, witness_B, 8)):
        for orientation, (mm, nn) in ((AS_GIVEN, (m, n)), (SWAPPED, (n, m))):
            clause = cond(mm, nn, q)
            if clause is None:
                continue
            k = witness(mm, nn, q, clause)
            col = _realized(m, n, q, orientation, k, with_coloring)
            return Verdict(True, orientation, clause, a, r, k, col, t)
    return Verdict(False, AS_GIVEN, "none", a, r, t=t)


def decide(m: int, n: int, q: int, t: DegreeBound | None, with_coloring: bool = True) -> Verdict:
    """``t=None`` asks the proper question; otherwise the tree question."""
    if t is None:
        return decide_proper_equitable(m, n, q, with_coloring)
    return decide_equitable_tree(m, n, q, t, with_coloring)
