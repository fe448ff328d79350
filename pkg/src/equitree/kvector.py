"""Shape-count systems for equitable colorings of K_{m,n}.

A k-vector counts color classes per shape (see ``coloring.shapes``). The
four-entry vector uses only the within-side shapes (proper colorings); the
eight-entry vector adds the crossing star shapes (tree colorings).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .coloring import DegreeBound, UNBOUNDED

KVector4 = tuple[int, int, int, int]
KVector8 = tuple[int, int, int, int, int, int, int, int]


class DegenerateParams(ValueError):
    """Raised when a = floor((m+n)/q) is 0; the shape systems need a >= 1."""


@dataclass(frozen=True)
class Params:
    m: int
    n: int
    q: int

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0:
            raise ValueError("side sizes must be nonnegative")
        if self.q < 1:
            raise ValueError("q must be >= 1")

    @property
    def a(self) -> int:
        return (self.m + self.n) // self.q

    @property
    def r(self) -> int:
        return (self.m + self.n) % self.q

    def swapped(self) -> Params:
        return Params(self.n, self.m, self.q)

    def require_nondegenerate(self) -> int:
        a = self.a
        if a < 1:
            raise DegenerateParams(f"a = 0 for m+n={self.m + self.n}, q={self.q}")
        return a


def residual_proper(k: Sequence[int], p: Params) -> tuple[int, int, int]:
    a = p.require_nondegenerate()
    k1, k2, k3, k4 = k
    return (
        k1 + k2 + k3 + k4 - p.q,
        k1 * (a + 1) + k2 * a - p.m,
        k3 * (a + 1) + k4 * a - p.n,
    )


def residual_tree(k: Sequence[int], p: Params) -> tuple[int, int, int]:
    a = p.require_nondegenerate()
    k1, k2, k3, k4, k5, k6, k7, k8 = k
    return (
        sum(k) - p.q,
        k1 * (a + 1) + k2 * a + k5 * a + k6 * (a - 1) + k7 + k8 - p.m,
        k3 * (a + 1) + k4 * a + k7 * a + k8 * (a - 1) + k5 + k6 - p.n,
    )


def allowed_shapes(p: Params, t: DegreeBound = UNBOUNDED) -> frozenset[int]:
    """Indices (0-based, k1 -> 0) of shapes a class may take under bound t.

    A crossing class with s vertices on one side and 1 on the other is a star
    of center degree s, so it needs s <= t.
    """
    a = p.require_nondegenerate()
    out = {0, 1, 2, 3}
    if t.allows(a):
        out |= {4, 6}
    if a - 1 >= 1 and t.allows(a - 1):
        out |= {5, 7}
    return frozenset(out)


@lru_cache(maxsize=1 << 20)
def _reachable(
    x_coef: tuple[int, ...], big: tuple[bool, ...], i: int, rem_b: int, rem_s: int, rem_x: int
) -> bool:
    """Can variables i.. (coefficients ``x_coef[i:]``) meet the remaining totals?

    Disallowed shapes are passed with coefficient -1 and skipped. The cache is
    shared across calls: states depend only on the coefficient tuple.
    """
    if rem_x < 0:
        return False
    if i == len(x_coef):
        return rem_b == 0 and rem_s == 0 and rem_x == 0
    c = x_coef[i]
    if c < 0:
        return _reachable(x_coef, big, i + 1, rem_b, rem_s, rem_x)
    if big[i]:
        return any(
            _reachable(x_coef, big, i + 1, rem_b - v, rem_s, rem_x - v * c) for v in range(rem_b + 1)
        )
    return any(
        _reachable(x_coef, big, i + 1, rem_b, rem_s - v, rem_x - v * c) for v in range(rem_s + 1)
    )


def _lex_min(x_coef: tuple[int, ...], big: tuple[bool, ...], r: int, s: int, m: int):
    """Lexicographically smallest nonnegative vector with sum over big = r,
    sum over small = s and sum x_coef*k = m (entries with coefficient -1 fixed at 0)."""
    if not _reachable(x_coef, big, 0, r, s, m):
        return None
    out = []
    rem_b, rem_s, rem_x = r, s, m
    for i, c in enumerate(x_coef):
        if c < 0:
            out.append(0)
            continue
        v = 0
        while True:
            nb, ns = (rem_b - v, rem_s) if big[i] else (rem_b, rem_s - v)
            if _reachable(x_coef, big, i + 1, nb, ns, rem_x - v * c):
                break
            v += 1
        out.append(v)
        rem_b, rem_s, rem_x = nb, ns, rem_x - v * c
    return tuple(out)


_BIG8 = (True, False, True, False, True, False, True, False)


def enumerate_tree(p: Params, t: DegreeBound = UNBOUNDED) -> KVector8 | None:
    """Lexicographically smallest feasible KVector8 using shapes allowed by t.

    The class-count equation is split into the size-(a+1) and size-a groups
    (their totals are forced to r and q-r), which makes a small memoized
    search over (index, remaining counts, remaining X vertices).
    """
    a = p.require_nondegenerate()
    allowed = allowed_shapes(p, t)
    x_coef = tuple(c if i in allowed else -1 for i, c in enumerate((a + 1, a, 0, 0, a, a - 1, 1, 1)))
    k = _lex_min(x_coef, _BIG8, p.r, p.q - p.r, p.m)
    if k is not None:
        assert residual_tree(k, p) == (0, 0, 0)
    return k


def enumerate_proper(p: Params) -> KVector4 | None:
    a = p.require_nondegenerate()
    k = _lex_min((a + 1, a, 0, 0), _BIG8[:4], p.r, p.q - p.r, p.m)
    if k is not None:
        assert residual_proper(k, p) == (0, 0, 0)
    return k


def embed_proper(k: Sequence[int]) -> KVector8:
    """A KVector4 as a KVector8 with no crossing classes."""
    return tuple(k) + (0, 0, 0, 0)


def identities_hold(k: Sequence[int], p: Params) -> bool:
    """Big/small group totals: size-(a+1) classes number r, size-a classes q-r."""
    if len(k) == 4:
        return k[0] + k[2] == p.r and k[1] + k[3] == p.q - p.r
    return k[0] + k[2] + k[4] + k[6] == p.r and k[1] + k[3] + k[5] + k[7] == p.q - p.r
