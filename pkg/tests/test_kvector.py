from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equitree.coloring import UNBOUNDED, DegreeBound
from equitree.kvector import (
    DegenerateParams,
    Params,
    allowed_shapes,
    embed_proper,
    enumerate_proper,
    enumerate_tree,
    identities_hold,
    residual_proper,
    residual_tree,
)


def brute_first(m, n, q, allowed=frozenset(range(8)), width=8):
    """Lexicographically first k (itertools.product order) whose classes tile X and Y.

    Shapes are written out here independently of the library.
    """
    a = (m + n) // q
    table = [(a + 1, 0), (a, 0), (0, a + 1), (0, a), (a, 1), (a - 1, 1), (1, a), (1, a - 1)][:width]
    free = [i for i in range(width) if i in allowed]
    for sub in product(range(q + 1), repeat=len(free)):
        if sum(sub) != q:
            continue
        k = [0] * width
        for i, v in zip(free, sub):
            k[i] = v
        k = tuple(k)
        if sum(c * s[0] for c, s in zip(k, table)) == m and sum(c * s[1] for c, s in zip(k, table)) == n:
            return k
    return None


def test_params_derived():
    p = Params(2, 3, 2)
    assert (p.a, p.r) == (2, 1)
    assert Params(4, 4, 3).a == 2 and Params(4, 4, 3).r == 2
    with pytest.raises(DegenerateParams):
        Params(1, 1, 5).require_nondegenerate()


@pytest.mark.parametrize(
    "p,k,res",
    [
        (Params(2, 3, 2), (0, 1, 1, 0), (0, 0, 0)),
        (Params(4, 4, 2), (0, 1, 0, 1), (0, 0, 0)),
        (Params(2, 3, 2), (1, 0, 0, 1), (0, 1, -1)),
    ],
)
def test_residual_proper(p, k, res):
    assert residual_proper(k, p) == res


@pytest.mark.parametrize(
    "p,k,res",
    [
        (Params(9, 2, 3), (2, 0, 0, 0, 0, 0, 0, 1), (0, 0, 0)),
        (Params(1, 5, 2), (0, 0, 0, 1, 0, 0, 0, 1), (0, 0, 0)),
        (Params(4, 6, 3), (0,) * 8, (-3, -4, -6)),
    ],
)
def test_residual_tree(p, k, res):
    assert residual_tree(k, p) == res


def test_residual_degenerate():
    with pytest.raises(DegenerateParams):
        residual_tree((0,) * 8, Params(1, 1, 3))


def test_allowed_shapes():
    assert allowed_shapes(Params(6, 3, 3), UNBOUNDED) == frozenset(range(8))
    # a = 3, t = 2: (3,1) has star degree 3, (2,1) has 2
    assert allowed_shapes(Params(6, 3, 3), DegreeBound(2)) == {0, 1, 2, 3, 5, 7}
    assert allowed_shapes(Params(6, 3, 3), DegreeBound(1)) == {0, 1, 2, 3}
    # a = 1: (1,1) allowed at t = 1; (0,1) crossing slot unused
    assert allowed_shapes(Params(1, 1, 2), DegreeBound(1)) == {0, 1, 2, 3, 4, 6}


def test_enumerate_tree_examples():
    assert enumerate_tree(Params(7, 3, 2), UNBOUNDED) is None
    # lexicographic-first solutions, frozen from brute_first
    assert enumerate_tree(Params(4, 4, 3), DegreeBound(2)) == (0, 0, 0, 0, 1, 0, 1, 1)
    assert enumerate_tree(Params(2, 3, 2), DegreeBound(2)) == (0, 0, 0, 0, 0, 0, 1, 1)
    assert enumerate_tree(Params(3, 1, 2), DegreeBound(1)) == (0, 1, 0, 0, 0, 0, 0, 1)


def test_enumerate_proper_examples():
    assert enumerate_proper(Params(2, 3, 2)) == (0, 1, 1, 0)
    assert enumerate_proper(Params(3, 3, 3)) is None
    assert enumerate_proper(Params(4, 4, 2)) == (0, 1, 0, 1)


def test_enumerate_matches_brute_force():
    for s in range(1, 13):
        for m in range(s + 1):
            n = s - m
            for q in range(1, min(s, 5) + 1):
                p = Params(m, n, q)
                assert enumerate_proper(p) == brute_first(m, n, q, width=4), p
                for t in (DegreeBound(1), DegreeBound(2), DegreeBound(3), UNBOUNDED):
                    expect = brute_first(m, n, q, allowed_shapes(p, t))
                    assert enumerate_tree(p, t) == expect, (p, t)


params = st.builds(Params, st.integers(0, 40), st.integers(0, 40), st.integers(1, 15)).filter(lambda p: p.a >= 1)


@settings(max_examples=400)
@given(params)
def test_identities_and_embedding(p):
    kp = enumerate_proper(p)
    if kp is not None:
        assert identities_hold(kp, p)
        for t in (DegreeBound(1), DegreeBound(p.a), UNBOUNDED):
            assert enumerate_tree(p, t) is not None
        assert residual_tree(embed_proper(kp), p) == (0, 0, 0)
    for t in (DegreeBound(1), DegreeBound(2), UNBOUNDED):
        k = enumerate_tree(p, t)
        if k is not None:
            assert identities_hold(k, p)
            assert all(k[i] == 0 for i in range(8) if i not in allowed_shapes(p, t))


@settings(max_examples=300)
@given(params, st.integers(1, 8))
def test_monotone_in_t(p, t):
    if enumerate_tree(p, DegreeBound(t)) is not None:
        assert enumerate_tree(p, DegreeBound(t + 1)) is not None
        assert enumerate_tree(p, UNBOUNDED) is not None


@given(params)
def test_symmetric_feasibility(p):
    assert (enumerate_tree(p) is None) == (enumerate_tree(p.swapped()) is None)
    assert (enumerate_proper(p) is None) == (enumerate_proper(p.swapped()) is None)
