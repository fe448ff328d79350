import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equitree.coloring import (
    UNBOUNDED,
    ColoringError,
    DegreeBound,
    is_equitable,
    is_proper,
    verify_tree_coloring,
)
from equitree.decider import (
    condition_A,
    condition_B,
    decide_equitable_tree,
    decide_proper_equitable,
    realize,
    witness_A,
    witness_B,
)
from equitree.graph import complete_bipartite
from equitree.kvector import DegenerateParams, Params, enumerate_tree, identities_hold
from equitree.oracle import SearchConfig, oracle_proper, oracle_tree


@pytest.mark.parametrize(
    "m,n,q,clause",
    [(4, 4, 2, "A.i"), (2, 3, 2, "A.ii"), (7, 6, 4, "A.iii"), (9, 2, 3, None), (2, 9, 3, None)],
)
def test_condition_A(m, n, q, clause):
    assert condition_A(m, n, q) == clause


@pytest.mark.parametrize(
    "m,n,q,clause",
    [(4, 4, 3, "B.i"), (1, 5, 2, "B.ii"), (9, 2, 3, "B.ii"), (7, 3, 2, None), (3, 7, 2, None)],
)
def test_condition_B(m, n, q, clause):
    assert condition_B(m, n, q) == clause


def test_conditions_reject_degenerate():
    with pytest.raises(DegenerateParams):
        condition_A(1, 1, 5)
    with pytest.raises(DegenerateParams):
        condition_B(1, 1, 5)


def test_oracle_backs_condition_examples():
    assert oracle_proper(complete_bipartite(2, 3)[0], 2, equitable=True) is not None
    assert oracle_proper(complete_bipartite(9, 2)[0], 3, equitable=True) is None
    cfg = SearchConfig(equitable=True, t=DegreeBound(2))
    assert oracle_tree(complete_bipartite(4, 4)[0], 3, cfg) is not None
    assert oracle_tree(complete_bipartite(7, 3)[0], 2, SearchConfig(equitable=True)) is None


@pytest.mark.parametrize(
    "m,n,q,clause,k",
    [
        # r = 0: all classes have a vertices, so the counts sit in the size-a slots
        (4, 4, 2, "A.i", (0, 1, 0, 1)),
        (2, 3, 2, "A.ii", (0, 1, 1, 0)),
        (7, 6, 4, "A.iii", (1, 1, 0, 2)),
    ],
)
def test_witness_A(m, n, q, clause, k):
    assert witness_A(m, n, q, clause) == k


@pytest.mark.parametrize(
    "m,n,q,clause,k",
    [
        (4, 4, 3, "B.i", (1, 0, 0, 1, 0, 0, 1, 0)),
        (1, 5, 2, "B.ii", (0, 0, 0, 1, 0, 0, 0, 1)),
        (9, 2, 3, "B.ii", (2, 0, 0, 0, 0, 0, 0, 1)),
    ],
)
def test_witness_B(m, n, q, clause, k):
    assert witness_B(m, n, q, clause) == k


def test_witness_clause_mismatch():
    with pytest.raises(ValueError):
        witness_A(4, 4, 2, "A.ii")
    with pytest.raises(ValueError):
        witness_B(7, 3, 2, "B.i")


def _classes(col, m):
    def name(v):
        return f"x{v + 1}" if v < m else f"y{v - m + 1}"

    return [[name(v) for v in members] for members in col.classes()]


def test_realize_examples():
    _, meta = complete_bipartite(2, 3)
    col = realize(meta, 2, 2, (0, 1, 1, 0))
    assert _classes(col, 2) == [["x1", "x2"], ["y1", "y2", "y3"]]

    g, meta = complete_bipartite(9, 2)
    col = realize(meta, 3, 3, (2, 0, 0, 0, 0, 0, 0, 1))
    assert _classes(col, 9) == [["x1", "x2", "x3", "x4"], ["x5", "x6", "x7", "x8"], ["x9", "y1", "y2"]]
    assert verify_tree_coloring(g, col, DegreeBound(2)).ok and is_equitable(col)

    g, meta = complete_bipartite(4, 4)
    col = realize(meta, 3, 2, (1, 0, 0, 1, 0, 0, 1, 0))
    assert _classes(col, 4) == [["x1", "x2", "x3"], ["y1", "y2"], ["x4", "y3", "y4"]]
    assert verify_tree_coloring(g, col, DegreeBound(2)).ok


def test_realize_rejects_infeasible():
    _, meta = complete_bipartite(2, 3)
    with pytest.raises(ColoringError):
        realize(meta, 2, 2, (1, 0, 0, 1))


def test_decide_proper_examples():
    v = decide_proper_equitable(3, 3, 3)
    assert not v.feasible
    assert oracle_proper(complete_bipartite(3, 3)[0], 3, equitable=True) is None
    v = decide_proper_equitable(2, 3, 2)
    assert (v.feasible, v.orientation, v.clause) == (True, "as-given", "A.ii")
    v = decide_proper_equitable(1, 1, 5)
    assert (v.feasible, v.clause, v.a) == (True, "degenerate", 0)


def test_decide_tree_examples():
    assert not decide_equitable_tree(7, 3, 2, UNBOUNDED).feasible
    v = decide_equitable_tree(4, 4, 3, DegreeBound(2))
    assert (v.feasible, v.clause, v.witness_k) == (True, "B.i", (1, 0, 0, 1, 0, 0, 1, 0))
    assert condition_A(4, 4, 3) is None
    v = decide_equitable_tree(3, 1, 2, DegreeBound(1))
    assert (v.feasible, v.clause) == (True, "enumerated")
    assert _classes(v.witness_coloring, 3) == [["x1", "x2"], ["x3", "y1"]]
    assert oracle_tree(complete_bipartite(3, 1)[0], 2, SearchConfig(equitable=True, t=DegreeBound(1)))


def test_swapped_orientation_maps_back():
    # (3,6) satisfies neither condition; (6,3) satisfies B.ii
    assert condition_B(3, 6, 2) is None and condition_B(6, 3, 2) == "B.ii"
    v = decide_equitable_tree(3, 6, 2, UNBOUNDED)
    assert (v.orientation, v.clause) == ("swapped", "B.ii")
    g, _ = complete_bipartite(3, 6)
    assert verify_tree_coloring(g, v.witness_coloring, UNBOUNDED).ok and is_equitable(v.witness_coloring)
    # classes start with Y vertices because the sides were swapped
    assert _classes(v.witness_coloring, 3)[0][0] == "y1"


def test_zero_side_is_degenerate():
    v = decide_equitable_tree(0, 5, 2, DegreeBound(1))
    assert v.feasible and v.clause == "degenerate"
    assert sorted(v.witness_coloring.class_sizes()) == [2, 3]


def test_bad_q_and_t():
    with pytest.raises(ValueError):
        decide_proper_equitable(2, 2, 0)
    with pytest.raises(TypeError):
        decide_equitable_tree(2, 2, 2, 2)


def test_certificate_field_order():
    cert = decide_equitable_tree(4, 4, 3, DegreeBound(2)).certificate()
    assert list(cert) == ["feasible", "orientation", "clause", "a", "r", "k", "coloring"]
    assert cert["coloring"] == {"q": 3, "t": 2, "classes": [[1, 2, 3], [5, 6], [4, 7, 8]]}
    cert = decide_equitable_tree(7, 3, 2, UNBOUNDED).certificate()
    assert cert == {"feasible": False, "orientation": "as-given", "clause": "none", "a": 5, "r": 0, "k": None}


sizes = st.integers(0, 30)
qs = st.integers(1, 12)
bounds = st.one_of(st.just(UNBOUNDED), st.integers(1, 8).map(DegreeBound))


@settings(max_examples=300)
@given(sizes, sizes, qs, bounds)
def test_symmetry(m, n, q, t):
    if m + n == 0:
        return
    assert decide_equitable_tree(m, n, q, t, False).feasible == decide_equitable_tree(n, m, q, t, False).feasible
    assert decide_proper_equitable(m, n, q, False).feasible == decide_proper_equitable(n, m, q, False).feasible


@settings(max_examples=300)
@given(sizes, sizes, qs, bounds)
def test_soundness_of_witnesses(m, n, q, t):
    if m + n == 0:
        return
    g, meta = complete_bipartite(m, n)
    v = decide_equitable_tree(m, n, q, t)
    if v.feasible:
        assert verify_tree_coloring(g, v.witness_coloring, t).ok
        assert is_equitable(v.witness_coloring)
        if v.witness_k is not None:
            assert identities_hold(v.witness_k, Params(m, n, q))
    v = decide_proper_equitable(m, n, q)
    if v.feasible:
        assert is_proper(g, v.witness_coloring) and is_equitable(v.witness_coloring)


@settings(max_examples=300)
@given(sizes, sizes, qs, st.integers(1, 10))
def test_proper_implies_tree_and_monotone(m, n, q, t):
    if m + n == 0:
        return
    if decide_proper_equitable(m, n, q, False).feasible:
        assert decide_equitable_tree(m, n, q, DegreeBound(1), False).feasible
    if decide_equitable_tree(m, n, q, DegreeBound(t), False).feasible:
        assert decide_equitable_tree(m, n, q, DegreeBound(t + 1), False).feasible
        assert decide_equitable_tree(m, n, q, UNBOUNDED, False).feasible


@settings(max_examples=300)
@given(st.integers(1, 40), st.integers(1, 40), qs)
def test_closed_form_matches_enumeration_for_t_at_least_a(m, n, q):
    p = Params(m, n, q)
    if p.a < 1:
        return
    for t in (DegreeBound(p.a), DegreeBound(p.a + 3), UNBOUNDED):
        assert decide_equitable_tree(m, n, q, t, False).feasible == (enumerate_tree(p, t) is not None)
