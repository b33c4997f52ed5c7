from fractions import Fraction as F
from itertools import permutations

import pytest
from hypothesis import given, settings

from conftest import interval_lists
from naive import edges_from_coordinates
from tsreconf import GraphError, build_graph
from tsreconf.interval_model import UnknownVertexError


def edge_set(g):
    ids = g.ids
    return {
        frozenset((u, v)) for i, u in enumerate(ids) for v in ids[i + 1 :] if g.adjacent(u, v)
    }


def test_build_graph_edges(g3):
    assert edge_set(g3) == {frozenset("AB"), frozenset("CD")}


def test_single_vertex():
    g = build_graph([("X", 0, 1)])
    assert len(g) == 1
    assert edge_set(g) == set()


def test_touching_endpoints_are_adjacent():
    g = build_graph([("P", 0, 2), ("Q", 2, 4)])
    assert g.adjacent("P", "Q")
    # normalized ranks are distinct and P's right endpoint sits after Q's left one
    ranks = [g.left_rank(0), g.right_rank(0), g.left_rank(1), g.right_rank(1)]
    assert sorted(ranks) == [0, 1, 2, 3]
    assert g.left_rank(1) < g.right_rank(0)


@pytest.mark.parametrize(
    "raw, message",
    [
        ([], "empty"),
        ([("A", 0, 1), ("A", 2, 3)], "duplicate"),
        ([("A", 2, 2)], "left >= right"),
        ([("A", 3, 1)], "left >= right"),
        ([("A", 0.5, 1)], "not exact"),
    ],
)
def test_build_graph_errors(raw, message):
    with pytest.raises(GraphError, match=message):
        build_graph(raw)


def test_rational_coordinates():
    g = build_graph([("A", "1/3", "2/3"), ("B", F(2, 3), 1)])
    assert g.interval("A").right == F(2, 3)
    assert g.adjacent("A", "B")


@pytest.mark.parametrize("u, v, expected", [("A", "B", True), ("B", "C", False), ("A", "D", False)])
def test_adjacent(g3, u, v, expected):
    assert g3.adjacent(u, v) is expected
    assert g3.adjacent(v, u) is expected


def test_adjacent_rejects_self_and_unknown(g3):
    with pytest.raises(GraphError):
        g3.adjacent("A", "A")
    with pytest.raises(UnknownVertexError):
        g3.adjacent("A", "Z")


def test_closed_neighborhood(g3):
    assert g3.closed_neighborhood("A") == {"A", "B"}
    assert g3.closed_neighborhood("C") == {"C", "D"}
    assert build_graph([("X", 0, 1)]).closed_neighborhood("X") == {"X"}
    with pytest.raises(UnknownVertexError):
        g3.closed_neighborhood("Q")


def test_restrict(g3):
    h = g3.restrict({"C", "D"})
    assert set(h.ids) == {"A", "B"}
    assert h.adjacent("A", "B")
    assert g3.restrict(set()) == g3
    empty = g3.restrict({"A", "B", "C", "D"})
    assert len(empty) == 0 and empty.ids == ()
    assert h.order_left == ("A", "B")
    with pytest.raises(UnknownVertexError):
        g3.restrict({"Z"})
    with pytest.raises(UnknownVertexError):
        h.restrict({"C"})  # already removed
    with pytest.raises(UnknownVertexError):
        h.adjacent("A", "C")


def test_component_of(g3, chain):
    assert g3.component_of("B") == {"A", "B"}
    assert g3.component_of("D") == {"C", "D"}
    assert chain.component_of("P1") == {"P1", "P2", "P3"}
    assert g3.restrict({"B"}).component_of("A") == {"A"}


def test_compare_order(g3):
    assert g3.compare_order("right", "A", "B") == "less"
    assert g3.compare_order("left", "D", "C") == "greater"
    assert g3.compare_order("right", "D", "A") == "greater"
    with pytest.raises(GraphError):
        g3.compare_order("left", "A", "A")
    with pytest.raises(UnknownVertexError):
        g3.compare_order("left", "A", "Z")


def test_orders(g3):
    assert g3.order_left == ("A", "B", "C", "D")
    assert g3.order_right == ("A", "B", "C", "D")
    g = build_graph([("W", 0, 10), ("N", 1, 2)])
    assert g.order_left == ("W", "N")
    assert g.order_right == ("N", "W")
    assert g.left_index("N") == 2 and g.right_index("N") == 1


@settings(max_examples=200, deadline=None)
@given(interval_lists(distinct=True))
def test_normalization_keeps_adjacency_of_distinct_endpoints(raw):
    g = build_graph(raw)
    assert edge_set(g) == edges_from_coordinates(g)


@settings(max_examples=200, deadline=None)
@given(interval_lists())
def test_closed_interval_semantics_with_ties(raw):
    g = build_graph(raw)
    assert edge_set(g) == edges_from_coordinates(g)


@settings(max_examples=100, deadline=None)
@given(interval_lists(max_size=6))
def test_adjacency_symmetric_irreflexive(raw):
    g = build_graph(raw)
    for u in g.ids:
        with pytest.raises(GraphError):
            g.adjacent(u, u)
        for v in g.ids:
            if u != v:
                assert g.adjacent(u, v) == g.adjacent(v, u)


@settings(max_examples=100, deadline=None)
@given(interval_lists(max_size=6))
def test_compare_order_is_strict_total(raw):
    g = build_graph(raw)
    for which in ("left", "right"):
        less = lambda u, v: g.compare_order(which, u, v) == "less"  # noqa: E731
        for u, v in permutations(g.ids, 2):
            assert less(u, v) != less(v, u)
        for u, v, w in permutations(g.ids, 3):
            if less(u, v) and less(v, w):
                assert less(u, w)


@settings(max_examples=100, deadline=None)
@given(interval_lists(max_size=7))
def test_restrict_matches_brute_force(raw):
    g = build_graph(raw)
    ids = list(g.ids)
    removed = set(ids[::2])
    h = g.restrict(removed)
    expected = {e for e in edge_set(g) if not (e & removed)}
    assert edge_set(h) == expected
    assert h.order_left == tuple(u for u in g.order_left if u not in removed)
    assert h.order_right == tuple(u for u in g.order_right if u not in removed)
