import random
from itertools import combinations

import pytest

from naive import bfs, edges_from_coordinates, independent_sets, line_sorted
from tsreconf import apply_move, build_graph, make_configuration
from tsreconf import oracle
from tsreconf.generators import gen_random_interval
from tsreconf.kernels import StateLimitExceeded
from tsreconf.oracle import AbstractGraph


def test_abstract_graph_checks():
    with pytest.raises(ValueError):
        AbstractGraph(["a", "a"])
    with pytest.raises(ValueError):
        AbstractGraph(["a"], [("a", "a")])
    with pytest.raises(KeyError):
        AbstractGraph(["a"], [("a", "b")])


def test_enumerate_configurations(g3):
    assert oracle.enumerate_configurations(g3, 2) == [("A", "C"), ("A", "D"), ("B", "C"), ("B", "D")]
    tri = AbstractGraph("xyz", [("x", "y"), ("y", "z"), ("x", "z")])
    assert oracle.enumerate_configurations(tri, 2) == []
    assert oracle.enumerate_configurations(g3, 1) == [("A",), ("B",), ("C",), ("D",)]
    assert oracle.enumerate_configurations(AbstractGraph.from_interval_graph(g3), 2) == [
        ("A", "C"), ("A", "D"), ("B", "C"), ("B", "D")
    ]


def test_bfs_reconfigurable(g3):
    assert oracle.bfs_reconfigurable(g3, 2, ("B", "C"), ("A", "D")) == (True, 2)
    assert oracle.bfs_reconfigurable(g3, 2, ("B", "C"), ("B", "C")) == (True, 0)
    h = AbstractGraph(["E", "F", "G2"], [("E", "F")])
    assert oracle.bfs_reconfigurable(h, 1, ("E",), ("G2",)) == (False, None)
    with pytest.raises(ValueError):
        oracle.bfs_reconfigurable(g3, 2, ("A", "B"), ("A", "D"))


def test_state_graph(g3):
    sg = oracle.state_graph(g3, ("B", "C"))
    assert len(sg) == 4
    assert sg.adjacency[("B", "C")] == {("A", "C"), ("B", "D")}
    for s, nbrs in sg.adjacency.items():
        for t in nbrs:
            assert s in sg.adjacency[t]


def test_extreme_set_examples(g3, g5):
    single = build_graph([("E", 0, 1), ("F", 2, 3)])
    for p in range(3):
        assert oracle.extreme_set_of_component(single, 2, ("E", "F"), p) == ("E", "F")
    assert oracle.extreme_set_of_component(g3, 2, ("B", "C"), 1) == ("A", "D")
    assert oracle.extreme_set_of_component(g5, 2, ("a", "b"), 1) == ("t", "f")
    with pytest.raises(ValueError):
        oracle.extreme_set_of_component(g3, 2, ("B", "C"), 3)
    with pytest.raises(TypeError):
        oracle.extreme_set_of_component(AbstractGraph.from_interval_graph(g3), 2, ("B", "C"), 1)


def test_state_cap(g3):
    with pytest.raises(StateLimitExceeded):
        oracle.component(g3, ("B", "C"), cap=2)


@pytest.mark.parametrize("seed", range(60))
def test_components_match_naive_bfs(seed):
    g = gen_random_interval(3 + seed % 6, seed, "short" if seed % 2 else "uniform-endpoints")
    ids, edges = list(g.ids), edges_from_coordinates(g)
    for k in (1, 2, 3):
        naive_states = {line_sorted(g, s) for s in independent_sets(ids, edges, k)}
        assert set(oracle.enumerate_configurations(g, k)) == naive_states
        for s in naive_states:
            expected = {line_sorted(g, t): d for t, d in bfs(ids, edges, frozenset(s)).items()}
            assert oracle.component(g, s) == expected


@pytest.mark.parametrize("seed", range(40))
def test_distance_metric_properties(seed):
    g = gen_random_interval(4 + seed % 5, seed, "short")
    rng = random.Random(seed)
    for k in (1, 2):
        states = oracle.enumerate_configurations(g, k)
        if not states:
            continue
        triples = [tuple(rng.choice(states) for _ in range(3)) for _ in range(15)]
        for a, b, c in triples:
            ab = oracle.bfs_reconfigurable(g, k, a, b)
            assert ab == oracle.bfs_reconfigurable(g, k, b, a)
            bc = oracle.bfs_reconfigurable(g, k, b, c)
            ac = oracle.bfs_reconfigurable(g, k, a, c)
            if ab[0] and bc[0]:
                assert ac[0] and ac[1] <= ab[1] + bc[1]


@pytest.mark.parametrize("seed", range(40))
def test_state_adjacency_matches_apply_move(seed):
    g = gen_random_interval(3 + seed % 5, seed, "short")
    for k in (1, 2):
        for s in oracle.enumerate_configurations(g, k):
            sg_adj = oracle.state_graph(g, s).adjacency[s]
            feasible = set()
            for u in s:
                for v in g.ids:
                    try:
                        feasible.add(apply_move(g, s, (u, v)))
                    except Exception:
                        pass
            assert sg_adj == feasible
