import random

import pytest

from naive import bfs, edges_from_coordinates, extreme_set, independent_sets, line_sorted
from tsreconf import (
    ConfigurationError,
    build_graph,
    canonicalize,
    decide_and_construct,
    reconfigure_to_extreme,
    validate_sequence,
)
from tsreconf import solver
from tsreconf.generators import gen_lower_bound, gen_random_interval
from tsreconf.oracle import extreme_set_of_component


def test_reconfigure_examples(g3, g5):
    assert reconfigure_to_extreme(g3, 2, ("B", "C")) == (("A", "D"), [("B", "A"), ("C", "D")])
    assert reconfigure_to_extreme(g5, 2, ("a", "b")) == (("t", "f"), [("b", "f"), ("a", "c"), ("c", "t")])


def test_reconfigure_lower_bound_instance():
    inst = gen_lower_bound(2, 2)
    x, s = reconfigure_to_extreme(inst.graph, 2, inst.I)
    assert x == extreme_set_of_component(inst.graph, 2, inst.I, 1)
    assert validate_sequence(inst.graph, inst.I, s, x).ok


def test_reconfigure_errors(g3):
    with pytest.raises(ConfigurationError):
        reconfigure_to_extreme(g3, 2, ("A", "B"))
    with pytest.raises(ConfigurationError):
        reconfigure_to_extreme(g3, 2, ("A",))
    with pytest.raises(ValueError):
        reconfigure_to_extreme(g3, 1, ("A",))


def test_decide_examples(g3):
    d = decide_and_construct(g3, 2, ("B", "C"), ("A", "D"))
    assert d.reconfigurable and d.sequence == [("B", "A"), ("C", "D")]
    g = build_graph([("E", 0, 1), ("F", "1/2", "3/2"), ("G2", 3, 4)])
    d = decide_and_construct(g, 1, ("E",), ("G2",))
    assert not d.reconfigurable and d.sequence is None
    d = decide_and_construct(g, 1, ("E",), ("F",))
    assert d.reconfigurable and validate_sequence(g, ("E",), d.sequence, ("F",)).ok


def test_decide_lower_bound_2_2():
    inst = gen_lower_bound(2, 2)
    d = decide_and_construct(inst.graph, 2, inst.I, inst.J)
    assert d.reconfigurable
    assert validate_sequence(inst.graph, inst.I, d.sequence, inst.J).ok


def test_decide_errors(g3):
    with pytest.raises(ConfigurationError):
        decide_and_construct(g3, 2, ("B", "C"), ("A",))
    with pytest.raises(ConfigurationError):
        decide_and_construct(g3, 2, ("A", "B"), ("A", "D"))


def test_solver_state_invariants_recorded():
    inst = gen_lower_bound(3, 3)
    state = solver.run_reconfigure(inst.graph, 3, inst.I)
    n = len(inst.graph)
    assert state.iterations <= solver.iteration_bound(n, 3)
    assert all(b > a for a, b in zip(state.potentials, state.potentials[1:]))
    assert max(state.potentials) <= solver.iteration_bound(n, 3)
    assert all(moves <= 2 * size for moves, size in state.pair_moves)
    assert state.j == 3 and state.a == state.lext[:2] + state.rext[2:]


def test_invariant_violation_is_raised(monkeypatch, g3):
    monkeypatch.setattr(solver, "iteration_bound", lambda n, k: 0)
    with pytest.raises(solver.InvariantViolation):
        solver.run_reconfigure(g3, 2, ("B", "C"))


def test_runs_on_restricted_view(g3):
    h = g3.restrict({"B"})
    x, s = reconfigure_to_extreme(h, 2, ("A", "C"))
    assert x == ("A", "D")
    assert validate_sequence(h, ("A", "C"), s, x).ok


def corpus(count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, 9)
        yield gen_random_interval(n, rng.randrange(10**6), rng.choice(["short", "uniform-endpoints"])), rng.randint(1, 3)


@pytest.mark.parametrize("g, k", list(corpus(80, 5)))
def test_canonical_form_is_component_invariant(g, k):
    ids, edges = list(g.ids), edges_from_coordinates(g)
    seen = set()
    for s in independent_sets(ids, edges, k):
        if s in seen:
            continue
        comp = bfs(ids, edges, s)
        seen.update(comp)
        expected = extreme_set(g, comp, k, k - 1)
        for member in comp:
            start = line_sorted(g, member)
            x, seq = canonicalize(g, k, start)
            assert x == expected
            assert validate_sequence(g, start, seq, x).ok
            assert len(seq) <= solver.length_bound(len(g), k)
