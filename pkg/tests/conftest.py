from fractions import Fraction as F

import pytest
from hypothesis import strategies as st

from tsreconf import build_graph

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def g3():
    return build_graph([("A", 0, 2), ("B", 1, 3), ("C", 4, 6), ("D", 5, 7)])


@pytest.fixture
def g5():
    return build_graph(
        [("t", 0, 1), ("c", F(1, 2), F(9, 2)), ("a", 2, 3), ("b", 4, 5), ("f", F(24, 5), 7)]
    )


@pytest.fixture
def chain():
    return build_graph([("P1", 0, 3), ("P2", 2, 5), ("P3", 4, 7)])


@st.composite
def interval_lists(draw, min_size=1, max_size=8, span=30, distinct=False):
    """Raw ``(id, left, right)`` triples with small integer coordinates."""
    n = draw(st.integers(min_size, max_size))
    if distinct:
        coords = draw(st.lists(st.integers(0, span), min_size=2 * n, max_size=2 * n, unique=True))
        pairs = [sorted(coords[2 * i : 2 * i + 2]) for i in range(n)]
    else:
        pairs = []
        for _ in range(n):
            lo = draw(st.integers(0, span - 1))
            hi = draw(st.integers(lo + 1, span))
            pairs.append((lo, hi))
    return [(f"x{i}", lo, hi) for i, (lo, hi) in enumerate(pairs)]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
