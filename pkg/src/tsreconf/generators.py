"""Instance families.

* ``gen_lower_bound(m, k)`` realizes the interval family on which every
  reconfiguration between its two distinguished sets needs about k^2 m / 4
  slides.  Its adjacency is checked against a table derived independently from
  the combinatorial description (which intervals are open, which endpoints
  coincide).
* ``gen_random_interval`` draws seeded random interval graphs.
* ``gen_hardness`` builds the incomparability graph of the layered poset
  whose size-n chains are exactly the H-words of length n, and
  ``hword_reachability_oracle`` solves the word problem directly.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterable, Optional, Sequence

from tsreconf.interval_model import IntervalGraph, build_graph
from tsreconf.oracle import AbstractGraph
from tsreconf.reconfiguration import make_configuration

__all__ = [
    "Digraph",
    "HWordError",
    "HardnessInstance",
    "LowerBoundInstance",
    "gen_hardness",
    "gen_lower_bound",
    "gen_random_interval",
    "hword_reachability_oracle",
    "max_clique_size",
    "RANDOM_MODELS",
]


# --- lower-bound family -----------------------------------------------------------


@dataclass
class LowerBoundInstance:
    graph: IntervalGraph
    roles: dict
    I: tuple
    J: tuple
    m: int
    k: int
    expected_edges: frozenset = field(repr=False, default=frozenset())

    @property
    def n(self) -> int:
        return len(self.graph)

    def realized_edges(self) -> frozenset:
        g = self.graph
        return frozenset(
            frozenset((u, v)) for u, v in combinations(g.ids, 2) if g.adjacent(u, v)
        )


def _lower_bound_layout(m: int, k: int):
    """Slot index of every base interval, left to right, plus the long-interval anchors."""
    big_n = m + 2 * k - 1
    base = [f"a{i}" for i in range(k - 1, 0, -1)]
    base += [f"v{i}" for i in range(1, big_n + 1)]
    base += [f"b{i}" for i in range(1, k + 1)]
    slot = {name: t for t, name in enumerate(base)}
    paths = [(f"v{i}-{i + 1}", f"v{i}", f"v{i + 1}") for i in range(1, big_n)]
    # (name, base whose left endpoint it shares, base whose right endpoint it shares)
    longs = [(f"l{i}", f"a{i}", f"v{big_n - (k - 1) - i}") for i in range(1, k)]
    longs += [(f"r{i}", f"v{k - i + 1}", f"b{i}") for i in range(1, k + 1)]
    return big_n, base, slot, paths, longs


def _expected_edges(m: int, k: int) -> frozenset:
    """Adjacency of the construction read literally: base intervals closed,
    path and long intervals open, shared endpoints exactly shared."""
    _, base, slot, paths, longs = _lower_bound_layout(m, k)
    # (left, left_closed, right, right_closed) with base slot t at [2t, 2t + 1]
    shape = {}
    for name in base:
        t = slot[name]
        shape[name] = (Fraction(2 * t), True, Fraction(2 * t + 1), True)
    for name, lo, hi in paths:
        shape[name] = (Fraction(4 * slot[lo] + 1, 2), False, Fraction(4 * slot[hi] + 1, 2), False)
    for name, lo, hi in longs:
        shape[name] = (Fraction(2 * slot[lo]), False, Fraction(2 * slot[hi] + 1), False)

    def meet(x, y):
        l1, lc1, r1, rc1 = x
        l2, lc2, r2, rc2 = y
        if l1 > l2 or (l1 == l2 and not lc1):
            lo, lo_closed = l1, lc1
        else:
            lo, lo_closed = l2, lc2
        if r1 < r2 or (r1 == r2 and not rc1):
            hi, hi_closed = r1, rc1
        else:
            hi, hi_closed = r2, rc2
        return lo < hi or (lo == hi and lo_closed and hi_closed)

    names = list(shape)
    return frozenset(
        frozenset((u, v)) for u, v in combinations(names, 2) if meet(shape[u], shape[v])
    )


def gen_lower_bound(m: int, k: int) -> LowerBoundInstance:
    """Integer realization with base slot t at [10t, 10t+8].

    Path intervals run from just right of the middle of one base interval to
    just left of the middle of the next; long intervals are pulled one unit
    inward at both ends so no endpoint is shared.
    """
    if m < 1 or k < 1:
        raise ValueError("m and k must be positive")
    big_n, base, slot, paths, longs = _lower_bound_layout(m, k)
    raw = []
    roles = {}
    for name in base:
        t = slot[name]
        raw.append((name, 10 * t, 10 * t + 8))
        roles[name] = "base-" + name[0]
    for name, lo, hi in paths:
        raw.append((name, 10 * slot[lo] + 5, 10 * slot[hi] + 3))
        roles[name] = "path"
    for name, lo, hi in longs:
        raw.append((name, 10 * slot[lo] + 1, 10 * slot[hi] + 7))
        roles[name] = "long-" + name[0]
    g = build_graph(raw)
    I = make_configuration(g, [f"v{i}" for i in range(1, k + 1)])
    J = make_configuration(g, [f"b{i}" for i in range(1, k + 1)])
    inst = LowerBoundInstance(g, roles, I, J, m, k, _expected_edges(m, k))
    if inst.realized_edges() != inst.expected_edges:
        raise AssertionError(f"realization of G_{{{m},{k}}} disagrees with its description")
    return inst


# --- random interval graphs ---------------------------------------------------------

RANDOM_MODELS = ("uniform-endpoints", "short")


def gen_random_interval(n: int, seed: int, model: str = "uniform-endpoints") -> IntervalGraph:
    """Seeded random interval graph on ids ``x0 .. x{n-1}``.

    ``uniform-endpoints`` draws both endpoints uniformly from ``0..10n``
    (dense graphs); ``short`` draws a uniform left endpoint and a length in
    ``1..20`` (sparse graphs with many independent sets).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if model not in RANDOM_MODELS:
        raise ValueError(f"unknown model {model!r}; choose from {RANDOM_MODELS}")
    rng = random.Random(f"{model}:{n}:{seed}")
    span = 10 * n
    raw = []
    for i in range(n):
        if model == "uniform-endpoints":
            lo, hi = sorted(rng.sample(range(span + 1), 2))
        else:
            lo = rng.randint(0, span)
            hi = lo + rng.randint(1, 20)
        raw.append((f"x{i}", lo, hi))
    return build_graph(raw)


# --- hardness reduction --------------------------------------------------------------


@dataclass(frozen=True)
class Digraph:
    vertices: tuple
    arcs: frozenset

    @classmethod
    def make(cls, vertices: Iterable[Hashable], arcs: Iterable[tuple]) -> Digraph:
        vertices = tuple(vertices)
        arcs = frozenset(tuple(a) for a in arcs)
        known = set(vertices)
        for x, y in arcs:
            if x not in known or y not in known:
                raise ValueError(f"arc {x}->{y} uses an unknown vertex")
        return cls(vertices, arcs)


class HWordError(ValueError):
    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


def _check_word(h: Digraph, word: Sequence, name: str) -> tuple:
    word = tuple(word)
    for p, x in enumerate(word, start=1):
        if x not in h.vertices:
            raise HWordError(f"{name}: letter {x!r} at position {p} is not a vertex of H", p)
    for p in range(len(word) - 1):
        if (word[p], word[p + 1]) not in h.arcs:
            raise HWordError(
                f"{name} is not an H-word: no arc {word[p]}->{word[p + 1]} at position {p + 1}",
                p + 1,
            )
    return word


def element_id(x, level: int) -> str:
    return f"{x}@{level}"


@dataclass
class HardnessInstance:
    digraph: Digraph
    n: int
    graph: AbstractGraph
    A: tuple
    B: tuple
    elements: dict
    width_bound: int

    def precedes(self, p, q) -> bool:
        (x, i), (y, j) = self.elements[p], self.elements[q]
        return (j == i + 1 and (x, y) in self.digraph.arcs) or j > i + 1

    def word_of(self, state) -> tuple:
        levels = sorted((self.elements[u] for u in state), key=lambda e: e[1])
        if [lvl for _, lvl in levels] != list(range(1, self.n + 1)):
            raise ValueError(f"{state} does not hit every level once")
        return tuple(x for x, _ in levels)


def gen_hardness(h: Digraph, a: Sequence, b: Sequence) -> HardnessInstance:
    """Incomparability graph of the layered poset on V(H) x {1..n}.

    ``(x, i)`` precedes ``(y, j)`` when ``j = i + 1`` and ``xy`` is an arc, or
    ``j > i + 1``.  The H-words ``a`` and ``b`` become the chains
    ``{(a_i, i)}`` and ``{(b_i, i)}``, i.e. independent sets of size n.
    """
    a = _check_word(h, a, "a")
    b = _check_word(h, b, "b")
    if len(a) != len(b):
        raise HWordError(f"words have different lengths {len(a)} and {len(b)}")
    n = len(a)
    if n < 1:
        raise HWordError("words must be nonempty")
    elements = {}
    for level in range(1, n + 1):
        for x in h.vertices:
            elements[element_id(x, level)] = (x, level)

    def below(p, q):
        (x, i), (y, j) = elements[p], elements[q]
        return (j == i + 1 and (x, y) in h.arcs) or j > i + 1

    ids = list(elements)
    edges = [(p, q) for p, q in combinations(ids, 2) if not below(p, q) and not below(q, p)]
    graph = AbstractGraph(ids, edges)
    A = tuple(element_id(x, i) for i, x in enumerate(a, start=1))
    B = tuple(element_id(x, i) for i, x in enumerate(b, start=1))
    return HardnessInstance(h, n, graph, A, B, elements, 2 * len(h.vertices))


def hword_reachability_oracle(h: Digraph, a: Sequence, b: Sequence):
    """BFS over H-words changing one letter at a time: ``(reachable, distance)``."""
    a = _check_word(h, a, "a")
    b = _check_word(h, b, "b")
    if len(a) != len(b):
        raise HWordError(f"words have different lengths {len(a)} and {len(b)}")
    n = len(a)
    dist = {a: 0}
    queue = deque([a])
    while queue:
        w = queue.popleft()
        if w == b:
            return True, dist[w]
        for p in range(n):
            for y in h.vertices:
                if y == w[p]:
                    continue
                if p > 0 and (w[p - 1], y) not in h.arcs:
                    continue
                if p < n - 1 and (y, w[p + 1]) not in h.arcs:
                    continue
                nxt = w[:p] + (y,) + w[p + 1 :]
                if nxt not in dist:
                    dist[nxt] = dist[w] + 1
                    queue.append(nxt)
    return False, None


def max_clique_size(g: AbstractGraph) -> int:
    """Exact clique number by exhaustive branching (small graphs only)."""
    adj = g.adjacency_masks()
    best = 0

    def grow(size, cand):
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if not cand:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            grow(size + 1, cand & adj[v])

    grow(0, g.mask)
    return best
