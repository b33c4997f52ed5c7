"""Brute-force ground truth on the reconfiguration graph R_k(G).

Everything here works by explicit enumeration: independent sets of size k,
breadth-first search over single slides, and extreme sets computed straight
from their definition over an enumerated component.  It accepts interval
graphs as well as arbitrary graphs (``AbstractGraph``); states of an interval
graph are listed in line order, otherwise in vertex insertion order.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional

from tsreconf.interval_model import GraphError, IntervalGraph, UnknownVertexError
from tsreconf.kernels import state_component

__all__ = [
    "DEFAULT_STATE_CAP",
    "AbstractGraph",
    "StateGraph",
    "bfs_reconfigurable",
    "component",
    "components",
    "enumerate_configurations",
    "extreme_set_of_component",
    "state_graph",
]

DEFAULT_STATE_CAP = 5_000_000


class AbstractGraph:
    """Undirected simple graph on opaque ids."""

    def __init__(self, ids: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        self.ids = tuple(ids)
        self._index = {u: i for i, u in enumerate(self.ids)}
        if len(self._index) != len(self.ids):
            raise GraphError("duplicate vertex id")
        self._adj = [0] * len(self.ids)
        for u, v in edges:
            i, j = self.index(u), self.index(v)
            if i == j:
                raise GraphError(f"self-loop on {u!r}")
            self._adj[i] |= 1 << j
            self._adj[j] |= 1 << i
        self.mask = (1 << len(self.ids)) - 1

    @classmethod
    def from_interval_graph(cls, g: IntervalGraph) -> AbstractGraph:
        ids = g.ids
        edges = [(u, v) for u, v in combinations(ids, 2) if g.adjacent(u, v)]
        return cls(ids, edges)

    def __len__(self):
        return len(self.ids)

    def __contains__(self, u):
        return u in self._index

    def index(self, u) -> int:
        try:
            return self._index[u]
        except KeyError:
            raise UnknownVertexError(u) from None

    def adjacency_masks(self) -> list[int]:
        return self._adj

    def adjacent(self, u, v) -> bool:
        return (self._adj[self.index(u)] >> self.index(v)) & 1 == 1

    @property
    def edges(self) -> list[tuple[str, str]]:
        return [
            (self.ids[i], self.ids[j])
            for i in range(len(self.ids))
            for j in range(i + 1, len(self.ids))
            if (self._adj[i] >> j) & 1
        ]

    @property
    def root_ids(self):
        return self.ids


def _order_key(g):
    if isinstance(g, IntervalGraph):
        return g.left_ranks
    return None


def _decode(g, mask: int, key) -> tuple:
    ids = g.root_ids
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    if key is not None:
        out.sort(key=key.__getitem__)
    return tuple(ids[i] for i in out)


def _encode(g, state, k: Optional[int] = None) -> int:
    state = tuple(state)
    if k is not None and len(state) != k:
        raise ValueError(f"state {state} does not have {k} vertices")
    mask = 0
    for u in state:
        mask |= 1 << g.index(u)
    if mask.bit_count() != len(state):
        raise ValueError(f"state {state} repeats a vertex")
    adj = g.adjacency_masks()
    for u in state:
        if adj[g.index(u)] & mask:
            raise ValueError(f"state {state} is not independent")
    return mask


def canonical_state(g, state) -> tuple:
    return _decode(g, _encode(g, state), _order_key(g))


def enumerate_configurations(g, k: int) -> list[tuple]:
    """All independent sets of size ``k``, each canonically ordered."""
    if k < 1:
        raise ValueError("k must be positive")
    adj = g.adjacency_masks()
    alive = [i for i in range(len(adj)) if (g.mask >> i) & 1]
    key = _order_key(g)
    if key is not None:
        alive.sort(key=key.__getitem__)
    ids = g.root_ids
    out = []

    def extend(start, chosen, forbidden):
        if len(chosen) == k:
            out.append(tuple(ids[i] for i in chosen))
            return
        for p in range(start, len(alive)):
            v = alive[p]
            if not (forbidden >> v) & 1:
                chosen.append(v)
                extend(p + 1, chosen, forbidden | adj[v])
                chosen.pop()

    extend(0, [], 0)
    return out


def component(g, state, cap: int = DEFAULT_STATE_CAP) -> dict[tuple, int]:
    """BFS over R_k(g) from ``state``: maps every reachable state to its distance."""
    start = _encode(g, state)
    masks, dist = state_component(g.adjacency_masks(), g.mask, start, cap)
    key = _order_key(g)
    return {_decode(g, m, key): d for m, d in zip(masks, dist)}


def components(g, k: int, cap: int = DEFAULT_STATE_CAP) -> list[list[tuple]]:
    """Partition of all size-k independent sets into components of R_k(g)."""
    seen = set()
    parts = []
    for s in enumerate_configurations(g, k):
        if s in seen:
            continue
        comp = list(component(g, s, cap))
        seen.update(comp)
        parts.append(comp)
    return parts


def bfs_reconfigurable(g, k: int, I, J, cap: int = DEFAULT_STATE_CAP):
    """``(True, distance)`` when J is reachable from I in R_k(g), else ``(False, None)``."""
    _encode(g, I, k)
    target = canonical_state(g, J)
    if len(target) != k:
        raise ValueError(f"state {J} does not have {k} vertices")
    dist = component(g, I, cap)
    d = dist.get(target)
    return (d is not None), d


class StateGraph:
    """Explicit R_k(g) restricted to the component of a start state."""

    def __init__(self, states: list[tuple], adjacency: dict[tuple, frozenset]):
        self.states = states
        self.adjacency = adjacency

    def __len__(self):
        return len(self.states)


def state_graph(g, state, cap: int = DEFAULT_STATE_CAP) -> StateGraph:
    dist = component(g, state, cap)
    key = _order_key(g)
    adj = g.adjacency_masks()
    masks = {s: _encode(g, s) for s in dist}
    adjacency = {}
    for s, m in masks.items():
        nbrs = set()
        for u in s:
            iu = g.index(u)
            rest = m & ~(1 << iu)
            cand = adj[iu] & g.mask & ~m
            while cand:
                low = cand & -cand
                v = low.bit_length() - 1
                cand ^= low
                if not adj[v] & rest:
                    nbrs.add(_decode(g, rest | low, key))
        adjacency[s] = frozenset(nbrs)
    return StateGraph(list(dist), adjacency)


def extreme_set_of_component(g: IntervalGraph, k: int, state, p: int, cap: int = DEFAULT_STATE_CAP) -> tuple:
    """The p-extreme set of the component of ``state``, straight from the definition.

    Coordinates ``1..p`` take the right-endpoint minimum over the component of
    that coordinate, coordinates ``p+1..k`` the left-endpoint maximum.
    """
    if not isinstance(g, IntervalGraph):
        raise TypeError("extreme sets need the line orders of an interval graph")
    if not 0 <= p <= k:
        raise ValueError(f"p must lie in 0..{k}, got {p}")
    _encode(g, state, k)
    comp = list(component(g, state, cap))
    lr, rr = g.left_ranks, g.right_ranks
    out = []
    for c in range(k):
        column = {s[c] for s in comp}
        if c < p:
            out.append(min(column, key=lambda u: rr[g.index(u)]))
        else:
            out.append(max(column, key=lambda u: lr[g.index(u)]))
    return tuple(out)
