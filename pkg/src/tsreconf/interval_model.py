"""Interval graphs with a fixed representation.

Endpoints are exact rationals.  Ties between coordinates are broken
symbolically: at equal coordinates a left endpoint sorts before a right
endpoint (so touching closed intervals stay adjacent), and endpoints of the
same kind are ordered by insertion index.  After that every endpoint has a
distinct integer rank in ``0 .. 2n-1`` and all comparisons use the ranks.

A graph is immutable.  ``restrict`` returns a view that shares the parent's
representation and hides the removed vertices, so ids keep their meaning
across induced subgraphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Literal

__all__ = [
    "GraphError",
    "Interval",
    "IntervalGraph",
    "UnknownVertexError",
    "build_graph",
    "to_fraction",
]


class GraphError(ValueError):
    """Malformed graph input."""


class UnknownVertexError(GraphError, KeyError):
    def __str__(self):
        return f"unknown vertex {self.args[0]!r}"


def to_fraction(value) -> Fraction:
    """Parse an exact coordinate: an int, a Fraction, or a ``"p/q"`` string."""
    if isinstance(value, bool) or isinstance(value, float):
        raise GraphError(f"coordinate {value!r} is not exact; use int, Fraction or 'p/q'")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        try:
            if "." in value or "e" in value.lower():
                raise ValueError
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise GraphError(f"bad coordinate {value!r}") from None
    raise GraphError(f"bad coordinate {value!r}")


@dataclass(frozen=True)
class Interval:
    id: str
    left: Fraction
    right: Fraction


class _Representation:
    """Shared, immutable data of a graph and all of its restrictions."""

    __slots__ = ("intervals", "ids", "index", "lrank", "rrank", "adj",
                 "by_left", "by_right", "pos_left", "pos_right")

    def __init__(self, intervals: tuple[Interval, ...]):
        n = len(intervals)
        self.intervals = intervals
        self.ids = tuple(iv.id for iv in intervals)
        self.index = {iv.id: i for i, iv in enumerate(intervals)}
        keys = []
        for i, iv in enumerate(intervals):
            keys.append((iv.left, 0, i))
            keys.append((iv.right, 1, i))
        keys.sort()
        self.lrank = [0] * n
        self.rrank = [0] * n
        for rank, (_, kind, i) in enumerate(keys):
            if kind == 0:
                self.lrank[i] = rank
            else:
                self.rrank[i] = rank
        lr, rr = self.lrank, self.rrank
        adj = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if lr[i] < rr[j] and lr[j] < rr[i]:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        self.adj = adj
        self.by_left = sorted(range(n), key=lr.__getitem__)
        self.by_right = sorted(range(n), key=rr.__getitem__)
        self.pos_left = [0] * n
        self.pos_right = [0] * n
        for p, i in enumerate(self.by_left):
            self.pos_left[i] = p
        for p, i in enumerate(self.by_right):
            self.pos_right[i] = p


def build_graph(raw: Iterable[tuple]) -> IntervalGraph:
    """Build a graph from ``(id, left, right)`` triples.

    >>> g = build_graph([("P", 0, 2), ("Q", 2, 4)])
    >>> g.adjacent("P", "Q")
    True
    """
    intervals = []
    seen = set()
    for item in raw:
        try:
            ident, left, right = item
        except (TypeError, ValueError):
            raise GraphError(f"expected (id, left, right), got {item!r}") from None
        ident = str(ident)
        if ident in seen:
            raise GraphError(f"duplicate id {ident!r}")
        seen.add(ident)
        lo, hi = to_fraction(left), to_fraction(right)
        if not lo < hi:
            raise GraphError(f"interval {ident!r} has left >= right ({lo} >= {hi})")
        intervals.append(Interval(ident, lo, hi))
    if not intervals:
        raise GraphError("empty interval list")
    rep = _Representation(tuple(intervals))
    return IntervalGraph(rep, (1 << len(intervals)) - 1)


class IntervalGraph:
    """An interval graph, possibly an induced subgraph of a parent graph."""

    __slots__ = ("_rep", "mask")

    def __init__(self, rep: _Representation, mask: int):
        self._rep = rep
        self.mask = mask

    # --- basic container protocol -------------------------------------------------

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, ident) -> bool:
        i = self._rep.index.get(ident)
        return i is not None and (self.mask >> i) & 1 == 1

    def __iter__(self) -> Iterator[str]:
        return iter(self.ids)

    def __eq__(self, other):
        if not isinstance(other, IntervalGraph):
            return NotImplemented
        return self.intervals == other.intervals

    def __hash__(self):
        return hash(self.intervals)

    def __repr__(self):
        return f"IntervalGraph(n={len(self)})"

    @property
    def ids(self) -> tuple[str, ...]:
        rep, m = self._rep, self.mask
        return tuple(rep.ids[i] for i in range(len(rep.ids)) if (m >> i) & 1)

    @property
    def intervals(self) -> tuple[Interval, ...]:
        rep, m = self._rep, self.mask
        return tuple(iv for i, iv in enumerate(rep.intervals) if (m >> i) & 1)

    @property
    def order_left(self) -> tuple[str, ...]:
        rep, m = self._rep, self.mask
        return tuple(rep.ids[i] for i in rep.by_left if (m >> i) & 1)

    @property
    def order_right(self) -> tuple[str, ...]:
        rep, m = self._rep, self.mask
        return tuple(rep.ids[i] for i in rep.by_right if (m >> i) & 1)

    def interval(self, u: str) -> Interval:
        return self._rep.intervals[self.index(u)]

    # --- index-level access used by the algorithms ---------------------------------

    @property
    def base_size(self) -> int:
        """Number of vertices of the root graph this view was restricted from."""
        return len(self._rep.ids)

    def index(self, u: str) -> int:
        i = self._rep.index.get(u)
        if i is None or not (self.mask >> i) & 1:
            raise UnknownVertexError(u)
        return i

    def id_at(self, i: int) -> str:
        return self._rep.ids[i]

    def adjacency_masks(self) -> list[int]:
        """Neighbour bitmasks over root indices (not filtered by the view)."""
        return self._rep.adj

    @property
    def left_ranks(self) -> list[int]:
        """Normalized left-endpoint rank of every root index."""
        return self._rep.lrank

    @property
    def right_ranks(self) -> list[int]:
        return self._rep.rrank

    @property
    def root_ids(self) -> tuple[str, ...]:
        return self._rep.ids

    def left_rank(self, i: int) -> int:
        return self._rep.lrank[i]

    def right_rank(self, i: int) -> int:
        return self._rep.rrank[i]

    def left_index(self, u: str) -> int:
        """1-based position of ``u`` in the root graph's left-endpoint order."""
        return self._rep.pos_left[self.index(u)] + 1

    def right_index(self, u: str) -> int:
        """1-based position of ``u`` in the root graph's right-endpoint order."""
        return self._rep.pos_right[self.index(u)] + 1

    def mask_of(self, ids: Iterable[str]) -> int:
        m = 0
        for u in ids:
            m |= 1 << self.index(u)
        return m

    def ids_of(self, mask: int) -> frozenset[str]:
        ids = self._rep.ids
        out = []
        while mask:
            low = mask & -mask
            out.append(ids[low.bit_length() - 1])
            mask ^= low
        return frozenset(out)

    def view(self, mask: int) -> IntervalGraph:
        return IntervalGraph(self._rep, mask)

    # --- graph operations -----------------------------------------------------------

    def adjacent(self, u: str, v: str) -> bool:
        i, j = self.index(u), self.index(v)
        if i == j:
            raise GraphError(f"adjacency of {u!r} with itself is undefined")
        return (self._rep.adj[i] >> j) & 1 == 1

    def neighbors(self, u: str) -> frozenset[str]:
        return self.ids_of(self._rep.adj[self.index(u)] & self.mask)

    def closed_neighborhood(self, u: str) -> frozenset[str]:
        i = self.index(u)
        return self.ids_of((self._rep.adj[i] | (1 << i)) & self.mask)

    def closed_neighborhood_mask(self, i: int) -> int:
        return (self._rep.adj[i] | (1 << i)) & self.mask

    def restrict(self, removed: Iterable[str]) -> IntervalGraph:
        """Induced subgraph on all vertices except ``removed``."""
        return IntervalGraph(self._rep, self.mask & ~self.mask_of(removed))

    def component_of(self, u: str) -> frozenset[str]:
        from tsreconf.kernels import vertex_distances

        dist = vertex_distances(self._rep.adj, self.mask, self.index(u))
        return frozenset(self._rep.ids[i] for i, d in enumerate(dist) if d >= 0)

    def compare_order(
        self, which: Literal["left", "right"], u: str, v: str
    ) -> Literal["less", "greater"]:
        i, j = self.index(u), self.index(v)
        if i == j:
            raise GraphError("compare_order needs two distinct vertices")
        if which == "left":
            ranks = self._rep.lrank
        elif which == "right":
            ranks = self._rep.rrank
        else:
            raise ValueError(f"which must be 'left' or 'right', not {which!r}")
        return "less" if ranks[i] < ranks[j] else "greater"

    def line_key(self, u: str) -> int:
        """Sort key placing pairwise disjoint intervals in left-to-right order."""
        return self._rep.lrank[self.index(u)]
