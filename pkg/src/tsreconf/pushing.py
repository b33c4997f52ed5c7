"""Canonical pushes of one and two tokens.

``push_token_left`` walks a single token along a shortest path to the vertex
with the leftmost right endpoint in its component; ``push_token_right`` is the
mirror image.  ``push_apart`` alternates the two on a pair of tokens, each
token moving in the graph with the other token's closed neighbourhood
removed, until neither moves.
"""

from __future__ import annotations

from tsreconf.interval_model import IntervalGraph
from tsreconf.kernels import vertex_distances
from tsreconf.reconfiguration import ConfigurationError, Move, make_configuration

__all__ = ["push_apart", "push_token_left", "push_token_right"]


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _push(g: IntervalGraph, alive: int, source: int, leftward: bool) -> list[int]:
    """Vertex path from ``source`` to the extreme vertex of its component."""
    adj = g.adjacency_masks()
    dist = vertex_distances(adj, alive, source)
    if leftward:
        key = g.right_ranks
    else:
        key = [-r for r in g.left_ranks]
    reach = [i for i, d in enumerate(dist) if d >= 0]
    target = min(reach, key=key.__getitem__)
    path = [target]
    cur = target
    while dist[cur] > 0:
        want = dist[cur] - 1
        cur = min((i for i in _bits(adj[cur] & alive) if dist[i] == want), key=key.__getitem__)
        path.append(cur)
    path.reverse()
    return path


def _as_moves(g: IntervalGraph, path: list[int]) -> list[Move]:
    ids = g.root_ids
    return [Move(ids[path[t]], ids[path[t + 1]]) for t in range(len(path) - 1)]


def push_token_left(h: IntervalGraph, u: str):
    """Return ``(w, moves)`` with ``w`` the right-endpoint minimum of u's component."""
    path = _push(h, h.mask, h.index(u), leftward=True)
    return h.id_at(path[-1]), _as_moves(h, path)


def push_token_right(h: IntervalGraph, u: str):
    """Return ``(w, moves)`` with ``w`` the left-endpoint maximum of u's component."""
    path = _push(h, h.mask, h.index(u), leftward=False)
    return h.id_at(path[-1]), _as_moves(h, path)


def push_apart_indices(g: IntervalGraph, alive: int, a: int, b: int, out: list):
    """Index-level PushApart inside the vertex set ``alive``.

    Appends moves to ``out`` and returns the final ``(a, b)``.
    """
    adj = g.adjacency_masks()
    while True:
        left = _push(g, alive & ~(adj[b] | (1 << b)), a, leftward=True)
        a = left[-1]
        right = _push(g, alive & ~(adj[a] | (1 << a)), b, leftward=False)
        b = right[-1]
        out.extend(_as_moves(g, left))
        out.extend(_as_moves(g, right))
        if len(left) == 1 and len(right) == 1:
            return a, b


def push_apart(h: IntervalGraph, cfg):
    """Reach the 1-extreme set of the component of the pair ``cfg`` in R_2(h).

    The returned sequence has at most ``2 * len(h)`` moves.
    """
    if len(cfg) != 2:
        raise ConfigurationError(f"push_apart needs two tokens, got {len(cfg)}")
    a, b = make_configuration(h, cfg)
    moves: list[Move] = []
    ia, ib = push_apart_indices(h, h.mask, h.index(a), h.index(b), moves)
    return (h.id_at(ia), h.id_at(ib)), moves
