"""Pure-Python BFS kernels over bitmask graphs.

Vertices are integers ``0..n-1``; ``adj[i]`` is the bitmask of neighbours of
``i`` (never containing ``i`` itself) and ``alive`` masks the vertices that
exist.  These mirror ``_ckernels.pyx`` exactly and are used when the compiled
module is unavailable or the graph has more than 64 vertices.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple


class StateLimitExceeded(RuntimeError):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertex_distances(adj: Sequence[int], alive: int, source: int) -> List[int]:
    """Breadth-first distances from ``source``; ``-1`` for unreachable vertices."""
    dist = [-1] * len(adj)
    if not (alive >> source) & 1:
        return dist
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for i in _bits(frontier):
            nxt |= adj[i]
        nxt &= alive & ~seen
        seen |= nxt
        for i in _bits(nxt):
            dist[i] = d
        frontier = nxt
    return dist


def state_component(
    adj: Sequence[int], alive: int, start: int, cap: int
) -> Tuple[List[int], List[int]]:
    """BFS over the token-sliding graph from the independent set ``start``.

    Returns the reached states (as vertex bitmasks) in BFS order together with
    their distances from ``start``.
    """
    order = [start]
    dist = [0]
    seen = {start: 0}
    head = 0
    while head < len(order):
        state = order[head]
        d = dist[head] + 1
        head += 1
        for u in _bits(state):
            rest = state ^ (1 << u)
            for v in _bits(adj[u] & alive & ~state):
                if adj[v] & rest:
                    continue
                nxt = rest | (1 << v)
                if nxt not in seen:
                    if len(order) >= cap:
                        raise StateLimitExceeded(f"state cap {cap} exceeded")
                    seen[nxt] = d
                    order.append(nxt)
                    dist.append(d)
    return order, dist
