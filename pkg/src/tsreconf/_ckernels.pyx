# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled twin of ``_pykernels`` for graphs with at most 64 vertices."""

from libc.stdint cimport uint64_t
from libcpp.vector cimport vector
from libcpp.unordered_map cimport unordered_map

from tsreconf._pykernels import StateLimitExceeded


cdef extern from *:
    int ctz64 "__builtin_ctzll"(uint64_t x) nogil


cdef inline void _load(adj, vector[uint64_t]& out):
    cdef Py_ssize_t i
    out.resize(len(adj))
    for i in range(len(adj)):
        out[i] = <uint64_t>adj[i]


def vertex_distances(adj, alive, int source):
    cdef vector[uint64_t] a
    _load(adj, a)
    cdef int n = <int>a.size()
    cdef uint64_t live = <uint64_t>alive
    dist = [-1] * n
    if not (live >> source) & 1:
        return dist
    cdef uint64_t seen = (<uint64_t>1) << source
    cdef uint64_t frontier = seen
    cdef uint64_t nxt, f
    cdef int d = 0, i
    dist[source] = 0
    while frontier:
        d += 1
        nxt = 0
        f = frontier
        while f:
            i = ctz64(f)
            f &= f - 1
            nxt |= a[i]
        nxt &= live & ~seen
        seen |= nxt
        f = nxt
        while f:
            i = ctz64(f)
            f &= f - 1
            dist[i] = d
        frontier = nxt
    return dist


def state_component(adj, alive, start, Py_ssize_t cap):
    cdef vector[uint64_t] a
    _load(adj, a)
    cdef uint64_t live = <uint64_t>alive
    cdef vector[uint64_t] order
    cdef vector[int] dist
    cdef unordered_map[uint64_t, int] seen
    cdef uint64_t state, rest, cand, nxt, s
    cdef int u, v, d
    cdef size_t head = 0
    order.push_back(<uint64_t>start)
    dist.push_back(0)
    seen[<uint64_t>start] = 0
    while head < order.size():
        state = order[head]
        d = dist[head] + 1
        head += 1
        s = state
        while s:
            u = ctz64(s)
            s &= s - 1
            rest = state ^ ((<uint64_t>1) << u)
            cand = a[u] & live & ~state
            while cand:
                v = ctz64(cand)
                cand &= cand - 1
                if a[v] & rest:
                    continue
                nxt = rest | ((<uint64_t>1) << v)
                if seen.count(nxt) == 0:
                    if <Py_ssize_t>order.size() >= cap:
                        raise StateLimitExceeded(f"state cap {cap} exceeded")
                    seen[nxt] = d
                    order.push_back(nxt)
                    dist.push_back(d)
    return [order[i] for i in range(order.size())], [dist[i] for i in range(dist.size())]
