"""Canonicalization of independent sets and the reconfigurability decision.

``reconfigure_to_extreme`` moves a size-k configuration to the (k-1)-extreme
set of its component in R_k(G): every token but the last sits on the
leftmost-reachable (by right endpoint) vertex of its position, the last one
on the rightmost-reachable (by left endpoint) vertex.  It sweeps a cursor over
adjacent token pairs, running ``push_apart`` on each pair inside the graph
with all other tokens' closed neighbourhoods removed.  Whenever a pair moves
the cursor steps back, otherwise forward.

Two configurations are reconfigurable exactly when their canonical forms
coincide; the connecting sequence is one canonicalization followed by the
reversal of the other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from tsreconf.interval_model import IntervalGraph
from tsreconf.pushing import push_apart_indices, push_token_right
from tsreconf.reconfiguration import (
    ConfigurationError,
    Move,
    make_configuration,
    reverse_sequence,
)

__all__ = [
    "Decision",
    "InvariantViolation",
    "SolverState",
    "canonicalize",
    "decide_and_construct",
    "iteration_bound",
    "length_bound",
    "reconfigure_to_extreme",
    "run_reconfigure",
]


class InvariantViolation(RuntimeError):
    """A proven property of the algorithm failed at runtime."""


def length_bound(n: int, k: int) -> int:
    return 8 * k * n * n + 2 * k * n


def iteration_bound(n: int, k: int) -> int:
    return 4 * n * k + k


@dataclass
class SolverState:
    """State of one canonicalization run.

    ``j`` is 1-based like the pair cursor it models (pair ``(a_j, a_{j+1})``);
    ``lext`` and ``rext`` hold ids.  ``pair_moves`` records, per PushApart
    call, the number of moves and the vertex count of the graph it ran in.
    """

    lext: list
    rext: list
    a: list
    j: int = 1
    gamma: int = 1
    accumulated: list = field(default_factory=list)
    iterations: int = 0
    potentials: list = field(default_factory=list)
    pair_moves: list = field(default_factory=list)

    @property
    def configuration(self) -> tuple:
        return tuple(self.a)


def _potential(j, lext, rext, pos_left, pos_right, n):
    total = 0
    for r, l in zip(rext, lext):
        total += pos_left[r] + (n - pos_right[l] + 1)
    return j + 2 * total


def run_reconfigure(g: IntervalGraph, k: int, start, check: bool = True) -> SolverState:
    """Run the canonicalization and return its final state.

    With ``check`` on, the structural invariants (configuration equals the
    lext/rext splice, monotone extremes, strictly increasing potential) are
    verified after every pass; the iteration and length bounds always are.
    """
    if k < 2:
        raise ValueError("reconfigure_to_extreme needs k >= 2; use canonicalize for k = 1")
    cfg = make_configuration(g, start)
    if len(cfg) != k:
        raise ConfigurationError(f"expected {k} tokens, got {len(cfg)}")

    n = len(g)
    adj = g.adjacency_masks()
    lrank, rrank = g.left_ranks, g.right_ranks
    ids = g.root_ids
    a = [g.index(u) for u in cfg]
    lext = a[:]
    rext = a[:]
    moves: list[Move] = []
    pair_moves = []
    potentials = []
    if check:
        alive = [i for i in range(g.base_size) if (g.mask >> i) & 1]
        pos_left = {i: p + 1 for p, i in enumerate(sorted(alive, key=lrank.__getitem__))}
        pos_right = {i: p + 1 for p, i in enumerate(sorted(alive, key=rrank.__getitem__))}
        potentials.append(_potential(1, lext, rext, pos_left, pos_right, n))

    max_iter = iteration_bound(n, k)
    j = 0  # 0-based: the pair is (a[j], a[j + 1])
    gamma = 1
    iterations = 0
    while j < k - 1:
        iterations += 1
        if iterations > max_iter:
            raise InvariantViolation(f"more than {max_iter} outer iterations")
        removed = 0
        for i, x in enumerate(a):
            if i != j and i != j + 1:
                removed |= adj[x] | (1 << x)
        live = g.mask & ~removed
        before = len(moves)
        na, nb = push_apart_indices(g, live, a[j], a[j + 1], moves)
        pair_moves.append((len(moves) - before, live.bit_count()))
        if len(moves) - before > 2 * live.bit_count():
            raise InvariantViolation("PushApart exceeded 2|V(H)| moves")
        a[j], a[j + 1] = na, nb
        gamma = 1
        if (na, nb) != (lext[j], rext[j + 1]):
            if check and (rrank[na] > rrank[lext[j]] or lrank[nb] < lrank[rext[j + 1]]):
                raise InvariantViolation(f"extremes moved backwards at pair {j + 1}")
            lext[j] = na
            rext[j + 1] = nb
            if j > 0:
                gamma = -1
        if check:
            if a[: j + 1] != lext[: j + 1] or a[j + 1 :] != rext[j + 1 :]:
                raise InvariantViolation(f"configuration drifted from lext/rext at pair {j + 1}")
            phi = _potential(j + 1 + gamma, lext, rext, pos_left, pos_right, n)
            if phi <= potentials[-1] or phi > max_iter:
                raise InvariantViolation(f"potential {phi} after {potentials[-1]} (cap {max_iter})")
            potentials.append(phi)
        j += gamma

    if len(moves) > length_bound(n, k):
        raise InvariantViolation(f"sequence length {len(moves)} > {length_bound(n, k)}")
    return SolverState(
        lext=[ids[x] for x in lext],
        rext=[ids[x] for x in rext],
        a=[ids[x] for x in a],
        j=j + 1,
        gamma=gamma,
        accumulated=moves,
        iterations=iterations,
        potentials=potentials,
        pair_moves=pair_moves,
    )


def reconfigure_to_extreme(g: IntervalGraph, k: int, start, check: bool = True):
    """Return ``(X, S)``: the (k-1)-extreme set of start's component and a sequence to it."""
    state = run_reconfigure(g, k, start, check=check)
    return state.configuration, state.accumulated


def canonicalize(g: IntervalGraph, k: int, start, check: bool = True):
    """Like ``reconfigure_to_extreme`` but also handles a single token.

    One token is pushed right, i.e. to the left-endpoint maximum of its
    component, which is the 0-extreme set.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        cfg = make_configuration(g, start)
        if len(cfg) != 1:
            raise ConfigurationError(f"expected 1 token, got {len(cfg)}")
        w, moves = push_token_right(g, cfg[0])
        return (w,), moves
    return reconfigure_to_extreme(g, k, start, check=check)


@dataclass
class Decision:
    reconfigurable: bool
    sequence: Optional[list]
    canonical_i: tuple
    canonical_j: tuple
    length_i: int
    length_j: int


def decide_and_construct(g: IntervalGraph, k: int, I, J, check: bool = True) -> Decision:
    I = make_configuration(g, I)
    J = make_configuration(g, J)
    if len(I) != k or len(J) != k:
        raise ConfigurationError(f"expected {k} tokens, got {len(I)} and {len(J)}")
    xi, si = canonicalize(g, k, I, check=check)
    xj, sj = canonicalize(g, k, J, check=check)
    if xi != xj:
        return Decision(False, None, xi, xj, len(si), len(sj))
    return Decision(True, si + reverse_sequence(sj), xi, xj, len(si), len(sj))
