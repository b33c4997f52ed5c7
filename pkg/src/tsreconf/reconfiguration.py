"""Configurations, moves and reconfiguration sequences under token sliding.

A configuration is a plain tuple of interval ids sorted left to right on the
line.  A move ``(source, target)`` slides the token on ``source`` to the
adjacent vertex ``target``.  Positions are 1-based indices into the
configuration tuple, measured just before the move.
"""

from __future__ import annotations

import bisect
import enum
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

from tsreconf.interval_model import GraphError, IntervalGraph

Configuration = tuple  # tuple[str, ...] in line order


class Move(NamedTuple):
    source: str
    target: str

    def __str__(self):
        return f"{self.source} {self.target}"


ReconfigSequence = list  # list[Move]


class ConfigurationError(ValueError):
    pass


class MoveFailure(str, enum.Enum):
    FROM_NOT_IN_CONFIG = "from-not-in-config"
    TO_OCCUPIED = "to-occupied"
    NON_EDGE = "non-edge"
    NOT_INDEPENDENT = "independence-violated"
    UNKNOWN_VERTEX = "unknown-vertex"


class MoveError(ValueError):
    """A move cannot be applied.

    ``reason`` is the first failed condition; ``reasons`` lists every failed
    one (a slide to a non-neighbour often also breaks independence).  ``step``
    is 1-based when known.
    """

    def __init__(self, reason: MoveFailure, move, step: Optional[int] = None, reasons=None):
        self.reason = reason
        self.reasons = tuple(reasons) if reasons else (reason,)
        self.move = move
        self.step = step
        where = f" at step {step}" if step is not None else ""
        super().__init__(f"{'/'.join(r.value for r in self.reasons)}{where}: {move}")


class SpliceHypothesisError(ValueError):
    def __init__(self, message, configuration=None):
        super().__init__(message)
        self.configuration = configuration


def make_configuration(g: IntervalGraph, ids) -> Configuration:
    """Sort ``ids`` into line order after checking they form an independent set."""
    ids = list(ids)
    try:
        idx = [g.index(u) for u in ids]
    except GraphError as exc:
        raise ConfigurationError(str(exc)) from None
    if len(set(idx)) != len(idx):
        raise ConfigurationError(f"repeated vertex in {ids}")
    adj = g.adjacency_masks()
    mask = 0
    for i in idx:
        mask |= 1 << i
    for i, u in zip(idx, ids):
        if adj[i] & mask:
            other = g.ids_of(adj[i] & mask)
            raise ConfigurationError(f"{u} is adjacent to {sorted(other)}")
    return tuple(sorted(ids, key=g.line_key))


def is_independent(g: IntervalGraph, ids) -> bool:
    try:
        make_configuration(g, ids)
    except ConfigurationError:
        return False
    return True


def _step(g: IntervalGraph, cfg: Configuration, mv) -> tuple[Configuration, int, int]:
    """Apply one move; return the new configuration and the moved token's
    position before and after."""
    u, v = mv
    try:
        p = cfg.index(u)
    except ValueError:
        raise MoveError(MoveFailure.FROM_NOT_IN_CONFIG, mv) from None
    if v in cfg:
        raise MoveError(MoveFailure.TO_OCCUPIED, mv)
    if v not in g:
        raise MoveError(MoveFailure.UNKNOWN_VERTEX, mv)
    iu, iv = g.index(u), g.index(v)
    adj = g.adjacency_masks()
    rest = list(cfg)
    del rest[p]
    rest_mask = 0
    for w in rest:
        rest_mask |= 1 << g.index(w)
    failed = []
    if not (adj[iu] >> iv) & 1:
        failed.append(MoveFailure.NON_EDGE)
    if adj[iv] & rest_mask:
        failed.append(MoveFailure.NOT_INDEPENDENT)
    if failed:
        raise MoveError(failed[0], mv, reasons=failed)
    keys = [g.line_key(w) for w in rest]
    q = bisect.bisect(keys, g.line_key(v))
    rest.insert(q, v)
    return tuple(rest), p + 1, q + 1


def apply_move(g: IntervalGraph, cfg: Configuration, mv) -> Configuration:
    return _step(g, cfg, Move(*mv))[0]


def apply_prefix(g: IntervalGraph, cfg: Configuration, s: Sequence, t: int) -> Configuration:
    """Apply the first ``t`` moves of ``s`` to ``cfg``."""
    if not 0 <= t <= len(s):
        raise ValueError(f"prefix length {t} outside 0..{len(s)}")
    for step in range(t):
        mv = Move(*s[step])
        try:
            cfg = _step(g, cfg, mv)[0]
        except MoveError as exc:
            raise MoveError(exc.reason, mv, step + 1, exc.reasons) from None
    return cfg


@dataclass
class ValidationReport:
    valid: bool
    end: Configuration
    failed_step: Optional[int] = None
    reason: Optional[str] = None
    positions: list = field(default_factory=list)
    order_preserved: bool = True
    end_matches: Optional[bool] = None

    @property
    def ok(self) -> bool:
        """Valid, order preserving, and ending where expected (if asked)."""
        return self.valid and self.order_preserved and self.end_matches is not False


def validate_sequence(
    g: IntervalGraph,
    start: Configuration,
    s: Sequence,
    expected_end: Optional[Configuration] = None,
) -> ValidationReport:
    """Replay ``s`` from ``start`` and report; never raises on bad moves."""
    cfg = tuple(start)
    report = ValidationReport(valid=True, end=cfg)
    for step, mv in enumerate(s, start=1):
        mv = Move(*mv)
        try:
            cfg, before, after = _step(g, cfg, mv)
        except MoveError as exc:
            report.valid = False
            report.failed_step = step
            report.reason = exc.reason.value
            break
        report.positions.append(before)
        if before != after:
            report.order_preserved = False
    report.end = cfg
    if expected_end is not None:
        report.end_matches = report.valid and cfg == tuple(expected_end)
        if report.valid and not report.end_matches:
            report.reason = "end-mismatch"
    return report


def reverse_sequence(s: Sequence) -> ReconfigSequence:
    return [Move(v, u) for u, v in reversed(s)]


def trace(g: IntervalGraph, start: Configuration, s: Sequence):
    """All configurations traversed by ``s`` and the position moved at each step."""
    configs = [tuple(start)]
    positions = []
    cfg = tuple(start)
    for step, mv in enumerate(s, start=1):
        try:
            cfg, before, _ = _step(g, cfg, Move(*mv))
        except MoveError as exc:
            raise MoveError(exc.reason, exc.move, step, exc.reasons) from None
        configs.append(cfg)
        positions.append(before)
    return configs, positions


def splice(g: IntervalGraph, start: Configuration, s: Sequence, i: int, j: int):
    """Keep only the moves of tokens strictly between positions ``i`` and ``j``.

    Tokens ``1..i`` are placed on their final vertices up front and tokens
    ``j..l`` likewise; this is sound when the final vertex of token ``i`` is
    the right-endpoint minimum of that token over the whole run and the final
    vertex of token ``j`` is the left-endpoint maximum of its token.  Both
    conditions are verified by replaying ``s``.

    Returns ``(A', S')`` where ``S'`` takes ``A'`` to the end of ``s``.
    """
    start = tuple(start)
    ell = len(start)
    if not 0 <= i < j <= ell + 1:
        raise ValueError(f"need 0 <= i < j <= {ell + 1}, got i={i}, j={j}")
    configs, positions = trace(g, start, s)
    end = configs[-1]
    if i >= 1:
        target = g.index(end[i - 1])
        for c in configs:
            if g.right_rank(g.index(c[i - 1])) < g.right_rank(target):
                raise SpliceHypothesisError(
                    f"token {i} reaches {c[i - 1]}, {end[i - 1]} is not right-minimal", c
                )
    if j <= ell:
        target = g.index(end[j - 1])
        for c in configs:
            if g.left_rank(g.index(c[j - 1])) > g.left_rank(target):
                raise SpliceHypothesisError(
                    f"token {j} reaches {c[j - 1]}, {end[j - 1]} is not left-maximal", c
                )
    aligned = end[:i] + start[i : j - 1] + end[j - 1 :]
    kept = [Move(*mv) for mv, p in zip(s, positions) if i < p < j]
    return aligned, kept
