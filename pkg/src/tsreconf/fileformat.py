"""Line-oriented text formats for instances and move sequences.

Interval instance (``#`` starts a comment, blank lines ignored)::

    4 2
    A 0 2
    B 1 3
    C 4 6
    D 5 7
    I B C
    J A D

The header is ``n k``; coordinates are integers or ``p/q``; the ``J`` line is
optional.  Instances on arbitrary graphs (used for the hardness family, which
the oracle alone can handle) start with ``abstract n e k``, then ``n`` lines
with one id each, ``e`` lines ``u v`` with the edges, and the same ``I``/``J``
lines.

A sequence is its move count followed by one ``source target`` line per move.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from tsreconf.interval_model import GraphError, IntervalGraph, build_graph
from tsreconf.oracle import AbstractGraph
from tsreconf.reconfiguration import ConfigurationError, Move, make_configuration

__all__ = [
    "InstanceError",
    "InstanceFile",
    "format_abstract_instance",
    "format_instance",
    "format_sequence",
    "parse_instance",
    "parse_sequence",
]


class InstanceError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class InstanceFile:
    graph: Union[IntervalGraph, AbstractGraph]
    k: int
    I: tuple
    J: Optional[tuple] = None

    @property
    def is_interval(self) -> bool:
        return isinstance(self.graph, IntervalGraph)


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _count(tok: str, what: str, lineno: int) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise InstanceError(f"{what} must be an integer, got {tok!r}", lineno) from None
    if value < 0:
        raise InstanceError(f"{what} must be nonnegative", lineno)
    return value


def _independent_abstract(g: AbstractGraph, ids, label, lineno):
    for u in ids:
        if u not in g:
            raise InstanceError(f"unknown id {u!r} in {label} line", lineno)
    if len(set(ids)) != len(ids):
        raise InstanceError(f"repeated id in {label} line", lineno)
    for p in range(len(ids)):
        for q in range(p + 1, len(ids)):
            if g.adjacent(ids[p], ids[q]):
                raise InstanceError(
                    f"non-independent {label}: {ids[p]} and {ids[q]} are adjacent", lineno
                )
    return tuple(ids)


def parse_instance(text: str) -> InstanceFile:
    rows = list(_lines(text))
    if not rows:
        raise InstanceError("empty instance")
    lineno, head = rows[0]
    abstract = head[0] == "abstract"
    if abstract:
        if len(head) != 4:
            raise InstanceError("expected 'abstract n e k'", lineno)
        n = _count(head[1], "n", lineno)
        e = _count(head[2], "e", lineno)
        k = _count(head[3], "k", lineno)
        body = n + e
    else:
        if len(head) != 2:
            raise InstanceError("expected header 'n k'", lineno)
        n = _count(head[0], "n", lineno)
        k = _count(head[1], "k", lineno)
        e = 0
        body = n
    if k < 1:
        raise InstanceError("k must be positive", lineno)
    if len(rows) < 1 + body:
        raise InstanceError(f"expected {body} graph lines after the header", rows[-1][0])

    graph_rows = rows[1 : 1 + body]
    if abstract:
        ids = []
        for ln, toks in graph_rows[:n]:
            if len(toks) != 1:
                raise InstanceError("expected a single vertex id", ln)
            ids.append(toks[0])
        if len(set(ids)) != len(ids):
            raise InstanceError("duplicate vertex id", graph_rows[0][0] if graph_rows else lineno)
        known = set(ids)
        edges = []
        for ln, toks in graph_rows[n:]:
            if len(toks) != 2:
                raise InstanceError("expected an edge 'u v'", ln)
            for u in toks:
                if u not in known:
                    raise InstanceError(f"unknown id {u!r}", ln)
            if toks[0] == toks[1]:
                raise InstanceError("self-loop", ln)
            edges.append((toks[0], toks[1]))
        graph = AbstractGraph(ids, edges)
    else:
        raw = []
        seen = set()
        for ln, toks in graph_rows:
            if len(toks) != 3:
                raise InstanceError("expected 'id left right'", ln)
            if toks[0] in seen:
                raise InstanceError(f"duplicate id {toks[0]!r}", ln)
            if toks[0] in ("I", "J"):
                raise InstanceError("ids 'I' and 'J' are reserved", ln)
            seen.add(toks[0])
            try:
                graph_piece = build_graph([tuple(toks)])
            except GraphError as exc:
                raise InstanceError(str(exc), ln) from None
            iv = graph_piece.intervals[0]
            raw.append((iv.id, iv.left, iv.right))
        if not raw:
            raise InstanceError("graph has no vertices", lineno)
        graph = build_graph(raw)

    configs = {}
    for ln, toks in rows[1 + body :]:
        label = toks[0]
        if label not in ("I", "J"):
            raise InstanceError(f"expected an 'I' or 'J' line, got {label!r}", ln)
        if label in configs:
            raise InstanceError(f"second {label} line", ln)
        ids = toks[1:]
        if len(ids) != k:
            raise InstanceError(f"k mismatch: {label} has {len(ids)} ids, k = {k}", ln)
        if abstract:
            configs[label] = _independent_abstract(graph, ids, label, ln)
        else:
            for u in ids:
                if u not in graph:
                    raise InstanceError(f"unknown id {u!r} in {label} line", ln)
            try:
                configs[label] = make_configuration(graph, ids)
            except ConfigurationError as exc:
                raise InstanceError(f"non-independent {label}: {exc}", ln) from None
    if "I" not in configs:
        raise InstanceError("missing I line")
    return InstanceFile(graph, k, configs["I"], configs.get("J"))


def _coord(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_instance(g: IntervalGraph, k: int, I, J=None, comment: Optional[str] = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"{len(g)} {k}")
    for iv in g.intervals:
        out.append(f"{iv.id} {_coord(iv.left)} {_coord(iv.right)}")
    out.append("I " + " ".join(I))
    if J is not None:
        out.append("J " + " ".join(J))
    return "\n".join(out) + "\n"


def format_abstract_instance(g: AbstractGraph, k: int, I, J=None, comment: Optional[str] = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    edges = g.edges
    out.append(f"abstract {len(g)} {len(edges)} {k}")
    out.extend(g.ids)
    out.extend(f"{u} {v}" for u, v in edges)
    out.append("I " + " ".join(I))
    if J is not None:
        out.append("J " + " ".join(J))
    return "\n".join(out) + "\n"


def format_sequence(s) -> str:
    """``[(B, A), (C, D)]`` becomes ``"2\\nB A\\nC D\\n"``."""
    return "".join([f"{len(s)}\n"] + [f"{u} {v}\n" for u, v in s])


def parse_sequence(text: str) -> list[Move]:
    rows = list(_lines(text))
    if not rows:
        raise InstanceError("empty sequence file")
    lineno, head = rows[0]
    if len(head) != 1:
        raise InstanceError("expected the move count", lineno)
    m = _count(head[0], "move count", lineno)
    if len(rows) - 1 != m:
        raise InstanceError(f"move count {m} but {len(rows) - 1} moves follow", lineno)
    moves = []
    for ln, toks in rows[1:]:
        if len(toks) != 2:
            raise InstanceError("expected 'source target'", ln)
        moves.append(Move(toks[0], toks[1]))
    return moves
