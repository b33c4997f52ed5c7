"""Command-line interface.

Exit codes: 0 when the command completed (a NO answer included), 2 for usage
or input errors, 3 when an internal invariant of the algorithm failed.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from tsreconf import oracle
from tsreconf.fileformat import (
    InstanceError,
    format_abstract_instance,
    format_instance,
    format_sequence,
    parse_instance,
    parse_sequence,
)
from tsreconf.generators import (
    RANDOM_MODELS,
    Digraph,
    HWordError,
    gen_hardness,
    gen_lower_bound,
    gen_random_interval,
)
from tsreconf.interval_model import GraphError
from tsreconf.kernels import StateLimitExceeded
from tsreconf.reconfiguration import ConfigurationError, make_configuration, validate_sequence
from tsreconf.solver import InvariantViolation, canonicalize, decide_and_construct, length_bound

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, path=None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _interval_instance(path):
    inst = parse_instance(_read(path))
    if not inst.is_interval:
        raise UsageError(f"{path} is not an interval instance; only 'oracle' accepts abstract graphs")
    return inst


def _checked(g, start, seq, end):
    report = validate_sequence(g, start, seq, end)
    if not report.ok:
        raise InvariantViolation(
            f"emitted sequence fails validation (step {report.failed_step}: {report.reason})"
        )


def cmd_solve(args):
    inst = _interval_instance(args.file)
    if inst.J is None:
        raise UsageError("solve needs a J line")
    decision = decide_and_construct(inst.graph, inst.k, inst.I, inst.J, check=not args.no_check)
    if not decision.reconfigurable:
        _emit("NO\n")
        return
    _checked(inst.graph, inst.I, decision.sequence, inst.J)
    _emit("YES\n" + format_sequence(decision.sequence))


def cmd_canon(args):
    inst = _interval_instance(args.file)
    target, seq = canonicalize(inst.graph, inst.k, inst.I, check=not args.no_check)
    _checked(inst.graph, inst.I, seq, target)
    _emit(" ".join(target) + "\n" + format_sequence(seq))


def cmd_validate(args):
    inst = _interval_instance(args.file)
    seq = parse_sequence(_read(args.seqfile))
    report = validate_sequence(inst.graph, inst.I, seq, inst.J)
    if not report.valid:
        status = f"INVALID {report.failed_step} {report.reason}"
    elif report.end_matches is False:
        status = "END-MISMATCH"
    else:
        status = "VALID"
    _emit(f"{status}\n{' '.join(report.end)}\n")


def cmd_oracle(args):
    inst = parse_instance(_read(args.file))
    if inst.J is None:
        raise UsageError("oracle needs a J line")
    ok, dist = oracle.bfs_reconfigurable(inst.graph, inst.k, inst.I, inst.J, cap=args.cap)
    _emit(f"YES\n{dist}\n" if ok else "NO\n")


def cmd_gen_lower_bound(args):
    inst = gen_lower_bound(args.m, args.k)
    text = format_instance(
        inst.graph, args.k, inst.I, inst.J, comment=f"lower-bound family G_(m={args.m}, k={args.k})"
    )
    _emit(text, args.output)


def _random_independent(g, k, rng):
    order = list(g.ids)
    rng.shuffle(order)
    chosen = []
    for u in order:
        if all(not g.adjacent(u, w) for w in chosen):
            chosen.append(u)
            if len(chosen) == k:
                return chosen
    return None


def _maximum_independent(g):
    """Earliest-right-endpoint greedy; optimal on interval graphs."""
    chosen = []
    for u in g.order_right:
        if not chosen or not g.adjacent(u, chosen[-1]):
            chosen.append(u)
    return chosen


def cmd_gen_random(args):
    g = gen_random_interval(args.n, args.seed, args.model)
    best = _maximum_independent(g)
    if len(best) < args.k:
        raise UsageError(f"the graph has no independent set of size {args.k} (maximum is {len(best)})")
    rng = random.Random(f"configs:{args.seed}")
    picked = []
    for _ in range(2):
        cfg = None
        for _ in range(100):
            cfg = _random_independent(g, args.k, rng)
            if cfg is not None:
                break
        picked.append(cfg if cfg is not None else best[: args.k])
    I, J = (make_configuration(g, c) for c in picked)
    text = format_instance(
        g, args.k, I, J, comment=f"random interval graph n={args.n} seed={args.seed} model={args.model}"
    )
    _emit(text, args.output)


def _split(text):
    return [t for t in text.split(",") if t] if text else []


def cmd_gen_hardness(args):
    vertices = _split(args.vertices)
    arcs = []
    for item in _split(args.arcs):
        if ":" not in item:
            raise UsageError(f"arc {item!r} must look like x:y")
        arcs.append(tuple(item.split(":", 1)))
    try:
        h = Digraph.make(vertices, arcs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    inst = gen_hardness(h, _split(args.a), _split(args.b))
    text = format_abstract_instance(
        inst.graph, inst.n, inst.A, inst.B,
        comment=f"layered poset of H on {inst.n} levels; width <= {inst.width_bound}",
    )
    _emit(text, args.output)


def _parse_range(text):
    lo, sep, hi = text.partition(":")
    try:
        lo_v = int(lo)
        hi_v = int(hi) if sep else lo_v
    except ValueError:
        raise UsageError(f"bad range {text!r}; use LO:HI") from None
    if lo_v < 1 or hi_v < lo_v:
        raise UsageError(f"bad range {text!r}")
    return range(lo_v, hi_v + 1)


def bench_row(m, k, with_bfs, cap=oracle.DEFAULT_STATE_CAP):
    inst = gen_lower_bound(m, k)
    g = inst.graph
    started = time.perf_counter()
    decision = decide_and_construct(g, k, inst.I, inst.J)
    elapsed = time.perf_counter() - started
    _checked(g, inst.I, decision.sequence, inst.J)
    bfs = ""
    if with_bfs:
        _, dist = oracle.bfs_reconfigurable(g, k, inst.I, inst.J, cap=cap)
        bfs = dist
    n = len(g)
    return (m, k, n, len(decision.sequence), length_bound(n, k), bfs, elapsed)


def cmd_bench(args):
    if args.family != "lower-bound":
        raise UsageError("only the lower-bound family is benchmarked")
    jobs = [(m, k) for m in _parse_range(args.m_range) for k in _parse_range(args.k_range)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            futures = [pool.submit(bench_row, m, k, args.bfs, args.cap) for m, k in jobs]
            rows = [f.result() for f in futures]
    else:
        rows = [bench_row(m, k, args.bfs, args.cap) for m, k in jobs]
    rows.sort(key=lambda r: (r[0], r[1]))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["m", "k", "n", "solver_len", "bound_8kn2_2kn", "bfs_len"]
    if args.timing:
        header.append("seconds")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row[:6] + ((f"{row[6]:.6f}",) if args.timing else ()))
    _emit(buf.getvalue(), args.output)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tsreconf", description="Token sliding reconfiguration of independent sets in interval graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide I -> J and print a sequence")
    p.add_argument("file")
    p.add_argument("--no-check", action="store_true", help="skip per-iteration invariant checks")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("canon", help="print the canonical extreme set of I and a sequence to it")
    p.add_argument("file")
    p.add_argument("--no-check", action="store_true")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("validate", help="replay SEQFILE from I (and compare with J if present)")
    p.add_argument("file")
    p.add_argument("seqfile")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("oracle", help="brute-force BFS decision and shortest distance")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_STATE_CAP)
    p.set_defaults(func=cmd_oracle)

    gen = sub.add_parser("gen", help="generate instances").add_subparsers(dest="family", required=True)
    p = gen.add_parser("lower-bound")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen_lower_bound)
    p = gen.add_parser("random")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--model", choices=RANDOM_MODELS, default="uniform-endpoints")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen_random)
    p = gen.add_parser("hardness")
    p.add_argument("--vertices", required=True, help="comma-separated vertices of H")
    p.add_argument("--arcs", default="", help="comma-separated arcs x:y (loops allowed)")
    p.add_argument("--a", required=True, help="comma-separated H-word")
    p.add_argument("--b", required=True, help="comma-separated H-word")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen_hardness)

    p = sub.add_parser("bench", help="CSV of solver length against the bound")
    p.add_argument("--family", default="lower-bound")
    p.add_argument("--m-range", default="1:4")
    p.add_argument("--k-range", default="1:3")
    p.add_argument("--bfs", action="store_true", help="also compute the exact BFS distance")
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_STATE_CAP)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="append a wall-clock seconds column")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    try:
        if getattr(args, "k", 1) is not None and getattr(args, "k", 1) < 1:
            raise UsageError("k must be positive")
        args.func(args)
    except (InvariantViolation, AssertionError) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (UsageError, InstanceError, GraphError, ConfigurationError, HWordError,
            StateLimitExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def run_command(argv):
    """Run ``main`` in-process and return ``(exit_code, stdout, stderr)``."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
