"""Compiled versus pure-Python BFS kernels.

Times both twins on the same inputs and checks they return identical
results.  Usage::

    python3 benchmarks/bench_kernels.py [--repeat 3] [--csv out.csv] [--end-to-end]
"""

import argparse
import csv
import os
import subprocess
import sys
import time

from tsreconf import _pykernels
from tsreconf.generators import gen_lower_bound, gen_random_interval
from tsreconf.oracle import canonical_state, _encode

try:
    from tsreconf import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        started = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - started)
    return best, result


def cases():
    for m, k in [(2, 2), (6, 2), (2, 3), (6, 3), (3, 4)]:
        inst = gen_lower_bound(m, k)
        yield f"lower-bound m={m} k={k}", inst.graph, inst.I
    for n, seed in [(20, 1), (40, 2), (60, 3)]:
        g = gen_random_interval(n, seed, "short")
        chosen = []
        for u in g.order_right:
            if not chosen or not g.adjacent(u, chosen[-1]):
                chosen.append(u)
        yield f"random short n={n} k=3", g, tuple(chosen[:3])


def run(repeat):
    rows = []
    for label, g, start in cases():
        adj, alive = g.adjacency_masks(), g.mask
        state = _encode(g, canonical_state(g, start))

        def vertex(mod):
            return lambda: [mod.vertex_distances(adj, alive, v) for v in range(len(adj)) if alive >> v & 1]

        def component(mod):
            return lambda: mod.state_component(adj, alive, state, 10**7)

        for kernel, make in (("vertex_distances", vertex), ("state_component", component)):
            t_py, r_py = best_of(make(_pykernels), repeat)
            if _ckernels is not None:
                t_c, r_c = best_of(make(_ckernels), repeat)
                if r_c != r_py:
                    raise SystemExit(f"kernel mismatch on {label} / {kernel}")
            else:
                t_c = float("nan")
            size = len(r_py[0]) if kernel == "state_component" else len(r_py)
            rows.append((label, kernel, size, t_py, t_c, t_py / t_c if t_c == t_c else float("nan")))
    return rows


def end_to_end():
    """Wall time of ``tsreconf bench --bfs`` under each backend; outputs must agree."""
    argv = [sys.executable, "-m", "tsreconf.cli", "bench", "--m-range", "1:6", "--k-range", "2:4", "--bfs"]
    results = {}
    for backend, extra in (("cython", {}), ("python", {"TSRECONF_PURE_PYTHON": "1"})):
        env = {key: val for key, val in os.environ.items() if key != "TSRECONF_PURE_PYTHON"}
        env.update(extra)
        started = time.perf_counter()
        out = subprocess.run(argv, capture_output=True, check=True, env=env).stdout
        results[backend] = (time.perf_counter() - started, out)
    if results["cython"][1] != results["python"][1]:
        raise SystemExit("backends disagree on the bench CSV")
    t_c, t_py = results["cython"][0], results["python"][0]
    print(f"end-to-end bench --bfs (m 1..6, k 2..4): python {t_py:.2f}s, cython {t_c:.2f}s, {t_py / t_c:.1f}x")


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--csv")
    parser.add_argument("--end-to-end", action="store_true", help="also time the CLI bench under both backends")
    args = parser.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; only the Python twin is timed", file=sys.stderr)
    rows = run(args.repeat)
    header = ("instance", "kernel", "size", "python_s", "cython_s", "speedup")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(header)
            writer.writerows(rows)
    print(f"{'instance':28} {'kernel':17} {'size':>8} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for label, kernel, size, t_py, t_c, ratio in rows:
        print(f"{label:28} {kernel:17} {size:8d} {t_py:10.6f} {t_c:10.6f} {ratio:8.1f}x")
    if args.end_to_end:
        end_to_end()


if __name__ == "__main__":
    main()
