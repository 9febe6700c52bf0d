"""Compare the compiled and pure-Python kernels on a fixed random workload.

    python benchmarks/bench_kernels.py --graphs 200 --n 9
"""
from __future__ import annotations

import argparse
import random
import time

from epos import _pykernels
from epos.catalog import named
from epos.graph import Graph

try:
    from epos import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def random_graphs(count: int, n: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        out.append(Graph.from_edges(n, edges))
    return out


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads(graphs: list[Graph]):
    claw = named("claw")
    net = named("net")
    order_claw = (0, 1, 2, 3)
    order_net = (1, 2, 4, 0, 3, 5)

    def canon(mod):
        return lambda: [mod.canonical_labeling(g.n, g.adj) for g in graphs]

    def induced(mod):
        return lambda: [
            (mod.find_induced(g.n, g.adj, 4, claw.adj, order_claw),
             mod.find_induced(g.n, g.adj, 6, net.adj, order_net))
            for g in graphs
        ]

    def stable(mod):
        return lambda: [mod.stable_type_counts(g.n, g.adj) for g in graphs]

    return {"canonical_labeling": canon, "find_induced": induced, "stable_type_counts": stable}


def main(argv: list[str] | None = None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--graphs", type=int, default=200)
    parser.add_argument("--n", type=int, default=9)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    graphs = random_graphs(args.graphs, args.n, args.seed)
    impls = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{args.graphs} random graphs, n={args.n}, G(n, 1/2), best of {args.repeat}")
    print(f"{'kernel':<20}" + "".join(f"{name:>14}" for name, _ in impls) + f"{'speedup':>10}")
    for label, make in workloads(graphs).items():
        results = [make(mod)() for _, mod in impls]
        if len(results) == 2 and results[0] != results[1]:
            raise SystemExit(f"{label}: implementations disagree")
        per = [_time(make(mod), args.repeat) / len(graphs) * 1e6 for _, mod in impls]
        speed = f"{per[0] / per[1]:>9.1f}x" if len(per) == 2 else f"{'n/a':>10}"
        print(f"{label:<20}" + "".join(f"{t:>11.1f} us" for t in per) + speed)
    if _ckernels is None:
        print("compiled kernels unavailable; only the Python fallback was timed")


if __name__ == "__main__":
    main()
