"""Timing comparison between the pure-Python kernels and the compiled ones.

Both implementations are exercised through the exact same call signature the
library uses, on two representative workloads:

  * breadth-first rotation closure from a spanning path of a sparse random
    graph (the solver's hot loop), and
  * the endpoint-bitmask subset DP behind the exact oracle.

Usage:
    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --closure-sizes 300,1000 --reps 7
"""

import argparse
import math
import time

import numpy as np

import hamlab
from hamlab._kernels import _pure
from hamlab.gnp import GnpParams, sample_gnp
from hamlab.graphs import build_graph, union
from hamlab.rng import SplitMix64, mix64

try:
    from hamlab._kernels import _core
except ImportError:
    _core = None


def closure_instance(n, seed):
    """Sparse graph containing a known spanning path, plus that path."""
    g = sample_gnp(GnpParams(n, 3 * math.log(n) / n, mix64(seed, 1)))
    path = list(range(n))
    SplitMix64(mix64(seed, 2)).shuffle(path)
    spine = build_graph(n, [tuple(sorted(e)) for e in zip(path, path[1:])])
    return union(g, spine), np.asarray(path, dtype=np.int32)


def time_call(fn, args, reps):
    best = math.inf
    for _ in range(reps):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_closure(mod, n, reps):
    g, path = closure_instance(n, 0xBE7C)
    args = (g.indptr, g.indices, g.indptr, g.indices, path, n)
    return time_call(mod.rotation_closure, args, reps)


def bench_dp(mod, n, reps):
    g = sample_gnp(GnpParams(n, 0.5, mix64(0xBE7D, n)))
    masks = np.zeros(n, dtype=np.uint32)
    for v in range(n):
        for w in g.neighbors(v):
            masks[v] |= np.uint32(1 << int(w))
    return time_call(mod.ham_dp, (masks,), reps)


def row(label, pure_s, core_s):
    if core_s is None:
        return "%-34s %10.2f ms %12s %9s" % (label, pure_s * 1e3, "-", "-")
    return "%-34s %10.2f ms %9.2f ms %8.1fx" % (
        label, pure_s * 1e3, core_s * 1e3, pure_s / core_s)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--closure-sizes", default="300,1000",
                    help="comma-separated n for the closure workload")
    ap.add_argument("--dp-sizes", default="16,20",
                    help="comma-separated n for the subset-DP workload")
    ap.add_argument("--reps", type=int, default=5,
                    help="repetitions per timing (best-of)")
    args = ap.parse_args(argv)

    print("active backend: %s" % hamlab.kernel_backend)
    if _core is None:
        print("compiled kernels not built; timing the pure path only")
    print("%-34s %13s %12s %9s" % ("workload", "pure", "compiled", "speedup"))

    for n in [int(tok) for tok in args.closure_sizes.split(",")]:
        core_s = None if _core is None else bench_closure(_core, n, args.reps)
        print(row("rotation closure, spanning n=%d" % n,
                  bench_closure(_pure, n, args.reps), core_s))
    for n in [int(tok) for tok in args.dp_sizes.split(",")]:
        core_s = None if _core is None else bench_dp(_core, n, args.reps)
        print(row("subset DP, G(%d, 0.5)" % n,
                  bench_dp(_pure, n, args.reps), core_s))


if __name__ == "__main__":
    main()
