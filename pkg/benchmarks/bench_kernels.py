"""Time the numba kernels against the pure-numpy fallback.

    python3 benchmarks/bench_kernels.py [--n 40 100 200] [--repeat 20]

The first numba call per signature compiles (or loads from cache); it is
excluded from the timings. Outputs of both backends are compared as well.
"""
import argparse
import time

import numpy as np

from asc_maxcut._accel import HAVE_NUMBA
from asc_maxcut.graphs import gen_bipartite_master
from asc_maxcut.kernels import _numpy


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases(n, seed):
    g = gen_bipartite_master(n, 0.2, seed)
    w = np.ascontiguousarray(g.weights)
    deg = w.sum(axis=1)
    rng = np.random.default_rng(seed)
    u = rng.random(n)
    t = rng.permutation(n).astype(np.int64) + 1
    s = rng.integers(1, 3, n).astype(np.int8)
    return {
        "D2Greedy": lambda b: b.double_greedy(w, deg, u, False),
        "RDGreedy": lambda b: b.double_greedy(w, deg, u, True),
        "SG": lambda b: b.single_greedy(w, False),
        "SG3": lambda b: b.single_greedy(w, True),
        "EC": lambda b: b.edge_contraction(w),
        "pair_stats": lambda b: b.pair_step_stats(t, s, t[::-1].copy(), s, n),
    }


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return np.allclose(a, b, rtol=0, atol=1e-9)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[40, 100, 200])
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    if not HAVE_NUMBA:
        print("numba is not installed; only the numpy backend can be timed")
    backends = {"numpy": _numpy}
    if HAVE_NUMBA:
        from asc_maxcut.kernels import _numba
        backends["numba"] = _numba

    print(f"{'kernel':<11}{'n':>5}" + "".join(f"{name + ' ms':>12}" for name in backends) + f"{'speedup':>10}")
    for n in args.n:
        for name, run in cases(n, seed=n).items():
            outs = {b: run(mod) for b, mod in backends.items()}  # warm-up / compile
            if len(outs) == 2:
                assert same(outs["numpy"], outs["numba"]), f"{name} differs between backends"
            ms = {b: 1e3 * best_of(lambda: run(mod), args.repeat) for b, mod in backends.items()}
            speed = f"{ms['numpy'] / ms['numba']:9.1f}x" if "numba" in ms else ""
            print(f"{name:<11}{n:>5}" + "".join(f"{v:12.3f}" for v in ms.values()) + speed)


if __name__ == "__main__":
    main()
