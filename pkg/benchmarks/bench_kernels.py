"""Time the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Each kernel is called once per backend before timing so JIT compilation
is excluded; results of the two backends are checked for equality.
"""

import argparse
import time

import numpy as np

from signed_spectra import complete_graph, random_signed_graph
from signed_spectra._kernels import available_backends, get_backend
from signed_spectra.linalg import _primes, adjacency_matrix
from signed_spectra.search import _spanning_forest


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def charpoly_case(n, seed):
    rng = np.random.default_rng(seed)
    g = random_signed_graph(n, rng, density=0.3)
    p = _primes(1)[0]
    a = adjacency_matrix(g).astype(np.int64) % p
    return "charpoly_mod_p n=%d" % n, lambda k: k.charpoly_mod_p(a, p)


def tu_case(n, seed):
    rng = np.random.default_rng(seed)
    g = random_signed_graph(n, rng, density=0.6, connected=True)
    eu = np.array([u for u, _, _ in g.edges], dtype=np.int64)
    ev = np.array([v for _, v, _ in g.edges], dtype=np.int64)
    es = np.array([s for _, _, s in g.edges], dtype=np.int64)
    return "tu_weight_sums n=%d m=%d" % (n, g.m), lambda k: k.tu_weight_sums(g.n, eu, ev, es)


def switch_case(n, seed):
    g = complete_graph(n)
    edges = g.underlying_edges()
    parent, child, tree_edge, nontree = _spanning_forest(n, edges)
    rng = np.random.default_rng(seed)
    bits = rng.integers(0, 2, size=(1 << 14, g.m)).astype(np.int8)
    eu = np.array([u for u, _ in edges], dtype=np.int64)
    ev = np.array([v for _, v in edges], dtype=np.int64)
    name = "switch_class_index K%d rows=%d" % (n, bits.shape[0])
    return name, lambda k: k.switch_class_index(bits, eu, ev, parent, child, tree_edge, nontree, n)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    cases = [
        charpoly_case(40, args.seed),
        charpoly_case(120, args.seed),
        tu_case(7, args.seed),
        tu_case(8, args.seed),
        switch_case(7, args.seed),
    ]
    backends = available_backends()
    print("%-38s" % "kernel" + "".join("%12s" % b for b in backends) + "%10s" % "speedup")
    for name, run in cases:
        times, outs = [], []
        for b in backends:
            k = get_backend(b)
            run(k)  # warm-up / compile
            t, out = best_of(lambda: run(k), args.repeat)
            times.append(t)
            outs.append(np.asarray(out))
        for o in outs[1:]:
            assert np.array_equal(o, outs[0]), name
        speed = times[-1] / times[0] if len(times) > 1 else 1.0
        print("%-38s" % name + "".join("%11.4fs" % t for t in times) + "%9.1fx" % speed)


if __name__ == "__main__":
    main()
