"""Benchmark the all-pairs BFS kernels: numba JIT vs the pure-numpy fallback.

Runs the same distance-statistics workload through both backends on a mix of
sparse (paths, trees) and dense-ish (hypercube, chained near-cliques)
inputs, checks that eccentricities and distance row sums agree exactly, and
prints per-graph wall times plus the speedup.

Run: python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from ecclib.families import make, spec
from ecclib.graph import from_edges
from ecclib.kernels import _numba, _numpy

REPEATS = 3


def _random_connected(n, extra_edges, seed):
    rng = np.random.default_rng(seed)
    edges = set()
    order = rng.permutation(n)
    for i in range(1, n):
        j = int(rng.integers(0, i))
        edges.add((min(order[i], order[j]), max(order[i], order[j])))
    while len(edges) < n - 1 + extra_edges:
        u, v = (int(x) for x in rng.integers(0, n, size=2))
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return from_edges(n, sorted(edges))


# The numpy fallback expands every BFS frontier with one dense matmul per
# level, so its cost scales with diameter * n^3; cases are sized so both
# backends finish in seconds.
CASES = [
    ("path n=400", make(spec("path", 400))),
    ("broom n=500 delta=150", make(spec("broom", 500, 150))),
    ("hypercube d=9 (n=512)", make(spec("hypercube", 9))),
    ("pc k=20 delta=20 (n=422)", make(spec("pc_graph", 20, 20))),
    ("random n=600 m~2400", _random_connected(600, 1800, seed=7)),
]


def bench(fn, indptr, indices):
    best = float("inf")
    for _ in range(REPEATS):
        t0 = time.perf_counter()
        result = fn(indptr, indices)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    # Warm up the JIT so compilation time is not billed to the first case.
    warm = make(spec("path", 50)).csr()
    _numba.all_pairs_stats(*warm)
    _numpy.all_pairs_stats(*warm)

    print(f"{'case':<28} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    print("-" * 60)
    for name, g in CASES:
        indptr, indices = g.csr()
        t_nb, (ecc_nb, rows_nb, ok_nb) = bench(_numba.all_pairs_stats, indptr, indices)
        t_np, (ecc_np, rows_np, ok_np) = bench(_numpy.all_pairs_stats, indptr, indices)
        assert ok_nb and ok_np, name
        assert np.array_equal(ecc_nb, ecc_np), f"eccentricity mismatch on {name}"
        assert np.array_equal(rows_nb, rows_np), f"row-sum mismatch on {name}"
        print(f"{name:<28} {t_nb:>9.4f}s {t_np:>9.4f}s {t_np / t_nb:>7.1f}x")
    print("\nbackends agree on all cases")


if __name__ == "__main__":
    main()
