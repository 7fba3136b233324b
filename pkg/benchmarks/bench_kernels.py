#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-numpy fallback.

Run after an editable install:

    python benchmarks/bench_kernels.py [--repeats 5]

The conjugated-norm kernel is the one that dominates the extremum search
(30 finite-difference probes per iteration), so that row is the figure of
merit.
"""

import argparse
import importlib
import timeit

import numpy as np

from twistorz.acs import _vertex_matrix, haar_rotation


def load_backends():
    backends = {"pure": importlib.import_module("twistorz._kernels_py")}
    try:
        backends["compiled"] = importlib.import_module("twistorz._kernels_cy")
    except ImportError:
        print("note: compiled extension not built; benchmarking the fallback only")
    return backends


def bench(fn, number):
    best = min(timeit.repeat(fn, number=number, repeat=5))
    return best / number


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--number", type=int, default=2000, help="calls per timing sample")
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    j_ref = _vertex_matrix(0)
    q = haar_rotation(6, rng)
    j = q @ j_ref @ q.T

    backends = load_backends()
    rows = []
    for name, impl in backends.items():
        t_comp = bench(lambda impl=impl: impl.nijenhuis_components(j), args.number)
        t_norm = bench(lambda impl=impl: impl.nijenhuis_norm_sq(j), args.number)
        t_conj = bench(lambda impl=impl: impl.conjugated_norm_sq(q, j_ref), args.number)
        rows.append((name, t_comp, t_norm, t_conj))

    print(f"{'backend':<10} {'components':>14} {'norm_sq':>14} {'conjugated':>14}")
    for name, t_comp, t_norm, t_conj in rows:
        print(f"{name:<10} {t_comp*1e6:>12.2f}us {t_norm*1e6:>12.2f}us {t_conj*1e6:>12.2f}us")
    if len(rows) == 2:
        pure = rows[0] if rows[0][0] == "pure" else rows[1]
        comp = rows[0] if rows[0][0] == "compiled" else rows[1]
        print(
            f"speedup (pure/compiled): components {pure[1]/comp[1]:.1f}x, "
            f"norm {pure[2]/comp[2]:.1f}x, conjugated {pure[3]/comp[3]:.1f}x"
        )


if __name__ == "__main__":
    main()
