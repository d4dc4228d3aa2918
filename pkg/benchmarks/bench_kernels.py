#!/usr/bin/env python3
"""Benchmark the compiled rank kernels against the pure-Python fallback.

Times the raw kernels on workloads shaped like the real ones (boundary
matrices of induced subcomplexes, lcm-lattice nerves) plus an end-to-end
region enumeration in a subprocess with each backend forced.

Usage: python benchmarks/bench_kernels.py
"""

import os
import random
import subprocess
import sys
import time

from polarcodex import _kernels_py

try:
    from polarcodex import _kernels_cy
except ImportError:
    _kernels_cy = None


def random_chain_complex(rng, nverts, nfacets):
    faces = {0}
    for _ in range(nfacets):
        f = rng.randrange(1, 1 << nverts)
        sub = f
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    groups = {}
    for m in faces:
        if m:
            groups.setdefault(m.bit_count() - 1, []).append(m)
    return [sorted(groups.get(d, [])) for d in range(max(groups) + 1)]


def time_fn(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_chain_ranks(backend, complexes, p):
    def run():
        for by_dim in complexes:
            backend.chain_ranks(by_dim, p)

    return time_fn(run)


def bench_rank_gf2(backend, mats):
    def run():
        for rows, ncols in mats:
            backend.rank_gf2_rows(rows, ncols)

    return time_fn(run)


def bench_rank_gfp(backend, mats, p):
    def run():
        for rows in mats:
            backend.rank_gfp(rows, p)

    return time_fn(run)


def bench_end_to_end(env_value):
    env = dict(os.environ)
    if env_value:
        env["POLAR_CODEX_PURE"] = "1"
    else:
        env.pop("POLAR_CODEX_PURE", None)
    script = (
        "import time, polarcodex as px; "
        "px.explorer.orbit_reps(4); "  # symmetry tabulation, not kernel-bound
        "t0 = time.perf_counter(); px.enumerate_region(4); "
        "print(px.KERNEL_BACKEND, time.perf_counter() - t0)"
    )
    out = subprocess.run(
        [sys.executable, "-c", script], env=env, capture_output=True, text=True
    )
    backend, elapsed = out.stdout.split()
    return backend, float(elapsed)


def main():
    rng = random.Random(1)
    complexes = [random_chain_complex(rng, rng.randint(6, 10), rng.randint(3, 8))
                 for _ in range(200)]
    gf2_mats = []
    for _ in range(20):
        nr = nc = 256
        gf2_mats.append(([rng.getrandbits(nc) for _ in range(nr)], nc))
    gfp_mats = [
        [[rng.randrange(3) for _ in range(96)] for _ in range(96)]
        for _ in range(10)
    ]

    backends = [("python", _kernels_py)]
    if _kernels_cy is not None:
        backends.append(("cython", _kernels_cy))

    rows = []
    for name, mod in backends:
        rows.append(
            (
                name,
                bench_chain_ranks(mod, complexes, 2),
                bench_chain_ranks(mod, complexes, 3),
                bench_rank_gf2(mod, gf2_mats),
                bench_rank_gfp(mod, gfp_mats, 3),
            )
        )

    print(f"{'backend':<8} {'chain p=2':>11} {'chain p=3':>11} "
          f"{'gf2 256^2 x20':>14} {'gfp 96^2 x10':>13}")
    for name, a, b, c, d in rows:
        print(f"{name:<8} {a:>10.4f}s {b:>10.4f}s {c:>13.4f}s {d:>12.4f}s")
    if len(rows) == 2:
        py, cy = rows
        print("\nspeedup (pure / compiled):")
        labels = ["chain p=2", "chain p=3", "gf2", "gfp"]
        for i, label in enumerate(labels, start=1):
            print(f"  {label:<10} {py[i] / cy[i]:6.1f}x")

    print("\nend-to-end n=4 region enumeration, 400 orbits (fresh process):")
    for pure in (False, True):
        backend, elapsed = bench_end_to_end(pure)
        print(f"  {backend:<8} {elapsed:.2f}s")


if __name__ == "__main__":
    main()
