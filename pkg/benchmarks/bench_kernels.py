"""Throughput comparison of the two kernel backends.

Times the batched graph-statistics kernel (adjacency bitmask -> degree
stats, connectivity, spectrum, Estrada index) in the current process,
then re-times the same slice in a subprocess started with
ESTRADA_PURE_NUMPY=1 so the plain numpy implementation is active. The
subprocess also returns its results for a consistency check against the
in-process backend.

Usage:
    python3 benchmarks/bench_kernels.py [--n 7] [--count 100000]
"""

import argparse
import json
import os
import subprocess
import sys
import tempfile
import time

import numpy as np

import estrada._kernels as kernels

WORKER = r"""
import json, os, sys, time
import numpy as np
import estrada._kernels as kernels

spec = json.loads(sys.argv[1])
masks = np.arange(spec["start"], spec["stop"], dtype=np.int64)
kernels.batch_graph_stats(spec["n"], masks[:64])  # warm-up parity
t0 = time.perf_counter()
cols = kernels.batch_graph_stats(spec["n"], masks)
elapsed = time.perf_counter() - t0
np.save(spec["out"], cols[: spec["keep"]])
print(json.dumps({
    "numba": bool(kernels.USING_NUMBA),
    "elapsed": elapsed,
    "graphs": int(masks.size),
}))
"""


def time_in_process(n, start, stop, repeat):
    masks = np.arange(start, stop, dtype=np.int64)
    kernels.batch_graph_stats(n, masks[:64])  # trigger compilation
    best = None
    cols = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        cols = kernels.batch_graph_stats(n, masks)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, int(masks.size), cols


def time_pure_numpy(n, start, stop, keep):
    with tempfile.TemporaryDirectory() as tmp:
        out = os.path.join(tmp, "cols.npy")
        spec = json.dumps(
            {"n": n, "start": start, "stop": stop, "keep": keep, "out": out}
        )
        env = dict(os.environ, ESTRADA_PURE_NUMPY="1")
        proc = subprocess.run(
            [sys.executable, "-c", WORKER, spec],
            capture_output=True,
            text=True,
            env=env,
            check=True,
        )
        stats = json.loads(proc.stdout.strip().splitlines()[-1])
        cols = np.load(out)
    return stats, cols


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=7, help="vertex count (<= 7)")
    parser.add_argument(
        "--count",
        type=int,
        default=100_000,
        help="masks for the compiled backend (default 100000)",
    )
    parser.add_argument(
        "--pure-count",
        type=int,
        default=None,
        help="masks for the numpy backend (default count // 20)",
    )
    parser.add_argument("--offset", type=int, default=0, help="first mask")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    total = 1 << (args.n * (args.n - 1) // 2)
    count = min(args.count, total - args.offset)
    pure_count = args.pure_count or max(1024, count // 20)
    pure_count = min(pure_count, total - args.offset)

    backend = "numba" if kernels.USING_NUMBA else "numpy"
    elapsed, graphs, cols = time_in_process(
        args.n, args.offset, args.offset + count, args.repeat
    )
    print(
        f"in-process [{backend:5}]  n={args.n}  graphs={graphs:7d}  "
        f"time={elapsed:8.3f}s  rate={graphs / elapsed:10.0f} graphs/s"
    )

    keep = min(2048, pure_count)
    stats, pure_cols = time_pure_numpy(
        args.n, args.offset, args.offset + pure_count, keep
    )
    assert stats["numba"] is False, "subprocess unexpectedly used numba"
    rate = stats["graphs"] / stats["elapsed"]
    print(
        f"subprocess [numpy]  n={args.n}  graphs={stats['graphs']:7d}  "
        f"time={stats['elapsed']:8.3f}s  rate={rate:10.0f} graphs/s"
    )

    shared = cols[:keep]
    finite = np.isfinite(shared) & np.isfinite(pure_cols)
    if not np.array_equal(np.isfinite(shared), np.isfinite(pure_cols)):
        raise SystemExit("backend disagreement in infinite cells")
    if not np.allclose(shared[finite], pure_cols[finite], rtol=0, atol=1e-10):
        worst = float(np.max(np.abs(shared[finite] - pure_cols[finite])))
        raise SystemExit(f"backend disagreement, worst |delta| = {worst}")
    print(f"consistency: backends agree on {keep} shared rows (atol 1e-10)")

    if kernels.USING_NUMBA and stats["elapsed"] > 0 and elapsed > 0:
        speedup = (graphs / elapsed) / rate
        print(f"speedup: {speedup:.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
