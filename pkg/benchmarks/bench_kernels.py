"""Time every dual-path kernel: numba loop vs numpy implementation.

    python benchmarks/bench_kernels.py [--repeat 5] [--json out.json]

Both paths are called directly, so the AIBENCH_DISABLE_JIT flag does not
matter here. Each row reports the best-of-N wall time and the largest
absolute difference between the two outputs.
"""

import argparse
import json
import time

import numpy as np

from aibench import envs, metrics
from aibench._jit import HAVE_NUMBA
from aibench.diagnostics import mi


def _best(fn, repeat):
    fn()  # compile / warm caches
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def _diff(a, b):
    a = a if isinstance(a, tuple) else (a,)
    b = b if isinstance(b, tuple) else (b,)
    return max(float(np.max(np.abs(np.asarray(x, float) - np.asarray(y, float)))) for x, y in zip(a, b))


def cases(rng):
    p, v = rng.normal(size=2), rng.normal(size=2)
    f = rng.uniform(-1, 1, 2)
    coeffs = rng.uniform(-5, 5, 5)
    x1 = rng.normal(size=(3000, 8))
    y1 = x1[:, :1] + rng.normal(size=(3000, 1))
    labels = rng.integers(0, 2, 3000)
    scores = rng.uniform(0, 1, 20)
    idx = rng.integers(0, 20, size=(2000, 20))
    a, b = rng.integers(0, 5, 400).astype(float), rng.integers(0, 5, 400).astype(float)

    def loop(fn, *args, n=2000):
        def run():
            out = None
            for _ in range(n):
                out = fn(*args)
            return out
        return run

    return [
        ("di_update x2000", loop(envs._di_update_jit, p, v, f, 1.0, 0.0, 0.1), loop(envs._di_update_np, p, v, f, 1.0, 0.0, 0.1)),
        ("ode_rate x2000", loop(envs._ode_rate_jit, coeffs, 0.3), loop(envs._ode_rate_np, coeffs, 0.3)),
        ("ksg_counts n=3000", lambda: mi._ksg_counts_jit(x1, y1, 3), lambda: mi._ksg_counts_np(x1, y1, 3)),
        ("mixed_counts n=3000", lambda: mi._mixed_counts_jit(x1, labels, 3), lambda: mi._mixed_counts_np(x1, labels, 3)),
        ("boot_iqm 2000x20", lambda: metrics._boot_iqm_jit(scores, idx), lambda: metrics._boot_iqm_np(scores, idx)),
        ("mw_count 400x400", lambda: metrics._mw_count_jit(a, b), lambda: metrics._mw_count_np(a, b)),
    ]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json")
    args = ap.parse_args()
    if not HAVE_NUMBA:
        raise SystemExit("numba is not importable; nothing to compare")
    rows = []
    print(f"{'kernel':22s} {'numba ms':>10s} {'numpy ms':>10s} {'speedup':>8s} {'max |diff|':>11s}")
    for name, fj, fn in cases(np.random.default_rng(0)):
        tj, tn = _best(fj, args.repeat), _best(fn, args.repeat)
        d = _diff(fj(), fn())
        rows.append({"kernel": name, "numba_s": tj, "numpy_s": tn, "speedup": tn / tj, "max_abs_diff": d})
        print(f"{name:22s} {1e3 * tj:10.3f} {1e3 * tn:10.3f} {tn / tj:8.1f} {d:11.2e}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
