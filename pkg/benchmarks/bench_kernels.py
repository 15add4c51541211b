"""Benchmark the numba-compiled kernels against their pure-python twins.

Run as a script:

    python3 benchmarks/bench_kernels.py [--batch 200000] [--repeats 5]

Each kernel ``foo`` in qqmems._kernels has an un-jitted twin ``foo_py``; this
compares wall times on identical random inputs and asserts the outputs agree
bitwise-closely, so it doubles as a backend-consistency check.  When the
QQMEMS_NO_NUMBA environment variable is set both columns run the same python
code and the speedup hovers around 1.
"""

import argparse
import time

import numpy as np

from qqmems import _kernels
from qqmems._backend import NUMBA_ENABLED


def _time(fn, *args, repeats=5):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--batch", type=int, default=200_000)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    w = rng.exponential(size=(args.batch, 6))
    w /= w.sum(axis=1, keepdims=True)
    params = np.empty((args.batch, 9))
    params[:, :3] = w[:, :3]
    params[:, 3:6] = w[:, 3:]
    params[:, 6:] = rng.uniform(0.0, 1.0, (args.batch, 3)) * np.sqrt(w[:, :3] * w[:, 3:])
    spectra = np.sort(w, axis=1)[:, ::-1].copy()

    cases = [
        ("x_pt_minus_eigs", (params,)),
        ("x_negativity_batch", (params,)),
        ("best_pair_scan", (spectra[: args.batch // 10],)),
    ]

    print(f"numba backend enabled: {NUMBA_ENABLED}")
    print(f"{'kernel':<22} {'jitted [s]':>12} {'python [s]':>12} {'speedup':>9}")
    for name, arg in cases:
        jit_fn = getattr(_kernels, name)
        py_fn = getattr(_kernels, name + "_py")
        jit_fn(*arg)  # warm-up / compile outside the timed region
        t_jit, out_jit = _time(jit_fn, *arg, repeats=args.repeats)
        t_py, out_py = _time(py_fn, *arg, repeats=args.repeats)
        np.testing.assert_allclose(out_jit, out_py, rtol=0, atol=1e-14)
        print(f"{name:<22} {t_jit:>12.4f} {t_py:>12.4f} {t_py / t_jit:>8.1f}x")


if __name__ == "__main__":
    main()
