"""Compare the numba and numpy variants of each hot kernel.

    python3 benchmarks/bench_kernels.py [--repeats N]

Prints the median wall time per call for both variants and the max absolute
difference between their outputs.
"""
import argparse
import time

import numpy as np

from tsak import kernels


def _cases(rng):
    B, T, H = 64, 100, 10
    xw = rng.standard_normal((B, T, 4 * H)).astype(np.float32)
    wh = (0.3 * rng.standard_normal((H, 4 * H))).astype(np.float32)
    h_all, c_all, gates = kernels.IMPLEMENTATIONS["lstm_forward"][1](xw, wh)
    dh = rng.standard_normal((B, T, H)).astype(np.float32)
    pool_x = rng.standard_normal((64, 100, 100)).astype(np.float32)
    _, idx = kernels.IMPLEMENTATIONS["maxpool_forward"][1](pool_x, 2, 2)
    g = rng.standard_normal((64, 100, 50)).astype(np.float32)
    sig = rng.standard_normal((30000, 20))
    labels = rng.integers(0, 4, 30000)
    starts = np.arange(0, 30000 - 100 + 1, 25)
    return {
        "lstm_forward": (xw, wh),
        "lstm_backward": (dh, h_all, c_all, gates, wh),
        "maxpool_forward": (pool_x, 2, 2),
        "maxpool_backward": (g, idx, 100),
        "biquad": (sig, 0.2, 0.4, 0.2, -0.3, 0.1),
        "window_labels": (labels, starts, 100, 4),
    }


def _median_time(fn, args, repeats):
    fn(*args)  # warm-up (includes numba compilation)
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return float(np.median(times))


def _maxdiff(a, b):
    a = a if isinstance(a, tuple) else (a,)
    b = b if isinstance(b, tuple) else (b,)
    return max(float(np.max(np.abs(np.asarray(x, dtype=np.float64) - np.asarray(y, dtype=np.float64))))
               for x, y in zip(a, b))


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=20)
    args = ap.parse_args(argv)
    cases = _cases(np.random.default_rng(0))
    print(f"{'kernel':<18}{'numba ms':>10}{'numpy ms':>10}{'speedup':>9}{'max|diff|':>12}")
    for name, fn_args in cases.items():
        nb, npy = kernels.IMPLEMENTATIONS[name]
        t_nb = _median_time(nb, fn_args, args.repeats)
        t_np = _median_time(npy, fn_args, args.repeats)
        diff = _maxdiff(nb(*fn_args), npy(*fn_args))
        print(f"{name:<18}{t_nb * 1e3:>10.3f}{t_np * 1e3:>10.3f}{t_np / t_nb:>8.1f}x{diff:>12.2e}")


if __name__ == "__main__":
    main()
