"""Compare the numba and pure-numpy acoustic kernel backends.

Usage: python benchmarks/bench_kernels.py [--seconds 30] [--repeats 5]

Times frame RMS and the autocorrelation peak search on a synthetic speech-like
signal.  The numba path includes a warm-up call so JIT compilation is not
counted.  Set OBAI_DISABLE_NUMBA=1 to confirm the package itself falls back
to the numpy path; this script always benchmarks both implementations
directly.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from clinlang._accel import USE_NUMBA
from clinlang._kernels import (
    _acf_peaks_loop,
    _acf_peaks_numpy,
    _frame_rms_loop,
    _frame_rms_numpy,
)


def make_signal(seconds: float, rate: int = 16000) -> np.ndarray:
    rng = np.random.default_rng(42)
    t = np.arange(int(seconds * rate)) / rate
    f0 = 120.0 + 30.0 * np.sin(2 * np.pi * 0.5 * t)
    x = np.sin(2 * np.pi * np.cumsum(f0) / rate)
    x += 0.05 * rng.standard_normal(x.shape[0])
    return x


def bench(fn, args, repeats: int) -> float:
    fn(*args)  # warm-up (JIT compile for the numba path)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seconds", type=float, default=30.0)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    rate = 16000
    x = make_signal(args.seconds, rate)
    frame_len = int(0.010 * rate)
    f0_frame = int(0.040 * rate)
    hop = int(0.010 * rate)
    min_lag = rate // 500
    max_lag = rate // 60

    print(f"signal: {args.seconds:.0f}s at {rate} Hz; numba available: {USE_NUMBA}")
    cases = [
        ("frame_rms", _frame_rms_loop, _frame_rms_numpy, (x, frame_len)),
        (
            "acf_peaks",
            _acf_peaks_loop,
            _acf_peaks_numpy,
            (x, f0_frame, hop, min_lag, max_lag),
        ),
    ]
    for name, loop_fn, numpy_fn, fnargs in cases:
        t_numpy = bench(numpy_fn, fnargs, args.repeats)
        t_loop = bench(loop_fn, fnargs, args.repeats)
        label = "numba" if USE_NUMBA else "python-loop"
        speedup = t_numpy / t_loop if t_loop > 0 else float("inf")
        print(
            f"{name:10s}  {label}: {t_loop * 1e3:8.2f} ms   "
            f"numpy: {t_numpy * 1e3:8.2f} ms   ratio numpy/{label}: {speedup:5.2f}x"
        )


if __name__ == "__main__":
    main()
