"""Numeric inner loops for the acoustic analyses.

Two interchangeable backends: numba @njit loops (default) and a vectorized
pure-numpy path (OBAI_DISABLE_NUMBA=1).  benchmarks/bench_kernels.py
compares them.
"""

from __future__ import annotations

import numpy as np

from ._accel import USE_NUMBA, njit


# ---------------------------------------------------------------- frame RMS
@njit(cache=True)
def _frame_rms_loop(x, frame_len):
    n_frames = x.shape[0] // frame_len
    out = np.empty(n_frames, dtype=np.float64)
    for f in range(n_frames):
        acc = 0.0
        base = f * frame_len
        for t in range(frame_len):
            acc += x[base + t] * x[base + t]
        out[f] = np.sqrt(acc / frame_len)
    return out


def _frame_rms_numpy(x, frame_len):
    n_frames = x.shape[0] // frame_len
    frames = x[: n_frames * frame_len].reshape(n_frames, frame_len)
    return np.sqrt(np.mean(frames * frames, axis=1))


# ------------------------------------------- normalized autocorrelation peak
@njit(cache=True)
def _acf_peaks_loop(x, frame_len, hop, min_lag, max_lag):
    n_frames = 1 + (x.shape[0] - frame_len) // hop if x.shape[0] >= frame_len else 0
    best_lag = np.zeros(n_frames, dtype=np.int64)
    peak = np.zeros(n_frames, dtype=np.float64)
    r_prev = np.zeros(n_frames, dtype=np.float64)
    r_next = np.zeros(n_frames, dtype=np.float64)
    for f in range(n_frames):
        base = f * hop
        mean = 0.0
        for t in range(frame_len):
            mean += x[base + t]
        mean /= frame_len
        r0 = 0.0
        for t in range(frame_len):
            d = x[base + t] - mean
            r0 += d * d
        if r0 <= 0.0:
            continue
        lo = min_lag - 1 if min_lag > 1 else min_lag
        hi = max_lag + 1 if max_lag + 1 < frame_len else max_lag
        n_lags = hi - lo + 1
        r = np.empty(n_lags, dtype=np.float64)
        for k in range(n_lags):
            lag = lo + k
            acc = 0.0
            for t in range(frame_len - lag):
                acc += (x[base + t] - mean) * (x[base + t + lag] - mean)
            r[k] = acc / r0
        bi = -1
        bv = -2.0
        for k in range(n_lags):
            lag = lo + k
            if min_lag <= lag <= max_lag and r[k] > bv:
                bv = r[k]
                bi = k
        best_lag[f] = lo + bi
        peak[f] = bv
        if bi > 0:
            r_prev[f] = r[bi - 1]
        else:
            r_prev[f] = bv
        if bi < n_lags - 1:
            r_next[f] = r[bi + 1]
        else:
            r_next[f] = bv
    return best_lag, peak, r_prev, r_next


def _acf_peaks_numpy(x, frame_len, hop, min_lag, max_lag):
    n_frames = 1 + (x.shape[0] - frame_len) // hop if x.shape[0] >= frame_len else 0
    best_lag = np.zeros(n_frames, dtype=np.int64)
    peak = np.zeros(n_frames, dtype=np.float64)
    r_prev = np.zeros(n_frames, dtype=np.float64)
    r_next = np.zeros(n_frames, dtype=np.float64)
    if n_frames == 0:
        return best_lag, peak, r_prev, r_next
    idx = np.arange(frame_len)[None, :] + hop * np.arange(n_frames)[:, None]
    frames = x[idx]
    frames = frames - frames.mean(axis=1, keepdims=True)
    r0 = np.sum(frames * frames, axis=1)
    voiced = r0 > 0.0
    lo = min_lag - 1 if min_lag > 1 else min_lag
    hi = max_lag + 1 if max_lag + 1 < frame_len else max_lag
    lags = np.arange(lo, hi + 1)
    r = np.zeros((n_frames, lags.shape[0]), dtype=np.float64)
    safe_r0 = np.where(voiced, r0, 1.0)
    for k, lag in enumerate(lags):
        r[:, k] = np.sum(frames[:, : frame_len - lag] * frames[:, lag:], axis=1)
    r /= safe_r0[:, None]
    in_range = (lags >= min_lag) & (lags <= max_lag)
    masked = np.where(in_range[None, :], r, -2.0)
    bi = np.argmax(masked, axis=1)
    rows = np.arange(n_frames)
    bv = masked[rows, bi]
    best_lag[voiced] = (lo + bi)[voiced]
    peak[voiced] = bv[voiced]
    prev = np.where(bi > 0, r[rows, np.maximum(bi - 1, 0)], bv)
    nxt = np.where(bi < lags.shape[0] - 1, r[rows, np.minimum(bi + 1, lags.shape[0] - 1)], bv)
    r_prev[voiced] = prev[voiced]
    r_next[voiced] = nxt[voiced]
    return best_lag, peak, r_prev, r_next


if USE_NUMBA:
    frame_rms = _frame_rms_loop
    acf_peaks = _acf_peaks_loop
else:
    frame_rms = _frame_rms_numpy
    acf_peaks = _acf_peaks_numpy
