"""Audio ingestion, pause detection, F0 estimation, and speech rate.

Pause detection thresholds frame RMS energy relative to the signal's peak
frame (default -26 dB), so amplitude scaling leaves pause boundaries
unchanged.  F0 is the per-frame normalized autocorrelation peak with
parabolic lag interpolation.  All defaults are overridable.
"""

from __future__ import annotations

import wave
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import _kernels
from .errors import (
    EmptySignalError,
    RateTooLowError,
    TruncatedFileError,
    UnsupportedEncodingError,
)


@dataclass(frozen=True)
class AudioSignal:
    samples: np.ndarray  # float64 in [-1, 1]
    sample_rate: int

    @property
    def duration(self) -> float:
        return self.samples.shape[0] / self.sample_rate


def read_wav(path: Path | str) -> AudioSignal:
    """Read a PCM-16 RIFF/WAVE file; stereo is downmixed by channel mean."""
    try:
        with wave.open(str(path), "rb") as f:
            if f.getcomptype() != "NONE":
                raise UnsupportedEncodingError(
                    f"unsupported compression {f.getcomptype()!r} (PCM only)"
                )
            if f.getsampwidth() != 2:
                raise UnsupportedEncodingError(
                    f"unsupported sample width {f.getsampwidth() * 8} bit (16-bit only)"
                )
            n = f.getnframes()
            raw = f.readframes(n)
            channels = f.getnchannels()
            rate = f.getframerate()
    except (wave.Error, EOFError) as e:
        raise UnsupportedEncodingError(f"not a readable WAV file: {e}")
    data = np.frombuffer(raw, dtype="<i2")
    if data.shape[0] != n * channels:
        raise TruncatedFileError(
            f"expected {n * channels} samples, file holds {data.shape[0]}"
        )
    samples = data.astype(np.float64) / 32768.0
    if channels > 1:
        samples = samples.reshape(-1, channels).mean(axis=1)
    return AudioSignal(samples=samples, sample_rate=rate)


@dataclass(frozen=True)
class PauseParams:
    frame_s: float = 0.010
    threshold_db: float = -26.0  # relative to peak frame RMS
    min_pause_s: float = 0.150


def detect_pauses(
    signal: AudioSignal, params: PauseParams = PauseParams()
) -> list[tuple[float, float]]:
    """Maximal sub-threshold runs of at least min_pause_s, in seconds."""
    frame_len = max(1, int(round(params.frame_s * signal.sample_rate)))
    if signal.samples.shape[0] < 2 * frame_len:
        raise EmptySignalError("signal shorter than two analysis frames")
    rms = _kernels.frame_rms(signal.samples, frame_len)
    peak = float(np.max(rms))
    if peak == 0.0:
        silent = np.ones(rms.shape[0], dtype=bool)
    else:
        threshold = peak * 10.0 ** (params.threshold_db / 20.0)
        silent = rms < threshold
    min_frames = max(1, int(round(params.min_pause_s / params.frame_s)))
    pauses = []
    run_start = None
    for i, s in enumerate(silent):
        if s and run_start is None:
            run_start = i
        elif not s and run_start is not None:
            if i - run_start >= min_frames:
                pauses.append((run_start * params.frame_s, i * params.frame_s))
            run_start = None
    if run_start is not None and silent.shape[0] - run_start >= min_frames:
        end = min(silent.shape[0] * params.frame_s, signal.duration)
        pauses.append((run_start * params.frame_s, end))
    return pauses


@dataclass(frozen=True)
class F0Params:
    frame_s: float = 0.040
    hop_s: float = 0.010
    fmin: float = 60.0
    fmax: float = 500.0
    voicing_threshold: float = 0.30


@dataclass(frozen=True)
class F0Track:
    times: tuple[float, ...]
    f0: tuple[float | None, ...]  # None for unvoiced frames

    @property
    def voiced_values(self) -> list[float]:
        return [v for v in self.f0 if v is not None]

    def summary(self) -> dict:
        voiced = self.voiced_values
        n = len(self.f0)
        if not voiced:
            return {
                "median": None,
                "mean": None,
                "std": None,
                "voiced_fraction": 0.0,
            }
        arr = np.array(voiced)
        return {
            "median": float(np.median(arr)),
            "mean": float(np.mean(arr)),
            "std": float(np.std(arr)),
            "voiced_fraction": len(voiced) / n if n else 0.0,
        }


def estimate_f0(signal: AudioSignal, params: F0Params = F0Params()) -> F0Track:
    """Autocorrelation F0 with parabolic lag interpolation."""
    rate = signal.sample_rate
    if rate < 2 * params.fmax:
        raise RateTooLowError(
            f"sample rate {rate} below 2*fmax ({2 * params.fmax:.0f})"
        )
    frame_len = int(round(params.frame_s * rate))
    hop = max(1, int(round(params.hop_s * rate)))
    min_lag = max(2, int(np.floor(rate / params.fmax)))
    max_lag = min(frame_len - 2, int(np.ceil(rate / params.fmin)))
    if signal.samples.shape[0] < frame_len:
        raise EmptySignalError("signal shorter than one analysis frame")
    best_lag, peak, r_prev, r_next = _kernels.acf_peaks(
        signal.samples, frame_len, hop, min_lag, max_lag
    )
    times = []
    f0: list[float | None] = []
    for f in range(best_lag.shape[0]):
        times.append(f * params.hop_s + params.frame_s / 2.0)
        if peak[f] >= params.voicing_threshold and best_lag[f] > 0:
            denom = r_prev[f] - 2.0 * peak[f] + r_next[f]
            delta = 0.5 * (r_prev[f] - r_next[f]) / denom if denom != 0.0 else 0.0
            if not -1.0 < delta < 1.0:
                delta = 0.0
            hz = rate / (best_lag[f] + delta)
            f0.append(float(min(max(hz, params.fmin), params.fmax)))
        else:
            f0.append(None)
    return F0Track(times=tuple(times), f0=tuple(f0))


@dataclass(frozen=True)
class AcousticMeasures:
    pause_count: int
    total_pause_time: float
    mean_pause_duration: float
    speech_time: float
    f0_summary: dict
    speech_rate: float | None = None  # syllables / s, transcript required
    duration: float = 0.0

    def to_dict(self) -> dict:
        d = {
            "pause_count": self.pause_count,
            "total_pause_time": self.total_pause_time,
            "mean_pause_duration": self.mean_pause_duration,
            "speech_time": self.speech_time,
            "duration": self.duration,
            "f0": dict(sorted(self.f0_summary.items())),
        }
        if self.speech_rate is not None:
            d["speech_rate"] = self.speech_rate
        return d


def acoustic_measures(
    signal: AudioSignal,
    transcript=None,
    pack=None,
    pause_params: PauseParams = PauseParams(),
    f0_params: F0Params = F0Params(),
) -> AcousticMeasures:
    """Aggregate pause and F0 analyses; speech rate when a transcript is given."""
    pauses = detect_pauses(signal, pause_params)
    track = estimate_f0(signal, f0_params)
    total_pause = sum(e - s for s, e in pauses)
    speech_time = max(signal.duration - total_pause, 0.0)
    speech_rate = None
    if transcript is not None and pack is not None and transcript.tokens:
        from .phonlex import syllable_count
        from .textcore import TokenKind

        syllables = sum(
            syllable_count(t.normalized, pack)
            for t in transcript.tokens
            if t.kind is TokenKind.WORD
        )
        if speech_time > 0 and syllables > 0:
            speech_rate = syllables / speech_time
    return AcousticMeasures(
        pause_count=len(pauses),
        total_pause_time=total_pause,
        mean_pause_duration=total_pause / len(pauses) if pauses else 0.0,
        speech_time=speech_time,
        f0_summary=track.summary(),
        speech_rate=speech_rate,
        duration=signal.duration,
    )
