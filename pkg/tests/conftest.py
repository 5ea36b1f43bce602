from __future__ import annotations

import re
import wave

import numpy as np
import pytest

from clinlang.clinscore import FeatureTable
from clinlang.textcore import load_language_pack


@pytest.fixture(scope="session")
def en_pack():
    return load_language_pack("en")


@pytest.fixture(scope="session")
def is_pack():
    return load_language_pack("is")


@pytest.fixture(scope="session")
def features():
    return FeatureTable.load()


def write_wav(path, samples, rate=16000, channels=1):
    data = np.clip(samples, -1.0, 1.0)
    pcm = (data * 32767).astype("<i2")
    with wave.open(str(path), "wb") as f:
        f.setnchannels(channels)
        f.setsampwidth(2)
        f.setframerate(rate)
        f.writeframes(pcm.tobytes())
    return path


def sine(freq, seconds, rate=16000, amp=0.5):
    t = np.arange(int(seconds * rate)) / rate
    return amp * np.sin(2 * np.pi * freq * t)


@pytest.fixture()
def tone_wav(tmp_path):
    return write_wav(tmp_path / "tone.wav", sine(220.0, 1.0))


# ---------------------------------------------------------- acceptance gate
# one pass/fail line per acceptance criterion, printed after the test run
_CRITERION_RE = re.compile(r"test_criterion_(\d+)_(\w+)")
_criterion_results: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = _CRITERION_RE.search(report.nodeid)
    if not m:
        return
    num = int(m.group(1))
    title = m.group(2).replace("_", " ")
    _criterion_results[num] = ("PASS" if report.passed else "FAIL", title)


def pytest_terminal_summary(terminalreporter):
    if not _criterion_results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(_criterion_results):
        outcome, title = _criterion_results[num]
        terminalreporter.write_line(f"[{outcome}] criterion {num:2d}: {title}")
