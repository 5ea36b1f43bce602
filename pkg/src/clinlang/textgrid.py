"""Praat TextGrid interchange (long "ooTextFile" form) and CSV export.

The serialization grammar is fixed: 6-decimal times, 4-space indent steps,
labels quoted with Praat's doubled-quote escaping.  write -> parse -> write
is byte-identical for every grid satisfying the interval invariants.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass

from .errors import InvariantViolationError, TextGridSyntaxError

_EPS = 1e-9


@dataclass(frozen=True)
class Interval:
    xmin: float
    xmax: float
    label: str


@dataclass(frozen=True)
class IntervalTier:
    name: str
    xmin: float
    xmax: float
    intervals: tuple[Interval, ...]


@dataclass(frozen=True)
class TextGrid:
    xmin: float
    xmax: float
    tiers: tuple[IntervalTier, ...]

    def validate(self) -> None:
        if self.xmax <= self.xmin:
            raise InvariantViolationError("grid xmax must exceed xmin")
        for tier in self.tiers:
            if abs(tier.xmin - self.xmin) > _EPS or abs(tier.xmax - self.xmax) > _EPS:
                raise InvariantViolationError(
                    f"tier {tier.name!r} bounds differ from grid bounds"
                )
            if not tier.intervals:
                raise InvariantViolationError(f"tier {tier.name!r} has no intervals")
            prev = tier.xmin
            for iv in tier.intervals:
                if iv.xmax <= iv.xmin:
                    raise InvariantViolationError(
                        f"tier {tier.name!r}: interval ({iv.xmin}, {iv.xmax}) is empty"
                    )
                if abs(iv.xmin - prev) > _EPS:
                    raise InvariantViolationError(
                        f"tier {tier.name!r}: gap or overlap at {iv.xmin}"
                    )
                prev = iv.xmax
            if abs(prev - tier.xmax) > _EPS:
                raise InvariantViolationError(
                    f"tier {tier.name!r}: intervals do not cover the tier"
                )


def _num(x: float) -> str:
    return f"{x:.6f}"


def _quote(label: str) -> str:
    return '"' + label.replace('"', '""') + '"'


def write_textgrid(grid: TextGrid) -> bytes:
    """Serialize to the long ooTextFile form (validates first)."""
    grid.validate()
    out = [
        'File type = "ooTextFile"',
        'Object class = "TextGrid"',
        "",
        f"xmin = {_num(grid.xmin)}",
        f"xmax = {_num(grid.xmax)}",
        "tiers? <exists>",
        f"size = {len(grid.tiers)}",
        "item []:",
    ]
    for ti, tier in enumerate(grid.tiers, 1):
        out.append(f"    item [{ti}]:")
        out.append('        class = "IntervalTier"')
        out.append(f"        name = {_quote(tier.name)}")
        out.append(f"        xmin = {_num(tier.xmin)}")
        out.append(f"        xmax = {_num(tier.xmax)}")
        out.append(f"        intervals: size = {len(tier.intervals)}")
        for ii, iv in enumerate(tier.intervals, 1):
            out.append(f"        intervals [{ii}]:")
            out.append(f"            xmin = {_num(iv.xmin)}")
            out.append(f"            xmax = {_num(iv.xmax)}")
            out.append(f"            text = {_quote(iv.label)}")
    return ("\n".join(out) + "\n").encode("utf-8")


class _Lines:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.pos = 0

    def next(self) -> tuple[int, str]:
        while self.pos < len(self.lines):
            line = self.lines[self.pos].strip()
            self.pos += 1
            if line:
                return self.pos, line
        raise TextGridSyntaxError(
            f"line {len(self.lines)}: unexpected end of file"
        )

    def expect(self, pattern: str) -> tuple[int, re.Match]:
        lineno, line = self.next()
        m = re.fullmatch(pattern, line)
        if not m:
            raise TextGridSyntaxError(
                f"line {lineno}: expected {pattern!r}, got {line!r}"
            )
        return lineno, m


_NUM_RE = r"(-?\d+(?:\.\d+)?)"
_STR_RE = r'"((?:[^"]|"")*)"'


def _unquote(s: str) -> str:
    return s.replace('""', '"')


def parse_textgrid(data: bytes | str) -> TextGrid:
    """Parse the long ooTextFile form; errors carry line numbers."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    src = _Lines(text)
    src.expect(r'File type = "ooTextFile"')
    src.expect(r'Object class = "TextGrid"')
    _, m = src.expect(rf"xmin = {_NUM_RE}")
    xmin = float(m.group(1))
    _, m = src.expect(rf"xmax = {_NUM_RE}")
    xmax = float(m.group(1))
    src.expect(r"tiers\? <exists>")
    _, m = src.expect(r"size = (\d+)")
    size = int(m.group(1))
    src.expect(r"item \[\]:")
    tiers = []
    for _ in range(size):
        src.expect(r"item \[\d+\]:")
        lineno, m = src.expect(rf"class = {_STR_RE}")
        if _unquote(m.group(1)) != "IntervalTier":
            raise TextGridSyntaxError(
                f"line {lineno}: only IntervalTier is supported"
            )
        _, m = src.expect(rf"name = {_STR_RE}")
        name = _unquote(m.group(1))
        _, m = src.expect(rf"xmin = {_NUM_RE}")
        txmin = float(m.group(1))
        _, m = src.expect(rf"xmax = {_NUM_RE}")
        txmax = float(m.group(1))
        _, m = src.expect(r"intervals: size = (\d+)")
        n_intervals = int(m.group(1))
        intervals = []
        for _ in range(n_intervals):
            src.expect(r"intervals \[\d+\]:")
            _, m = src.expect(rf"xmin = {_NUM_RE}")
            ixmin = float(m.group(1))
            _, m = src.expect(rf"xmax = {_NUM_RE}")
            ixmax = float(m.group(1))
            _, m = src.expect(rf"text = {_STR_RE}")
            intervals.append(Interval(ixmin, ixmax, _unquote(m.group(1))))
        tiers.append(IntervalTier(name, txmin, txmax, tuple(intervals)))
    grid = TextGrid(xmin, xmax, tuple(tiers))
    grid.validate()
    return grid


def textgrid_to_csv(grid: TextGrid) -> str:
    """Flat CSV export: tier,xmin,xmax,label (RFC 4180 quoting)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["tier", "xmin", "xmax", "label"])
    for tier in grid.tiers:
        for iv in tier.intervals:
            writer.writerow([tier.name, _num(iv.xmin), _num(iv.xmax), iv.label])
    return out.getvalue()


def pauses_to_textgrid(
    pauses: list[tuple[float, float]], duration: float, tier_name: str = "pauses"
) -> TextGrid:
    """Build a speech/pause interval tier from detected pauses."""
    intervals = []
    cursor = 0.0
    for start, end in pauses:
        if start > cursor:
            intervals.append(Interval(cursor, start, "speech"))
        intervals.append(Interval(start, end, "pause"))
        cursor = end
    if cursor < duration:
        intervals.append(Interval(cursor, duration, "speech"))
    return TextGrid(
        0.0, duration, (IntervalTier(tier_name, 0.0, duration, tuple(intervals)),)
    )
