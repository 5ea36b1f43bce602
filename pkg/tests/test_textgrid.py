from __future__ import annotations

import random
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clinlang.errors import InvariantViolationError, TextGridSyntaxError
from clinlang.textgrid import (
    Interval,
    IntervalTier,
    TextGrid,
    parse_textgrid,
    pauses_to_textgrid,
    textgrid_to_csv,
    write_textgrid,
)

GOLDEN = Path(__file__).parent / "golden" / "simple.TextGrid"


def _random_grid(rng: random.Random) -> TextGrid:
    xmax = round(rng.uniform(0.5, 30.0), 6)
    tiers = []
    for t in range(rng.randint(1, 4)):
        n = rng.randint(1, 8)
        cuts = sorted(round(rng.uniform(0.000001, xmax - 0.000001), 6) for _ in range(n - 1))
        bounds = [0.0] + [c for c in cuts] + [xmax]
        # drop duplicate cuts (would make empty intervals)
        bounds = sorted(set(bounds))
        labels = ["", "ah", 'say "hi"', "pause", "spk1"]
        intervals = tuple(
            Interval(bounds[i], bounds[i + 1], rng.choice(labels))
            for i in range(len(bounds) - 1)
        )
        tiers.append(IntervalTier(f"tier{t}", 0.0, xmax, intervals))
    return TextGrid(0.0, xmax, tuple(tiers))


def test_roundtrip_100_random_grids():
    rng = random.Random(20240401)
    for _ in range(100):
        grid = _random_grid(rng)
        data = write_textgrid(grid)
        again = write_textgrid(parse_textgrid(data))
        assert data == again


def test_golden_file_byte_exact():
    grid = TextGrid(
        0.0, 1.0, (IntervalTier("words", 0.0, 1.0, (Interval(0.0, 1.0, "hello"),)),)
    )
    assert write_textgrid(grid) == GOLDEN.read_bytes()


def test_quote_escaping_roundtrip():
    grid = TextGrid(
        0.0,
        1.0,
        (IntervalTier("t", 0.0, 1.0, (Interval(0.0, 1.0, 'he said "no"'),)),),
    )
    parsed = parse_textgrid(write_textgrid(grid))
    assert parsed.tiers[0].intervals[0].label == 'he said "no"'


def test_validation_rejects_gap():
    grid = TextGrid(
        0.0,
        2.0,
        (
            IntervalTier(
                "t",
                0.0,
                2.0,
                (Interval(0.0, 0.5, "a"), Interval(1.0, 2.0, "b")),
            ),
        ),
    )
    with pytest.raises(InvariantViolationError):
        write_textgrid(grid)


def test_validation_rejects_empty_interval():
    grid = TextGrid(
        0.0,
        1.0,
        (IntervalTier("t", 0.0, 1.0, (Interval(0.0, 0.0, "a"), Interval(0.0, 1.0, "b")),),),
    )
    with pytest.raises(InvariantViolationError):
        write_textgrid(grid)


def test_validation_rejects_tier_bounds_mismatch():
    grid = TextGrid(
        0.0, 2.0, (IntervalTier("t", 0.0, 1.0, (Interval(0.0, 1.0, "a"),)),)
    )
    with pytest.raises(InvariantViolationError):
        write_textgrid(grid)


def test_parse_error_carries_line_number():
    broken = GOLDEN.read_text().replace('class = "IntervalTier"', "class = ???")
    with pytest.raises(TextGridSyntaxError) as e:
        parse_textgrid(broken)
    assert "line" in str(e.value)


def test_parse_rejects_truncated():
    data = GOLDEN.read_bytes()[:100]
    with pytest.raises(TextGridSyntaxError):
        parse_textgrid(data)


def test_csv_export():
    grid = parse_textgrid(GOLDEN.read_bytes())
    csv_text = textgrid_to_csv(grid)
    lines = csv_text.strip().split("\n")
    assert lines[0] == "tier,xmin,xmax,label"
    assert lines[1] == "words,0.000000,1.000000,hello"


def test_pauses_to_textgrid():
    grid = pauses_to_textgrid([(0.8, 1.2)], 2.0)
    grid.validate()
    labels = [iv.label for iv in grid.tiers[0].intervals]
    assert labels == ["speech", "pause", "speech"]
    assert grid.tiers[0].intervals[1].xmin == pytest.approx(0.8)


@given(st.integers(min_value=0, max_value=10**9))
@settings(max_examples=50)
def test_roundtrip_property(seed):
    grid = _random_grid(random.Random(seed))
    data = write_textgrid(grid)
    assert write_textgrid(parse_textgrid(data)) == data
