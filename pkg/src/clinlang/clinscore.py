"""Clinical scoring: spelling distance, phonological distance, naming tests.

The distance is a weighted edit distance over insertions, deletions,
substitutions, and adjacent transpositions.  Transpositions are
*unrestricted*: a transposed pair may be produced anywhere in the evolving
string, so the computed value always equals the length of the cheapest
sequence of single edits and (under unit weights) is a true metric.  The DP
is the Lowrance-Wagner formulation with backpointers, so every score comes
with a replayable operation trace.

Phonological scoring runs the same DP over IPA segments, with the
substitution cost scaled by the fraction of distinctive features on which
the two segments differ.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from pathlib import Path

from .errors import (
    EmptyTargetError,
    MalformedHeaderError,
    MalformedResourceError,
    UnknownSegmentError,
)

FEATURES = (
    "consonantal",
    "sonorant",
    "continuant",
    "voice",
    "nasal",
    "lateral",
    "labial",
    "coronal",
    "dorsal",
    "high",
    "low",
    "back",
    "round",
    "tense",
    "strident",
    "delayed_release",
    "syllabic",
)

DEFAULT_FEATURE_TABLE = Path(__file__).parent / "data" / "features.tsv"


@dataclass(frozen=True)
class OperationWeights:
    insertion: float = 1.0
    deletion: float = 1.0
    substitution: float = 1.0
    transposition: float = 1.0

    def __post_init__(self):
        for name in ("insertion", "deletion", "substitution", "transposition"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} weight must be non-negative")


@dataclass(frozen=True)
class EditOp:
    """One edit, positioned in the *evolving* string at application time."""

    op: str  # insert | delete | substitute | transpose
    position: int
    symbols: tuple[str, ...]
    cost: float

    def code(self) -> str:
        return f"{self.op[:3]}@{self.position}:{'>'.join(self.symbols)}"


@dataclass(frozen=True)
class ScoreRecord:
    item_id: str
    target: str
    response: str
    raw_distance: float
    normalized_distance: float
    score: float
    op_trace: tuple[EditOp, ...] = ()

    def trace_codes(self) -> str:
        return ";".join(op.code() for op in self.op_trace)


def replay_trace(target: list[str], trace: tuple[EditOp, ...]) -> list[str]:
    """Apply a trace to a symbol list; the result should equal the response."""
    work = list(target)
    for op in trace:
        p = op.position
        if op.op == "substitute":
            work[p] = op.symbols[1]
        elif op.op == "delete":
            del work[p]
        elif op.op == "insert":
            work.insert(p, op.symbols[0])
        elif op.op == "transpose":
            work[p], work[p + 1] = work[p + 1], work[p]
        else:
            raise ValueError(f"unknown op {op.op!r}")
    return work


# backpointer op priority at equal cost: substitution > transposition >
# deletion > insertion (fixed order so traces are deterministic)
_PRIO = {"sub": 0, "trans": 1, "del": 2, "ins": 3}


def _edit_dp(a: list[str], b: list[str], weights: OperationWeights, sub_frac):
    """Weighted unrestricted-transposition edit distance with backpointers.

    ``sub_frac(x, y)`` returns the substitution cost multiplier in [0, 1].
    Returns (raw_distance, trace).
    """
    n, m = len(a), len(b)
    wi, wd, ws, wt = (
        weights.insertion,
        weights.deletion,
        weights.substitution,
        weights.transposition,
    )
    d = [[0.0] * (m + 1) for _ in range(n + 1)]
    bp: list[list[tuple]] = [[("start",)] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        d[i][0] = i * wd
        bp[i][0] = ("del",)
    for j in range(1, m + 1):
        d[0][j] = j * wi
        bp[0][j] = ("ins",)

    last_row: dict[str, int] = {}  # symbol -> last row index i where a[i-1] == symbol
    for i in range(1, n + 1):
        last_col = 0  # last j in this row with b[j-1] == a[i-1]
        for j in range(1, m + 1):
            if a[i - 1] == b[j - 1]:
                cands = [("sub", d[i - 1][j - 1] + 0.0)]
            else:
                cands = [("sub", d[i - 1][j - 1] + ws * sub_frac(a[i - 1], b[j - 1]))]
            i1 = last_row.get(b[j - 1], 0)
            j1 = last_col
            if i1 > 0 and j1 > 0:
                cost = (
                    d[i1 - 1][j1 - 1]
                    + (i - i1 - 1) * wd
                    + wt
                    + (j - j1 - 1) * wi
                )
                cands.append(("trans", cost, i1, j1))
            cands.append(("del", d[i - 1][j] + wd))
            cands.append(("ins", d[i][j - 1] + wi))
            best = min(cands, key=lambda c: (c[1], _PRIO[c[0]]))
            d[i][j] = best[1]
            bp[i][j] = best
            if a[i - 1] == b[j - 1]:
                last_col = j
        last_row[a[i - 1]] = i

    # backtrack to (0, 0), collecting cells in reverse application order
    cells = []
    i, j = n, m
    while i > 0 or j > 0:
        entry = bp[i][j]
        kind = entry[0]
        cells.append((kind, i, j, entry))
        if kind == "sub":
            i, j = i - 1, j - 1
        elif kind == "del":
            i, j = i - 1, j
        elif kind == "ins":
            i, j = i, j - 1
        else:  # trans
            i, j = entry[2] - 1, entry[3] - 1
    cells.reverse()

    # forward pass: convert DP cells into ops positioned in the evolving string
    trace: list[EditOp] = []
    shift = 0
    for kind, i, j, entry in cells:
        if kind == "sub":
            if a[i - 1] != b[j - 1]:
                trace.append(
                    EditOp(
                        "substitute",
                        i - 1 + shift,
                        (a[i - 1], b[j - 1]),
                        ws * sub_frac(a[i - 1], b[j - 1]),
                    )
                )
        elif kind == "del":
            trace.append(EditOp("delete", i - 1 + shift, (a[i - 1],), wd))
            shift -= 1
        elif kind == "ins":
            trace.append(EditOp("insert", i + shift, (b[j - 1],), wi))
            shift += 1
        else:  # trans block: delete middles, swap endpoints, insert middles
            i1, j1 = entry[2], entry[3]
            # first endpoint's position is fixed before the middle deletions
            # (those all happen at higher indices)
            pos = i1 - 1 + shift
            for t in range(i1, i - 1):
                trace.append(EditOp("delete", t + shift, (a[t],), wd))
                shift -= 1
            trace.append(EditOp("transpose", pos, (a[i1 - 1], a[i - 1]), wt))
            for r, t in enumerate(range(j1, j - 1)):
                trace.append(EditOp("insert", pos + 1 + r, (b[t],), wi))
                shift += 1

    raw = d[n][m]
    return raw, tuple(trace)


def _unit_frac(x: str, y: str) -> float:
    return 0.0 if x == y else 1.0


def _score(
    item_id: str,
    target_syms: list[str],
    response_syms: list[str],
    target_repr: str,
    response_repr: str,
    weights: OperationWeights,
    sub_frac,
) -> ScoreRecord:
    raw, trace = _edit_dp(target_syms, response_syms, weights, sub_frac)
    denom = max(len(target_syms), len(response_syms))
    normalized = raw / denom if denom else 0.0
    return ScoreRecord(
        item_id=item_id,
        target=target_repr,
        response=response_repr,
        raw_distance=raw,
        normalized_distance=normalized,
        score=1.0 - normalized,
        op_trace=trace,
    )


def spelling_distance(
    target: str,
    response: str,
    weights: OperationWeights = OperationWeights(),
    item_id: str = "",
) -> ScoreRecord:
    """Letter-level edit distance between a target word and a response."""
    if not target:
        raise EmptyTargetError("target must be non-empty")
    return _score(
        item_id, list(target), list(response), target, response, weights, _unit_frac
    )


class FeatureTable:
    """Binary distinctive-feature vectors per IPA segment."""

    def __init__(self, segments: dict[str, tuple[int, ...]]):
        lengths = {len(v) for v in segments.values()}
        if lengths and lengths != {len(FEATURES)}:
            raise MalformedResourceError(
                f"feature vectors must have {len(FEATURES)} components"
            )
        self.segments = dict(segments)
        # longest-first for greedy IPA string parsing
        self._ordered = sorted(segments, key=len, reverse=True)

    @classmethod
    def load(cls, path: Path | str = DEFAULT_FEATURE_TABLE) -> "FeatureTable":
        segments = {}
        for lineno, line in enumerate(
            Path(path).read_text(encoding="utf-8").splitlines(), 1
        ):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if parts[0] == "segment":
                if parts[1:] != list(FEATURES):
                    raise MalformedResourceError(
                        f"{path}:{lineno}: feature header mismatch"
                    )
                continue
            if len(parts) != len(FEATURES) + 1:
                raise MalformedResourceError(
                    f"{path}:{lineno}: expected {len(FEATURES) + 1} columns"
                )
            seg = parts[0]
            if seg in segments:
                raise MalformedResourceError(f"{path}:{lineno}: duplicate segment {seg}")
            try:
                vec = tuple(int(v) for v in parts[1:])
            except ValueError:
                raise MalformedResourceError(f"{path}:{lineno}: non-integer feature")
            if any(v not in (0, 1) for v in vec):
                raise MalformedResourceError(f"{path}:{lineno}: features must be 0/1")
            segments[seg] = vec
        return cls(segments)

    def distance_fraction(self, s1: str, s2: str) -> float:
        """Hamming distance between feature vectors / feature count."""
        for s in (s1, s2):
            if s not in self.segments:
                raise UnknownSegmentError(
                    f"segment {s!r} not in feature table", detail={"segment": s}
                )
        v1, v2 = self.segments[s1], self.segments[s2]
        return sum(x != y for x, y in zip(v1, v2)) / len(FEATURES)

    def parse_segments(self, flat: str) -> list[str]:
        """Greedy longest-match split of a flat IPA string into segments."""
        out = []
        i = 0
        while i < len(flat):
            if flat[i] in "ˈˌ ./":  # stress and delimiters carry no features
                i += 1
                continue
            for seg in self._ordered:
                if flat.startswith(seg, i):
                    out.append(seg)
                    i += len(seg)
                    break
            else:
                raise UnknownSegmentError(
                    f"no inventory segment matches {flat[i:]!r}",
                    detail={"segment": flat[i]},
                )
        return out


def phonological_distance(
    target_segments,
    response_segments,
    table: FeatureTable,
    weights: OperationWeights = OperationWeights(),
    item_id: str = "",
) -> ScoreRecord:
    """Segment-level distance with feature-weighted substitution cost.

    Accepts flat IPA strings or pre-split segment lists.
    """
    if isinstance(target_segments, str):
        target_segments = table.parse_segments(target_segments)
    if isinstance(response_segments, str):
        response_segments = table.parse_segments(response_segments)
    if not target_segments:
        raise EmptyTargetError("target must contain at least one segment")
    for seg in list(target_segments) + list(response_segments):
        if seg not in table.segments:
            raise UnknownSegmentError(
                f"segment {seg!r} not in feature table", detail={"segment": seg}
            )
    return _score(
        item_id,
        list(target_segments),
        list(response_segments),
        "".join(target_segments),
        "".join(response_segments),
        weights,
        table.distance_fraction,
    )


@dataclass(frozen=True)
class NamingScore:
    target: str
    response: str
    similarity: float
    target_in_vocabulary: bool = True
    response_in_vocabulary: bool = True


def score_naming_response(target: str, response: str, table) -> NamingScore:
    """Embedding-based naming-test score (cosine similarity)."""
    from .lexsem import semantic_distance

    sim = semantic_distance(target, response, table)
    return NamingScore(target=target, response=response, similarity=sim)


_BATCH_HEADER = ["item_id", "target", "response"]
_OUT_HEADER = [
    "item_id",
    "target",
    "response",
    "raw_distance",
    "normalized_distance",
    "score",
    "trace",
    "error",
]


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def score_batch(
    stream,
    mode: str,
    weights: OperationWeights = OperationWeights(),
    feature_table: FeatureTable | None = None,
    embeddings=None,
    g2p=None,
) -> str:
    """Score a CSV of test items; returns the scored CSV as a string.

    ``mode`` is spelling | phonological | semantic.  Rows with errors are
    emitted with the error column set; processing continues.  Output order
    equals input order.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise MalformedHeaderError("empty CSV input")
    if [h.strip() for h in header] != _BATCH_HEADER:
        raise MalformedHeaderError(
            f"expected header {','.join(_BATCH_HEADER)}, got {','.join(header)}"
        )
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(_OUT_HEADER)
    for row in reader:
        if not row:
            continue
        if len(row) != 3:
            writer.writerow(["", "", "", "", "", "", "", "malformed-row"])
            continue
        item_id, target, response = row
        try:
            if mode == "spelling":
                rec = spelling_distance(target, response, weights, item_id=item_id)
            elif mode == "phonological":
                if g2p is not None:
                    target, response = g2p(target), g2p(response)
                rec = phonological_distance(
                    target, response, feature_table, weights, item_id=item_id
                )
            elif mode == "semantic":
                ns = score_naming_response(target, response, embeddings)
                writer.writerow(
                    [item_id, target, response, "", "", _fmt(ns.similarity), "", ""]
                )
                continue
            else:
                raise ValueError(f"unknown mode {mode!r}")
            writer.writerow(
                [
                    rec.item_id,
                    rec.target,
                    rec.response,
                    _fmt(rec.raw_distance),
                    _fmt(rec.normalized_distance),
                    _fmt(rec.score),
                    rec.trace_codes(),
                    "",
                ]
            )
        except Exception as e:
            code = getattr(e, "code", "malformed-row")
            writer.writerow([item_id, target, response, "", "", "", "", code])
    return out.getvalue()
