"""Readability measures and assembly of the assessment report.

Reports serialize to canonical JSON: keys sorted, every float rendered with
exactly six decimals, timestamps injected by the caller.  Identical inputs
therefore always produce byte-identical output, which the golden tests and
the CLI/HTTP equivalence contract rely on.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .errors import NoBlocksError, ZeroWordsError
from .phonlex import syllable_count
from .textcore import Document, LanguagePack, TokenKind

TOOLKIT_VERSION = "0.1.0"

# standard published constants for the two shipped readability formulas
FLESCH = (206.835, 1.015, 84.6)
KINCAID = (0.39, 11.8, 15.59)


@dataclass(frozen=True)
class ReadabilityMeasures:
    flesch_reading_ease: float
    flesch_kincaid_grade: float
    mean_sentence_length_words: float
    mean_syllables_per_word: float

    def to_dict(self) -> dict:
        return {
            "flesch_reading_ease": self.flesch_reading_ease,
            "flesch_kincaid_grade": self.flesch_kincaid_grade,
            "mean_sentence_length_words": self.mean_sentence_length_words,
            "mean_syllables_per_word": self.mean_syllables_per_word,
        }


def readability_measures(doc: Document, pack: LanguagePack) -> ReadabilityMeasures:
    words = [t for t in doc.tokens if t.kind in (TokenKind.WORD, TokenKind.NUMBER)]
    if not words or not doc.sentences:
        raise ZeroWordsError("readability requires at least one word and sentence")
    n_words = len(words)
    n_sentences = len(doc.sentences)
    n_syllables = sum(
        syllable_count(t.normalized, pack)
        for t in words
        if t.kind is TokenKind.WORD
    )
    # numbers contribute one syllable each
    n_syllables += sum(1 for t in words if t.kind is TokenKind.NUMBER)
    wps = n_words / n_sentences
    spw = n_syllables / n_words
    return ReadabilityMeasures(
        flesch_reading_ease=FLESCH[0] - FLESCH[1] * wps - FLESCH[2] * spw,
        flesch_kincaid_grade=KINCAID[0] * wps + KINCAID[1] * spw - KINCAID[2],
        mean_sentence_length_words=wps,
        mean_syllables_per_word=spw,
    )


def canonical_json(obj, indent: int = 0) -> str:
    """Deterministic JSON: sorted keys, floats with exactly 6 decimals."""
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return f"{obj:.6f}"
    if isinstance(obj, str):
        import json

        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(canonical_json(v) for v in obj) + "]"
    if isinstance(obj, dict):
        items = []
        for k in sorted(obj):
            items.append(canonical_json(str(k)) + ":" + canonical_json(obj[k]))
        return "{" + ",".join(items) + "}"
    raise TypeError(f"cannot canonicalize {type(obj).__name__}")


BLOCK_NAMES = (
    "phonology",
    "morphosyntax",
    "lexical",
    "semantic",
    "readability",
    "acoustic",
    "discourse",
)


@dataclass(frozen=True)
class AssessmentReport:
    meta: dict
    blocks: dict
    warnings: tuple[str, ...] = ()
    norms: None = None  # reserved; no normative data ships with the toolkit

    def to_dict(self) -> dict:
        return {
            "meta": self.meta,
            "blocks": self.blocks,
            "warnings": list(self.warnings),
            "norms": self.norms,
        }


def assemble_report(
    blocks: dict,
    language: str,
    options: dict | None = None,
    warnings: list[str] | None = None,
    timestamp: str = "1970-01-01T00:00:00Z",
) -> AssessmentReport:
    """Build the canonical report; absent optional blocks stay absent."""
    present = {k: v for k, v in blocks.items() if v is not None}
    if not present:
        raise NoBlocksError("at least one measure block is required")
    unknown = set(present) - set(BLOCK_NAMES)
    if unknown:
        raise ValueError(f"unknown blocks: {sorted(unknown)}")
    meta = {
        "language": language,
        "toolkit_version": TOOLKIT_VERSION,
        "options": options or {},
        "timestamp": timestamp,
    }
    return AssessmentReport(
        meta=meta, blocks=present, warnings=tuple(warnings or ())
    )


def _flatten(prefix: str, obj, rows: list[tuple[str, str]]) -> None:
    if isinstance(obj, dict):
        for k in sorted(obj):
            _flatten(f"{prefix}.{k}" if prefix else str(k), obj[k], rows)
    elif isinstance(obj, (list, tuple)):
        for i, v in enumerate(obj):
            _flatten(f"{prefix}.{i}", v, rows)
    elif isinstance(obj, float):
        rows.append((prefix, f"{obj:.6f}"))
    elif obj is None:
        rows.append((prefix, ""))
    else:
        rows.append((prefix, str(obj)))


def serialize_report(report: AssessmentReport, fmt: str = "json") -> bytes:
    """Canonical JSON, or a flat 'block.measure,value' CSV."""
    data = report.to_dict()
    if fmt == "json":
        return (canonical_json(data) + "\n").encode("utf-8")
    if fmt == "csv":
        rows: list[tuple[str, str]] = []
        _flatten("", data, rows)
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["measure", "value"])
        writer.writerows(rows)
        return out.getvalue().encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}")
