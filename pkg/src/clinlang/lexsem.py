"""Lexical diversity measures, word embeddings, and entity counts.

Types are computed over normalized (lowercased) word forms; number tokens
count toward word totals but never toward types.  MATTR is the mean TTR
over all contiguous windows of the configured size, falling back to plain
TTR for documents shorter than one window.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    DegenerateVectorError,
    DimensionMismatchError,
    DuplicateWordError,
    InvalidWindowError,
    MalformedHeaderError,
    OutOfVocabularyError,
    ZeroWordsError,
)
from .textcore import Document, LanguagePack, TokenKind

DEFAULT_MATTR_WINDOW = 50


@dataclass(frozen=True)
class LexicalMeasures:
    word_count: int
    type_count: int
    ttr: float
    hapax_count: int
    hapax_ratio: float
    mattr: float
    mattr_window: int

    def to_dict(self) -> dict:
        return {
            "word_count": self.word_count,
            "type_count": self.type_count,
            "ttr": self.ttr,
            "hapax_count": self.hapax_count,
            "hapax_ratio": self.hapax_ratio,
            "mattr": self.mattr,
            "mattr_window": self.mattr_window,
        }


def _window_ttr(forms: list[str | None], start: int, size: int) -> float:
    # None marks a number token: counted in the window size, not as a type
    distinct = {f for f in forms[start : start + size] if f is not None}
    return len(distinct) / size


def lexical_measures(
    doc: Document, mattr_window: int = DEFAULT_MATTR_WINDOW
) -> LexicalMeasures:
    if mattr_window < 1:
        raise InvalidWindowError(f"window must be >= 1, got {mattr_window}")
    forms: list[str | None] = []
    for tok in doc.tokens:
        if tok.kind is TokenKind.WORD:
            forms.append(tok.normalized)
        elif tok.kind is TokenKind.NUMBER:
            forms.append(None)
    word_count = len(forms)
    if word_count == 0:
        raise ZeroWordsError("document contains no word tokens")
    counts = Counter(f for f in forms if f is not None)
    type_count = len(counts)
    hapax = sum(1 for c in counts.values() if c == 1)
    ttr = type_count / word_count
    if word_count < mattr_window:
        mattr = ttr
    else:
        n_windows = word_count - mattr_window + 1
        mattr = (
            sum(_window_ttr(forms, s, mattr_window) for s in range(n_windows))
            / n_windows
        )
    return LexicalMeasures(
        word_count=word_count,
        type_count=type_count,
        ttr=ttr,
        hapax_count=hapax,
        hapax_ratio=hapax / word_count,
        mattr=mattr,
        mattr_window=mattr_window,
    )


class EmbeddingTable:
    """Immutable word -> vector store loaded from text word-vector format."""

    def __init__(self, dimension: int, vectors: dict[str, np.ndarray]):
        self.dimension = dimension
        self.vectors = vectors

    @property
    def vocabulary_size(self) -> int:
        return len(self.vectors)

    def __contains__(self, word: str) -> bool:
        return word in self.vectors


def load_embeddings(path: Path | str) -> EmbeddingTable:
    """Parse the 'V D' header + 'word v1 ... vD' line format."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines:
        raise MalformedHeaderError(f"{path}: empty embedding file")
    header = lines[0].split()
    if len(header) != 2 or not all(p.isdigit() for p in header):
        raise MalformedHeaderError(f"{path}:1: expected header 'V D'")
    vocab_size, dim = int(header[0]), int(header[1])
    vectors: dict[str, np.ndarray] = {}
    for lineno, line in enumerate(lines[1:], 2):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != dim + 1:
            raise DimensionMismatchError(
                f"{path}:{lineno}: expected {dim} components, got {len(parts) - 1}"
            )
        word = parts[0]
        if word in vectors:
            raise DuplicateWordError(f"{path}:{lineno}: duplicate word {word!r}")
        try:
            vec = np.array([float(x) for x in parts[1:]], dtype=np.float64)
        except ValueError:
            raise DimensionMismatchError(f"{path}:{lineno}: non-numeric component")
        vectors[word] = vec
    if len(vectors) != vocab_size:
        raise MalformedHeaderError(
            f"{path}: header declares {vocab_size} entries, found {len(vectors)}"
        )
    return EmbeddingTable(dimension=dim, vectors=vectors)


def semantic_distance(w1: str, w2: str, table: EmbeddingTable) -> float:
    """Cosine similarity of two in-vocabulary words, in [-1, 1]."""
    for w in (w1, w2):
        if w not in table.vectors:
            raise OutOfVocabularyError(
                f"word {w!r} not in embedding table", detail={"word": w}
            )
    v1, v2 = table.vectors[w1], table.vectors[w2]
    n1, n2 = float(np.linalg.norm(v1)), float(np.linalg.norm(v2))
    if n1 == 0.0 or n2 == 0.0:
        zero = w1 if n1 == 0.0 else w2
        raise DegenerateVectorError(
            f"word {zero!r} has a zero vector", detail={"word": zero}
        )
    return float(np.dot(v1, v2) / (n1 * n2))


ENTITY_CLASSES = ("person", "location", "date")


@dataclass(frozen=True)
class SemanticMeasures:
    counts: dict[str, int]
    ratios: dict[str, float]
    entity_spans: tuple[tuple[str, tuple[int, int]], ...]

    def to_dict(self) -> dict:
        return {
            "counts": dict(sorted(self.counts.items())),
            "ratios": dict(sorted(self.ratios.items())),
            "entity_count": len(self.entity_spans),
        }


def parse_date_patterns(path: Path | str) -> tuple[re.Pattern, ...]:
    patterns = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            patterns.append(re.compile(line))
    return tuple(patterns)


def _gazetteer_match(
    tokens, i: int, entries: frozenset[str]
) -> int:
    """Longest entry (in tokens) matching at position i; 0 when none."""
    best = 0
    # entries may be multiword; match against joined surfaces
    for span in range(min(3, len(tokens) - i), 0, -1):
        candidate = " ".join(t.surface for t in tokens[i : i + span])
        if candidate in entries:
            best = span
            break
    return best


def ner_counts(doc: Document, pack: LanguagePack) -> SemanticMeasures:
    """Gazetteer/pattern entity spans: persons, locations, dates."""
    tokens = doc.tokens
    spans: list[tuple[str, tuple[int, int]]] = []
    i = 0
    persons = pack.gazetteers.get("person", frozenset())
    locations = pack.gazetteers.get("location", frozenset())
    while i < len(tokens):
        n = _gazetteer_match(tokens, i, persons)
        if n:
            spans.append(("person", (i, i + n)))
            i += n
            continue
        n = _gazetteer_match(tokens, i, locations)
        if n:
            spans.append(("location", (i, i + n)))
            i += n
            continue
        if any(p.fullmatch(tokens[i].surface) for p in pack.date_patterns):
            spans.append(("date", (i, i + 1)))
        i += 1
    counts = {c: 0 for c in ENTITY_CLASSES}
    for cls, _ in spans:
        counts[cls] += 1
    total_words = max(len(doc.word_tokens()), 1)
    ratios = {c: counts[c] / total_words for c in ENTITY_CLASSES}
    return SemanticMeasures(
        counts=counts, ratios=ratios, entity_spans=tuple(spans)
    )
