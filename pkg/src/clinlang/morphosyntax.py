"""POS tagging, phrase chunking, and the morphology/syntax measure block.

The tagger is an averaged perceptron over a 16-tag universal-style tagset.
Training is deterministic given a seed (fixed shuffle order) and models
round-trip losslessly through a sorted plain-text weight dump.  Chunking
applies the pack's regular patterns over tag sequences, longest match,
left to right, never crossing sentence boundaries.
"""

from __future__ import annotations

import random
import re
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    CapabilityError,
    EmptyCorpusError,
    MalformedResourceError,
    UnknownTagError,
    ZeroWordDocumentError,
)
from .textcore import Document, LanguagePack, Token, TokenKind

TAGSET = (
    "NOUN", "VERB", "AUX", "ADJ", "ADV", "PRON", "DET", "ADP",
    "CCONJ", "SCONJ", "PART", "NUM", "INTJ", "PROPN", "PUNCT", "X",
)

CONTENT_TAGS = frozenset({"NOUN", "PROPN", "VERB", "ADJ", "ADV"})
FUNCTION_TAGS = frozenset({"CCONJ", "SCONJ", "ADP", "DET", "PRON", "AUX", "PART"})

MODEL_FORMAT_VERSION = "1"


def classify_lexical_class(tag: str) -> str:
    """content | function | other, total over the tagset."""
    if tag not in TAGSET:
        raise UnknownTagError(f"unknown tag {tag!r}")
    if tag in CONTENT_TAGS:
        return "content"
    if tag in FUNCTION_TAGS:
        return "function"
    return "other"


def _features(words: list[str], i: int, prev: str, prev2: str) -> list[str]:
    w = words[i]
    low = w.lower()
    feats = [
        "bias",
        f"w={w}",
        f"lw={low}",
        f"sfx1={low[-1:]}",
        f"sfx2={low[-2:]}",
        f"sfx3={low[-3:]}",
        f"pfx1={low[:1]}",
        f"t-1={prev}",
        f"t-2-1={prev2}|{prev}",
    ]
    if w[:1].isupper():
        feats.append("cap")
    if w.isdigit():
        feats.append("digit")
    return feats


@dataclass(frozen=True)
class TaggerModel:
    weights: dict  # feature -> {tag: weight}
    version: str = MODEL_FORMAT_VERSION

    def predict(self, words: list[str], i: int, prev: str, prev2: str) -> str:
        scores = {t: 0.0 for t in TAGSET}
        for f in _features(words, i, prev, prev2):
            for tag, w in self.weights.get(f, {}).items():
                scores[tag] += w
        # deterministic tie-break: tagset order
        return max(TAGSET, key=lambda t: scores[t])

    def tag_sentence(self, words: list[str]) -> list[str]:
        prev, prev2 = "-START-", "-START2-"
        tags = []
        for i in range(len(words)):
            tag = self.predict(words, i, prev, prev2)
            tags.append(tag)
            prev2, prev = prev, tag
        return tags

    def dump(self) -> str:
        lines = [f"version\t{self.version}"]
        for feat in sorted(self.weights):
            for tag in sorted(self.weights[feat]):
                w = self.weights[feat][tag]
                if w != 0.0:
                    lines.append(f"{feat}\t{tag}\t{w!r}")
        return "\n".join(lines) + "\n"

    def save(self, path: Path | str) -> None:
        Path(path).write_text(self.dump(), encoding="utf-8")


_MODEL_CACHE: dict[str, TaggerModel] = {}


def load_tagger(path: Path | str) -> TaggerModel:
    key = str(Path(path).resolve())
    if key in _MODEL_CACHE:
        return _MODEL_CACHE[key]
    weights: dict = defaultdict(dict)
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or not lines[0].startswith("version\t"):
        raise MalformedResourceError(f"{path}:1: missing version header")
    version = lines[0].split("\t")[1]
    for lineno, line in enumerate(lines[1:], 2):
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise MalformedResourceError(f"{path}:{lineno}: expected 3 columns")
        feat, tag, w = parts
        if tag not in TAGSET:
            raise MalformedResourceError(f"{path}:{lineno}: unknown tag {tag!r}")
        try:
            weights[feat][tag] = float(w)
        except ValueError:
            raise MalformedResourceError(f"{path}:{lineno}: bad weight {w!r}")
    model = TaggerModel(weights=dict(weights), version=version)
    _MODEL_CACHE[key] = model
    return model


def parse_corpus(text: str, source: str = "<corpus>") -> list[list[tuple[str, str]]]:
    """Column format: 'surface<TAB>tag' lines, blank line between sentences."""
    sentences: list[list[tuple[str, str]]] = []
    current: list[tuple[str, str]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            if current:
                sentences.append(current)
                current = []
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise MalformedResourceError(
                f"{source}:{lineno}: expected 'surface<TAB>tag'"
            )
        word, tag = parts
        if tag not in TAGSET:
            raise UnknownTagError(
                f"{source}:{lineno}: tag {tag!r} not in tagset",
                detail={"tag": tag},
            )
        current.append((word, tag))
    if current:
        sentences.append(current)
    return sentences


def train_tagger(
    corpus: str | list, epochs: int = 5, seed: int = 0
) -> TaggerModel:
    """Train an averaged perceptron; deterministic given the seed."""
    if isinstance(corpus, str):
        sentences = parse_corpus(corpus)
    else:
        sentences = list(corpus)
        for sent in sentences:
            for _, tag in sent:
                if tag not in TAGSET:
                    raise UnknownTagError(f"tag {tag!r} not in tagset")
    if not sentences:
        raise EmptyCorpusError("training corpus is empty")
    if epochs < 1:
        raise ValueError("epochs must be positive")

    weights: dict = defaultdict(lambda: defaultdict(float))
    totals: dict = defaultdict(lambda: defaultdict(float))
    stamps: dict = defaultdict(lambda: defaultdict(int))
    rng = random.Random(seed)
    instance = 0

    def upd(feat: str, tag: str, delta: float) -> None:
        totals[feat][tag] += (instance - stamps[feat][tag]) * weights[feat][tag]
        stamps[feat][tag] = instance
        weights[feat][tag] += delta

    order = list(range(len(sentences)))
    for _ in range(epochs):
        rng.shuffle(order)
        for si in order:
            sent = sentences[si]
            words = [w for w, _ in sent]
            prev, prev2 = "-START-", "-START2-"
            for i, (_, gold) in enumerate(sent):
                instance += 1
                feats = _features(words, i, prev, prev2)
                scores = {t: 0.0 for t in TAGSET}
                for f in feats:
                    if f in weights:
                        for tag, w in weights[f].items():
                            scores[tag] += w
                guess = max(TAGSET, key=lambda t: scores[t])
                if guess != gold:
                    for f in feats:
                        upd(f, gold, 1.0)
                        upd(f, guess, -1.0)
                prev2, prev = prev, gold
    # final averaging pass
    averaged: dict = {}
    for feat, tags in weights.items():
        out = {}
        for tag, w in tags.items():
            total = totals[feat][tag] + (instance - stamps[feat][tag]) * w
            avg = total / instance
            if avg != 0.0:
                out[tag] = avg
        if out:
            averaged[feat] = out
    return TaggerModel(weights=averaged)


@dataclass(frozen=True)
class Chunk:
    label: str  # NP | VP
    sentence: int
    token_range: tuple[int, int]  # document token indices, end exclusive


@dataclass(frozen=True)
class ChunkRule:
    label: str
    regex: re.Pattern


_TAG_CHARS = {t: chr(ord("A") + i) for i, t in enumerate(TAGSET)}


def _pattern_to_regex(pattern: str, source: str) -> re.Pattern:
    out = []
    for tok in re.findall(r"[A-Z]+|\(|\)|\||\?|\*|\+", pattern):
        if tok == "(":
            out.append("(?:")
        elif tok in (")", "|", "?", "*", "+"):
            out.append(tok)
        elif tok in _TAG_CHARS:
            out.append(_TAG_CHARS[tok])
        else:
            raise MalformedResourceError(f"{source}: unknown tag {tok!r} in pattern")
    return re.compile("".join(out))


def parse_chunk_grammar(path: Path | str) -> tuple[ChunkRule, ...]:
    rules = []
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), 1
    ):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise MalformedResourceError(f"{path}:{lineno}: expected 'LABEL: pattern'")
        label, _, pattern = line.partition(":")
        rules.append(
            ChunkRule(label.strip(), _pattern_to_regex(pattern, f"{path}:{lineno}"))
        )
    return tuple(rules)


@dataclass(frozen=True)
class AnnotatedDocument:
    document: Document
    tags: tuple[str, ...]  # one per token
    chunks: tuple[Chunk, ...]


def _tag_for_token(tok: Token, predicted: str | None) -> str:
    if tok.kind is TokenKind.PUNCTUATION:
        return "PUNCT"
    if tok.kind is TokenKind.NUMBER:
        return "NUM"
    if tok.kind is TokenKind.FILLER:
        return "INTJ"
    return predicted or "X"


def chunk_tags(tags: list[str], rules: tuple[ChunkRule, ...]) -> list[tuple[str, int, int]]:
    """Longest-match left-to-right chunking of one sentence's tag list."""
    encoded = "".join(_TAG_CHARS[t] for t in tags)
    chunks = []
    pos = 0
    while pos < len(encoded):
        best = None
        for rule in rules:
            m = rule.regex.match(encoded, pos)
            if m and m.end() > m.start():
                if best is None or m.end() > best[1]:
                    best = (rule.label, m.end())
        if best:
            chunks.append((best[0], pos, best[1]))
            pos = best[1]
        else:
            pos += 1
    return chunks


def tag_and_chunk(
    doc: Document, model: TaggerModel, pack: LanguagePack
) -> AnnotatedDocument:
    """Tag every token and chunk every sentence with the pack's grammar."""
    if not pack.is_full:
        raise CapabilityError(
            f"pack {pack.id!r} is partial tier: grammar analysis unavailable"
        )
    tags: list[str] = ["X"] * len(doc.tokens)
    chunks: list[Chunk] = []
    for si, (start, end) in enumerate(doc.sentences):
        sent = doc.tokens[start:end]
        word_idx = [
            i for i, t in enumerate(sent) if t.kind in (TokenKind.WORD,)
        ]
        words = [sent[i].surface for i in word_idx]
        predicted = model.tag_sentence(words) if words else []
        pred_map = dict(zip(word_idx, predicted))
        for i, tok in enumerate(sent):
            tags[start + i] = _tag_for_token(tok, pred_map.get(i))
        for label, cs, ce in chunk_tags(tags[start:end], pack.chunk_grammar):
            chunks.append(Chunk(label, si, (start + cs, start + ce)))
    return AnnotatedDocument(document=doc, tags=tuple(tags), chunks=tuple(chunks))


@dataclass(frozen=True)
class MorphoSyntaxMeasures:
    tag_counts: dict[str, int]
    tag_ratios: dict[str, float]
    content_word_count: int
    function_word_count: int
    other_word_count: int
    content_function_ratio: float
    np_count: int
    vp_count: int
    np_ratio: float
    vp_ratio: float
    mean_sentence_length_tokens: float

    def to_dict(self) -> dict:
        return {
            "tag_counts": dict(sorted(self.tag_counts.items())),
            "tag_ratios": dict(sorted(self.tag_ratios.items())),
            "content_word_count": self.content_word_count,
            "function_word_count": self.function_word_count,
            "other_word_count": self.other_word_count,
            "content_function_ratio": self.content_function_ratio,
            "np_count": self.np_count,
            "vp_count": self.vp_count,
            "np_ratio": self.np_ratio,
            "vp_ratio": self.vp_ratio,
            "mean_sentence_length_tokens": self.mean_sentence_length_tokens,
        }


def morphosyntax_measures(annotated: AnnotatedDocument) -> MorphoSyntaxMeasures:
    """Counts and per-word ratios of tags, lexical classes, and chunks."""
    doc = annotated.document
    word_tags = [
        t for t in annotated.tags if t != "PUNCT"
    ]
    total_words = len(word_tags)
    if total_words == 0:
        raise ZeroWordDocumentError("document contains no word tokens")
    counts = {t: 0 for t in TAGSET if t != "PUNCT"}
    for t in word_tags:
        counts[t] += 1
    ratios = {t: c / total_words for t, c in counts.items()}
    content = sum(counts[t] for t in CONTENT_TAGS)
    function = sum(counts[t] for t in FUNCTION_TAGS)
    other = total_words - content - function
    np_count = sum(1 for c in annotated.chunks if c.label == "NP")
    vp_count = sum(1 for c in annotated.chunks if c.label == "VP")
    return MorphoSyntaxMeasures(
        tag_counts=counts,
        tag_ratios=ratios,
        content_word_count=content,
        function_word_count=function,
        other_word_count=other,
        content_function_ratio=content / function if function else float(content),
        np_count=np_count,
        vp_count=vp_count,
        np_ratio=np_count / total_words,
        vp_ratio=vp_count / total_words,
        mean_sentence_length_tokens=len(doc.tokens) / len(doc.sentences)
        if doc.sentences
        else 0.0,
    )
