"""Language packs, tokenization, sentence segmentation, and filler handling.

A :class:`LanguagePack` bundles every per-language resource (filler lexicon,
tokenizer rules, tagger model, chunk grammar, G2P tables, gazetteers, ...).
Packs are immutable after loading and safe to share between threads.
Tokenization is rule based and fully deterministic: the same text and pack
always produce the same :class:`Document`.
"""

from __future__ import annotations

import json
import re
import unicodedata
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path

from .errors import (
    EmptyInputError,
    MalformedResourceError,
    UnknownLanguageError,
)

DEFAULT_REGISTRY = Path(__file__).parent / "data" / "packs"


class TokenKind(str, Enum):
    WORD = "word"
    PUNCTUATION = "punctuation"
    FILLER = "filler"
    NUMBER = "number"


@dataclass(frozen=True)
class Token:
    surface: str
    normalized: str
    char_span: tuple[int, int]
    kind: TokenKind


@dataclass(frozen=True)
class Document:
    language: str
    text: str
    tokens: tuple[Token, ...]
    sentences: tuple[tuple[int, int], ...]  # token-index ranges, end exclusive
    fillers_removed: int = 0
    keep_fillers: bool = True

    def word_tokens(self) -> list[Token]:
        return [t for t in self.tokens if t.kind in (TokenKind.WORD, TokenKind.NUMBER)]

    def sentence_tokens(self, i: int) -> tuple[Token, ...]:
        start, end = self.sentences[i]
        return self.tokens[start:end]


@dataclass(frozen=True)
class LanguagePack:
    """Immutable bundle of per-language resources.

    ``tier`` is ``"full"`` when the pack supports grammar analysis (tagging,
    chunking) and ``"partial"`` when only IPA conversion and clinical scoring
    are available.
    """

    id: str
    name: str
    tier: str
    filler_lexicon: frozenset[str]
    abbreviations: frozenset[str]
    clitic_suffixes: tuple[str, ...]
    root: Path
    resource_paths: dict = field(default_factory=dict)
    # parsed heavyweight resources, populated by load_language_pack
    g2p_lexicon: dict = field(default_factory=dict)
    g2p_rules: tuple = ()
    onsets: frozenset = frozenset()
    nuclei: frozenset = frozenset()
    chunk_grammar: tuple = ()
    gazetteers: dict = field(default_factory=dict)
    date_patterns: tuple = ()
    prompt_template: str | None = None
    prompt_template_version: str | None = None
    tagger_model_path: Path | None = None
    embeddings_path: Path | None = None

    @property
    def is_full(self) -> bool:
        return self.tier == "full"


FULL_TIER_RESOURCES = ("tagger_model", "chunk_grammar", "g2p_lexicon", "g2p_rules")


def _read_lines(path: Path) -> list[str]:
    try:
        raw = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise MalformedResourceError(f"missing resource file: {path}")
    return raw.splitlines()


def _read_wordlist(path: Path) -> list[str]:
    out = []
    for line in _read_lines(path):
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def list_languages(registry_path: Path | str | None = None) -> list[dict]:
    """Return the manifest entries (id, name, tier) of every pack."""
    registry = Path(registry_path or DEFAULT_REGISTRY)
    manifest = registry / "registry.json"
    if not manifest.exists():
        raise MalformedResourceError(f"registry manifest not found: {manifest}")
    try:
        data = json.loads(manifest.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise MalformedResourceError(f"malformed manifest {manifest}: {e}")
    return [
        {"id": p["id"], "name": p["name"], "tier": p["tier"]} for p in data["packs"]
    ]


def load_language_pack(
    lang_id: str, registry_path: Path | str | None = None
) -> LanguagePack:
    """Load, parse, and validate every resource of one language pack."""
    registry = Path(registry_path or DEFAULT_REGISTRY)
    manifest = registry / "registry.json"
    if not manifest.exists():
        raise MalformedResourceError(f"registry manifest not found: {manifest}")
    data = json.loads(manifest.read_text(encoding="utf-8"))
    entry = next((p for p in data["packs"] if p["id"] == lang_id), None)
    if entry is None:
        known = ", ".join(p["id"] for p in data["packs"])
        raise UnknownLanguageError(
            f"unknown language {lang_id!r} (available: {known})",
            detail={"language": lang_id},
        )

    tier = entry["tier"]
    if tier not in ("full", "partial"):
        raise MalformedResourceError(
            f"{manifest}: pack {lang_id!r} has invalid tier {tier!r}"
        )
    resources = entry.get("resources", {})
    if tier == "full":
        missing = [r for r in FULL_TIER_RESOURCES if r not in resources]
        if missing:
            raise MalformedResourceError(
                f"{manifest}: full-tier pack {lang_id!r} lacks {', '.join(missing)}"
            )

    paths = {name: registry / rel for name, rel in resources.items()}

    fillers = frozenset(
        w.lower() for w in _read_wordlist(paths["fillers"])
    ) if "fillers" in paths else frozenset()
    abbreviations = frozenset(
        w.lower() for w in _read_wordlist(paths["abbreviations"])
    ) if "abbreviations" in paths else frozenset()
    clitics = tuple(
        _read_wordlist(paths["clitics"])
    ) if "clitics" in paths else ()

    pack = LanguagePack(
        id=entry["id"],
        name=entry["name"],
        tier=tier,
        filler_lexicon=fillers,
        abbreviations=abbreviations,
        clitic_suffixes=clitics,
        root=registry,
        resource_paths=paths,
        tagger_model_path=paths.get("tagger_model"),
        embeddings_path=paths.get("embeddings"),
    )

    # heavyweight resources parsed by their owning modules (deferred imports
    # keep textcore free of upward dependencies)
    updates: dict = {}
    if "g2p_lexicon" in paths or "g2p_rules" in paths:
        from . import phonlex

        if "g2p_lexicon" in paths:
            updates["g2p_lexicon"] = phonlex.parse_lexicon(paths["g2p_lexicon"])
        if "g2p_rules" in paths:
            updates["g2p_rules"] = phonlex.parse_rules(paths["g2p_rules"])
        if "onsets" in paths:
            updates["onsets"] = phonlex.parse_onsets(paths["onsets"])
        updates["nuclei"] = phonlex.default_nuclei()
    if "chunk_grammar" in paths:
        from . import morphosyntax

        updates["chunk_grammar"] = morphosyntax.parse_chunk_grammar(
            paths["chunk_grammar"]
        )
        # validate the model file eagerly; the parsed model is cached by id
        morphosyntax.load_tagger(paths["tagger_model"])
    gaz = {}
    for cls in ("person", "location"):
        key = f"gazetteer_{cls}"
        if key in paths:
            gaz[cls] = frozenset(_read_wordlist(paths[key]))
    if gaz:
        updates["gazetteers"] = gaz
    if "date_patterns" in paths:
        from . import lexsem

        updates["date_patterns"] = lexsem.parse_date_patterns(paths["date_patterns"])
    if "prompt_template" in paths:
        text = paths["prompt_template"].read_text(encoding="utf-8")
        first, _, body = text.partition("\n")
        m = re.match(r"#\s*version:\s*(\S+)", first)
        if not m:
            raise MalformedResourceError(
                f"{paths['prompt_template']}:1: missing '# version:' header"
            )
        updates["prompt_template"] = body
        updates["prompt_template_version"] = m.group(1)

    return replace(pack, **updates)


_NUMBER_RE = re.compile(r"\d+(?:[.,:]\d+)*")


def _token_regex(pack: LanguagePack) -> re.Pattern:
    parts = []
    if pack.abbreviations:
        abbrevs = sorted(pack.abbreviations, key=len, reverse=True)
        alt = "|".join(re.escape(a[:-1]) for a in abbrevs if a.endswith("."))
        if alt:
            parts.append(rf"(?:{alt})\.(?!\w)")
    parts.append(r"\d+(?:[.,:]\d+)*")
    parts.append(r"\w+(?:['’]\w+)*")
    parts.append(r"[^\w\s]")
    return re.compile("|".join(f"(?:{p})" for p in parts), re.IGNORECASE | re.UNICODE)


def _normalize(surface: str) -> str:
    return unicodedata.normalize("NFC", surface).lower()


def _split_clitics(surface: str, start: int, pack: LanguagePack):
    """Split a word token into host + clitic per the pack's suffix list."""
    low = surface.lower().replace("’", "'")
    for suffix in pack.clitic_suffixes:
        if low.endswith(suffix) and len(low) > len(suffix):
            cut = len(surface) - len(suffix)
            return [
                (surface[:cut], start),
                (surface[cut:], start + cut),
            ]
    return [(surface, start)]


_TERMINALS = frozenset(".!?")


def tokenize(text: str, pack: LanguagePack) -> list[Token]:
    tokens: list[Token] = []
    for m in _token_regex(pack).finditer(text):
        surface, start = m.group(0), m.start()
        pieces = (
            _split_clitics(surface, start, pack)
            if surface[0].isalpha()
            else [(surface, start)]
        )
        for piece, pstart in pieces:
            norm = _normalize(piece)
            if _NUMBER_RE.fullmatch(piece):
                kind = TokenKind.NUMBER
            elif piece[0].isalnum() or piece[0] == "'" or piece[0] == "’":
                kind = TokenKind.FILLER if norm in pack.filler_lexicon else TokenKind.WORD
            else:
                kind = TokenKind.PUNCTUATION
            tokens.append(
                Token(piece, norm, (pstart, pstart + len(piece)), kind)
            )
    return tokens


def _sentence_ranges(tokens: list[Token]) -> list[tuple[int, int]]:
    ranges = []
    start = 0
    for i, tok in enumerate(tokens):
        if tok.kind is TokenKind.PUNCTUATION and tok.surface in _TERMINALS:
            ranges.append((start, i + 1))
            start = i + 1
    if start < len(tokens):
        ranges.append((start, len(tokens)))
    return ranges


def preprocess(text: str, pack: LanguagePack, keep_fillers: bool = True) -> Document:
    """Tokenize and sentence-split ``text``; optionally drop filler tokens."""
    if not text or not text.strip():
        raise EmptyInputError("input text is empty")
    tokens = tokenize(text, pack)
    fillers_removed = 0
    if not keep_fillers:
        kept = [t for t in tokens if t.kind is not TokenKind.FILLER]
        fillers_removed = len(tokens) - len(kept)
        tokens = kept
    sentences = _sentence_ranges(tokens)
    return Document(
        language=pack.id,
        text=text,
        tokens=tuple(tokens),
        sentences=tuple(sentences),
        fillers_removed=fillers_removed,
        keep_fillers=keep_fillers,
    )
