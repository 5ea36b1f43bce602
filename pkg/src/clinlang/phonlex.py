"""Grapheme-to-IPA conversion, syllabification, and phonology measures.

G2P is lexicon-first: a word found in the pack's pronunciation lexicon is
returned verbatim; otherwise the pack's ordered context-sensitive rewrite
rules are applied left to right.  Syllabification places one syllable per
vowel nucleus and distributes intervocalic consonants by onset maximization
against the pack's legal-onset list.
"""

from __future__ import annotations

import re
import unicodedata
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .clinscore import FeatureTable
from .errors import (
    EmptyInputError,
    MalformedResourceError,
    NoNucleusError,
    UnconvertibleWordError,
    ZeroConvertibleWordsError,
)
from .textcore import Document, LanguagePack, TokenKind

_FEATURE_TABLE: FeatureTable | None = None


def feature_table() -> FeatureTable:
    global _FEATURE_TABLE
    if _FEATURE_TABLE is None:
        _FEATURE_TABLE = FeatureTable.load()
    return _FEATURE_TABLE


def default_nuclei() -> frozenset[str]:
    """Segments that can head a syllable (syllabic feature set)."""
    table = feature_table()
    idx = 16  # syllabic is the last feature column
    return frozenset(s for s, v in table.segments.items() if v[idx] == 1)


STRESS_MARKS = ("ˈ", "ˌ")


@dataclass(frozen=True)
class IpaString:
    segments: tuple[str, ...]
    stress_marks: tuple[tuple[int, str], ...] = ()  # (segment index, mark)
    source: str = "lexicon"  # lexicon | rules

    def flat(self) -> str:
        marks = dict(self.stress_marks)
        out = []
        for i, seg in enumerate(self.segments):
            if i in marks:
                out.append(marks[i])
            out.append(seg)
        return "".join(out)

    @classmethod
    def parse(cls, flat: str, source: str = "lexicon") -> "IpaString":
        table = feature_table()
        segments: list[str] = []
        stress: list[tuple[int, str]] = []
        i = 0
        flat = unicodedata.normalize("NFC", flat)
        while i < len(flat):
            ch = flat[i]
            if ch in STRESS_MARKS:
                stress.append((len(segments), ch))
                i += 1
                continue
            if ch in " ./":
                i += 1
                continue
            for seg in table._ordered:
                if flat.startswith(seg, i):
                    segments.append(seg)
                    i += len(seg)
                    break
            else:
                raise UnconvertibleWordError(
                    f"unknown IPA symbol {ch!r} in {flat!r}", detail={"symbol": ch}
                )
        return cls(tuple(segments), tuple(stress), source)


def parse_lexicon(path: Path) -> dict[str, str]:
    lexicon: dict[str, str] = {}
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), 1
    ):
        line = line.rstrip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise MalformedResourceError(
                f"{path}:{lineno}: expected 'orthography<TAB>IPA'"
            )
        lexicon[parts[0].lower()] = parts[1]
    return lexicon


@dataclass(frozen=True)
class RewriteRule:
    pattern: str
    replacement: str  # "" for deletion (written ∅ in the rule file)
    left: str  # context over literals, V, C, # (empty = any)
    right: str


def parse_rules(path: Path) -> tuple[RewriteRule, ...]:
    rules = []
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), 1
    ):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "/" in line:
            body, _, context = line.partition("/")
            if "_" not in context:
                raise MalformedResourceError(
                    f"{path}:{lineno}: context must contain '_'"
                )
            left, _, right = context.partition("_")
            left, right = left.strip(), right.strip()
        else:
            body, left, right = line, "", ""
        if "->" not in body:
            raise MalformedResourceError(f"{path}:{lineno}: missing '->'")
        pattern, _, replacement = body.partition("->")
        pattern, replacement = pattern.strip(), replacement.strip()
        if not pattern:
            raise MalformedResourceError(f"{path}:{lineno}: empty pattern")
        if replacement == "∅":
            replacement = ""
        rules.append(RewriteRule(pattern, replacement, left, right))
    return tuple(rules)


def parse_onsets(path: Path) -> frozenset[tuple[str, ...]]:
    table = feature_table()
    onsets = set()
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), 1
    ):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            segs = tuple(table.parse_segments(line))
        except Exception:
            raise MalformedResourceError(f"{path}:{lineno}: unknown segment in {line!r}")
        onsets.add(segs)
    return frozenset(onsets)


_ORTHO_VOWELS = set("aeiouyàáâäæãåāèéêëēìíîïīòóôöõōùúûüūýÿ")


def _class_match(ch: str, cls: str) -> bool:
    if cls == "V":
        return ch in _ORTHO_VOWELS
    if cls == "C":
        return ch.isalpha() and ch not in _ORTHO_VOWELS
    return ch == cls


def _context_matches(word: str, pos: int, end: int, rule: RewriteRule) -> bool:
    # left context matched right-to-left ending at pos
    i = pos
    for cls in reversed(rule.left):
        if cls == "#":
            if i != 0:
                return False
            continue
        if i == 0 or not _class_match(word[i - 1], cls):
            return False
        i -= 1
    j = end
    for cls in rule.right:
        if cls == "#":
            if j != len(word):
                return False
            continue
        if j == len(word) or not _class_match(word[j], cls):
            return False
        j += 1
    return True


def apply_rules(word: str, rules: tuple[RewriteRule, ...]) -> str:
    """Rewrite an orthographic word to a flat IPA string, left to right."""
    out = []
    i = 0
    while i < len(word):
        for rule in rules:
            end = i + len(rule.pattern)
            if word.startswith(rule.pattern, i) and _context_matches(
                word, i, end, rule
            ):
                out.append(rule.replacement)
                i = end
                break
        else:
            raise UnconvertibleWordError(
                f"no rule covers {word[i]!r} in {word!r}",
                detail={"word": word, "grapheme": word[i]},
            )
    return "".join(out)


def to_ipa(word: str, pack: LanguagePack) -> IpaString:
    """Convert one orthographic word to IPA (lexicon first, then rules)."""
    norm = unicodedata.normalize("NFC", word).lower().strip()
    if not norm or not any(c.isalpha() for c in norm):
        raise EmptyInputError(f"word must be non-empty and alphabetic: {word!r}")
    if norm in pack.g2p_lexicon:
        return IpaString.parse(pack.g2p_lexicon[norm], source="lexicon")
    if not pack.g2p_rules:
        raise UnconvertibleWordError(
            f"{word!r} not in lexicon and pack {pack.id!r} has no G2P rules",
            detail={"word": word},
        )
    return IpaString.parse(apply_rules(norm, pack.g2p_rules), source="rules")


@dataclass(frozen=True)
class Syllable:
    onset: tuple[str, ...]
    nucleus: tuple[str, ...]
    coda: tuple[str, ...]

    @property
    def shape(self) -> str:
        return "C" * len(self.onset) + "V" * len(self.nucleus) + "C" * len(self.coda)

    @property
    def segments(self) -> tuple[str, ...]:
        return self.onset + self.nucleus + self.coda


def syllabify(ipa: IpaString, pack: LanguagePack) -> list[Syllable]:
    """One syllable per nucleus; onset maximization for medial clusters."""
    nuclei_set = pack.nuclei or default_nuclei()
    segs = ipa.segments
    nuclei = [i for i, s in enumerate(segs) if s in nuclei_set]
    if not nuclei:
        raise NoNucleusError(f"no vowel nucleus in {''.join(segs)!r}")

    onsets = pack.onsets
    syllables = []
    # consonant spans: before first nucleus, between nuclei, after last
    prev_coda_end = 0
    for k, nuc in enumerate(nuclei):
        if k == 0:
            onset = segs[:nuc]
        else:
            cluster = segs[nuclei[k - 1] + 1 : nuc]
            # largest legal onset suffix of the cluster; remainder to the
            # preceding coda
            split = len(cluster)
            for s in range(len(cluster) + 1):
                if tuple(cluster[s:]) in onsets or s == len(cluster):
                    split = s
                    break
            coda = tuple(cluster[:split])
            onset = cluster[split:]
            prev = syllables[-1]
            syllables[-1] = Syllable(prev.onset, prev.nucleus, coda)
        syllables.append(Syllable(tuple(onset), (segs[nuc],), ()))
    tail = tuple(segs[nuclei[-1] + 1 :])
    last = syllables[-1]
    syllables[-1] = Syllable(last.onset, last.nucleus, tail)
    return syllables


@dataclass(frozen=True)
class PhonologyMeasures:
    total_syllables: int
    syllables_per_word: float
    shape_counts: dict[str, int]
    mean_word_length_segments: float
    converted_words: int
    unconvertible_words: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "total_syllables": self.total_syllables,
            "syllables_per_word": self.syllables_per_word,
            "shape_counts": dict(sorted(self.shape_counts.items())),
            "mean_word_length_segments": self.mean_word_length_segments,
            "converted_words": self.converted_words,
            "unconvertible_word_count": len(self.unconvertible_words),
        }


def phonology_measures(doc: Document, pack: LanguagePack) -> PhonologyMeasures:
    """Per-word G2P + syllabification aggregated over the document."""
    shapes: Counter[str] = Counter()
    total_syll = 0
    total_segments = 0
    converted = 0
    unconvertible: list[str] = []
    for tok in doc.tokens:
        if tok.kind is not TokenKind.WORD:
            continue
        try:
            ipa = to_ipa(tok.normalized, pack)
            sylls = syllabify(ipa, pack)
        except (UnconvertibleWordError, NoNucleusError, EmptyInputError):
            unconvertible.append(tok.normalized)
            continue
        converted += 1
        total_syll += len(sylls)
        total_segments += len(ipa.segments)
        for s in sylls:
            shapes[s.shape] += 1
    if converted == 0:
        raise ZeroConvertibleWordsError(
            "no word in the document could be converted to IPA"
        )
    return PhonologyMeasures(
        total_syllables=total_syll,
        syllables_per_word=total_syll / converted,
        shape_counts=dict(shapes),
        mean_word_length_segments=total_segments / converted,
        converted_words=converted,
        unconvertible_words=tuple(unconvertible),
    )


_VOWEL_GROUP_RE = re.compile(r"[aeiouyàáâäæãåāèéêëēìíîïīòóôöõōùúûüūýÿ]+")


def syllable_count(word: str, pack: LanguagePack) -> int:
    """Syllables of one word; orthographic vowel-group fallback on G2P miss."""
    try:
        return len(syllabify(to_ipa(word, pack), pack))
    except (UnconvertibleWordError, NoNucleusError, EmptyInputError):
        return max(1, len(_VOWEL_GROUP_RE.findall(word.lower())))
