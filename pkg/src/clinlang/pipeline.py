"""Shared analysis pipelines behind the CLI and the HTTP service.

Both interfaces call the same functions with the same arguments, so for
identical inputs (and a fixed timestamp) they emit byte-identical canonical
reports.
"""

from __future__ import annotations

import os
from pathlib import Path

from . import acoustic as ac
from . import discourse as disc
from . import lexsem, morphosyntax, phonlex, report, textcore
from .errors import ZeroConvertibleWordsError

FIXED_TIMESTAMP = "1970-01-01T00:00:00Z"

ENV_REGISTRY = "OBAI_REGISTRY"


def registry_path(explicit: str | Path | None = None) -> Path | None:
    if explicit is not None:
        return Path(explicit)
    env = os.environ.get(ENV_REGISTRY)
    return Path(env) if env else None


def load_pack(language: str, registry: str | Path | None = None):
    return textcore.load_language_pack(language, registry_path(registry))


def _text_blocks(
    doc: textcore.Document, pack: textcore.LanguagePack, mattr_window: int
) -> tuple[dict, list[str]]:
    blocks: dict = {}
    warnings: list[str] = []

    try:
        phon = phonlex.phonology_measures(doc, pack)
        blocks["phonology"] = phon.to_dict()
        for w in phon.unconvertible_words:
            warnings.append(f"unconvertible-word: {w}")
    except ZeroConvertibleWordsError:
        warnings.append("zero-convertible-words: phonology block omitted")

    if pack.is_full:
        model = morphosyntax.load_tagger(pack.tagger_model_path)
        annotated = morphosyntax.tag_and_chunk(doc, model, pack)
        blocks["morphosyntax"] = morphosyntax.morphosyntax_measures(
            annotated
        ).to_dict()
    else:
        warnings.append(
            f"grammar-analysis-unavailable: pack {pack.id!r} is partial tier"
        )

    blocks["lexical"] = lexsem.lexical_measures(doc, mattr_window).to_dict()
    blocks["semantic"] = lexsem.ner_counts(doc, pack).to_dict()
    blocks["readability"] = report.readability_measures(doc, pack).to_dict()
    return blocks, warnings


def analyze_text(
    text: str,
    language: str,
    keep_fillers: bool = True,
    mattr_window: int = lexsem.DEFAULT_MATTR_WINDOW,
    registry: str | Path | None = None,
    timestamp: str = FIXED_TIMESTAMP,
    discourse_backend: disc.DiscourseBackend | None = None,
) -> report.AssessmentReport:
    """Full text pipeline: preprocess, all measure blocks, optional discourse."""
    pack = load_pack(language, registry)
    doc = textcore.preprocess(text, pack, keep_fillers=keep_fillers)
    blocks, warnings = _text_blocks(doc, pack, mattr_window)
    options = {
        "keep_fillers": keep_fillers,
        "mattr_window": mattr_window,
    }
    rep = report.assemble_report(
        blocks, language, options=options, warnings=warnings, timestamp=timestamp
    )
    if discourse_backend is not None:
        payload = disc.build_prompt(rep, text, pack)
        dreport = disc.analyze_discourse(payload, discourse_backend)
        blocks["discourse"] = dreport.to_dict()
        rep = report.assemble_report(
            blocks, language, options=options, warnings=warnings, timestamp=timestamp
        )
    return rep


def analyze_audio(
    wav_path: str | Path,
    language: str,
    transcript: str | None = None,
    keep_fillers: bool = True,
    mattr_window: int = lexsem.DEFAULT_MATTR_WINDOW,
    registry: str | Path | None = None,
    timestamp: str = FIXED_TIMESTAMP,
) -> report.AssessmentReport:
    """Audio pipeline: acoustic block, plus text blocks when a transcript is given."""
    pack = load_pack(language, registry)
    signal = ac.read_wav(wav_path)
    doc = None
    blocks: dict = {}
    warnings: list[str] = []
    if transcript is not None and transcript.strip():
        doc = textcore.preprocess(transcript, pack, keep_fillers=keep_fillers)
        blocks, warnings = _text_blocks(doc, pack, mattr_window)
    measures = ac.acoustic_measures(signal, transcript=doc, pack=pack)
    blocks["acoustic"] = measures.to_dict()
    options = {
        "keep_fillers": keep_fillers,
        "mattr_window": mattr_window,
    }
    return report.assemble_report(
        blocks, language, options=options, warnings=warnings, timestamp=timestamp
    )


def ipa_words(
    words: list[str], language: str, registry: str | Path | None = None
) -> list[dict]:
    """Per-word G2P; conversion failures are reported per word, not raised."""
    pack = load_pack(language, registry)
    out = []
    for word in words:
        entry: dict = {"word": word}
        try:
            ipa = phonlex.to_ipa(word.lower(), pack)
            entry["ipa"] = ipa.flat()
            entry["source"] = ipa.source
        except Exception as e:  # per-item errors stay in-band
            code = getattr(e, "code", "internal-error")
            entry["error"] = code
        out.append(entry)
    return out
