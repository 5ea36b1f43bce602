"""Generate src/clinlang/data/features.tsv (binary distinctive features)."""

from pathlib import Path

FEATURES = [
    "consonantal", "sonorant", "continuant", "voice", "nasal", "lateral",
    "labial", "coronal", "dorsal", "high", "low", "back", "round", "tense",
    "strident", "delayed_release", "syllabic",
]

# segment -> set of positive features (everything else 0)
SEGMENTS = {
    # obstruents: voiced member = voiceless member + voice, nothing else
    "p": {"consonantal", "labial"},
    "b": {"consonantal", "labial", "voice"},
    "t": {"consonantal", "coronal"},
    "d": {"consonantal", "coronal", "voice"},
    "k": {"consonantal", "dorsal", "high", "back"},
    "g": {"consonantal", "dorsal", "high", "back", "voice"},
    "f": {"consonantal", "continuant", "labial", "strident"},
    "v": {"consonantal", "continuant", "labial", "strident", "voice"},
    "θ": {"consonantal", "continuant", "coronal"},
    "ð": {"consonantal", "continuant", "coronal", "voice"},
    "s": {"consonantal", "continuant", "coronal", "strident"},
    "z": {"consonantal", "continuant", "coronal", "strident", "voice"},
    "ʃ": {"consonantal", "continuant", "coronal", "strident", "high"},
    "ʒ": {"consonantal", "continuant", "coronal", "strident", "high", "voice"},
    "tʃ": {"consonantal", "coronal", "strident", "high", "delayed_release"},
    "dʒ": {"consonantal", "coronal", "strident", "high", "delayed_release", "voice"},
    "h": {"continuant"},
    # sonorant consonants
    "m": {"consonantal", "sonorant", "nasal", "labial", "voice"},
    "n": {"consonantal", "sonorant", "nasal", "coronal", "voice"},
    "ŋ": {"consonantal", "sonorant", "nasal", "dorsal", "high", "back", "voice"},
    "l": {"consonantal", "sonorant", "continuant", "lateral", "coronal", "voice"},
    "r": {"consonantal", "sonorant", "continuant", "coronal", "voice"},
    "w": {"sonorant", "continuant", "labial", "dorsal", "high", "back", "round", "voice"},
    "j": {"sonorant", "continuant", "dorsal", "high", "voice"},
    # syllabic consonants
    "l̩": {"consonantal", "sonorant", "continuant", "lateral", "coronal", "voice", "syllabic"},
    "n̩": {"consonantal", "sonorant", "nasal", "coronal", "voice", "syllabic"},
    "m̩": {"consonantal", "sonorant", "nasal", "labial", "voice", "syllabic"},
}

_V = {"sonorant", "continuant", "voice", "syllabic"}
VOWELS = {
    "i": {"high", "tense"},
    "iː": {"high", "tense"},
    "ɪ": {"high"},
    "e": {"tense"},
    "ɛ": set(),
    "æ": {"low"},
    "a": {"low"},
    "ɑ": {"low", "back"},
    "ɑː": {"low", "back"},
    "ɒ": {"low", "back", "round"},
    "ɔ": {"back", "round"},
    "ɔː": {"back", "round"},
    "o": {"back", "round", "tense"},
    "ʊ": {"high", "back", "round"},
    "u": {"high", "back", "round", "tense"},
    "uː": {"high", "back", "round", "tense"},
    "ʌ": {"back"},
    "ə": set(),
    "ɜ": set(),
    "ɜː": set(),
    "ɚ": set(),
    # diphthongs, classified by their first element
    "eɪ": {"tense"},
    "aɪ": {"low"},
    "ɔɪ": {"back", "round"},
    "aʊ": {"low", "back"},
    "oʊ": {"back", "round", "tense"},
    "əʊ": {"back", "round", "tense"},
    "ɪə": {"high"},
    "eə": set(),
    "ʊə": {"high", "back", "round"},
}
for seg, feats in VOWELS.items():
    SEGMENTS[seg] = feats | _V

out = Path(__file__).resolve().parents[1] / "src" / "clinlang" / "data" / "features.tsv"
lines = ["segment\t" + "\t".join(FEATURES)]
for seg in sorted(SEGMENTS):
    vec = ["1" if f in SEGMENTS[seg] else "0" for f in FEATURES]
    lines.append(seg + "\t" + "\t".join(vec))
out.write_text("\n".join(lines) + "\n", encoding="utf-8")
print(f"wrote {out} ({len(SEGMENTS)} segments)")
