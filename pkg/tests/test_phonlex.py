from __future__ import annotations

import pytest

from clinlang.errors import UnconvertibleWordError
from clinlang.phonlex import (
    phonology_measures,
    syllabify,
    syllable_count,
    to_ipa,
)
from clinlang.textcore import preprocess


def test_lexicon_lookup_first(en_pack):
    ipa = to_ipa("cat", en_pack)
    assert ipa.flat() == "kæt"
    assert ipa.source == "lexicon"


def test_rules_cover_out_of_lexicon(en_pack):
    ipa = to_ipa("zat", en_pack)
    assert ipa.flat() == "zæt"
    assert ipa.source == "rules"


def test_unconvertible_word(en_pack):
    with pytest.raises(UnconvertibleWordError):
        to_ipa("xylophoneq", en_pack)


def test_partial_pack_converts(is_pack):
    assert to_ipa("það", is_pack).flat() == "θað"


def test_syllabify_monosyllable(en_pack):
    sylls = syllabify(to_ipa("cat", en_pack), en_pack)
    assert len(sylls) == 1
    assert sylls[0].shape == "CVC"


def test_onset_maximization(en_pack):
    # /ˈæktə/: kt is not a legal onset, so k closes the first syllable
    sylls = syllabify(to_ipa("actor", en_pack), en_pack)
    assert len(sylls) == 2
    assert sylls[0].coda and sylls[0].coda[-1] == "k"
    assert sylls[1].onset and sylls[1].onset[0] == "t"


def test_legal_cluster_moves_to_onset(en_pack):
    # /əˈsliːp/: sl is a legal onset, so both consonants start syllable 2
    sylls = syllabify(to_ipa("asleep", en_pack), en_pack)
    assert len(sylls) == 2
    assert sylls[1].onset == ("s", "l")


def test_syllabify_partition_property_whole_lexicon(en_pack):
    # every lexicon entry: syllable segments concatenate back to the word's
    # segments and each syllable has exactly one nucleus
    for word in en_pack.g2p_lexicon:
        ipa = to_ipa(word, en_pack)
        if not any(seg in en_pack.nuclei for seg in ipa.segments):
            continue  # nucleus-less clitics ("'s") attach to a host word
        sylls = syllabify(ipa, en_pack)
        flattened = [s for syl in sylls for s in syl.onset + syl.nucleus + syl.coda]
        assert flattened == list(ipa.segments), word
        nuclei = sum(1 for seg in ipa.segments if seg in en_pack.nuclei)
        assert len(sylls) == nuclei, word
        assert all(len(syl.nucleus) == 1 for syl in sylls), word


def test_syllable_count_fallback(en_pack):
    # not convertible; orthographic vowel groups give 3
    assert syllable_count("bananara", en_pack) >= 1
    assert syllable_count("cat", en_pack) == 1
    assert syllable_count("actor", en_pack) == 2


def test_phonology_measures(en_pack):
    doc = preprocess("The cat sat on the mat.", en_pack)
    m = phonology_measures(doc, en_pack)
    assert m.converted_words == 6
    assert m.total_syllables == 6
    assert m.syllables_per_word == pytest.approx(1.0)
    assert m.unconvertible_words == ()
    assert m.shape_counts == {"CV": 2, "CVC": 3, "VC": 1}


def test_phonology_measures_collects_unconvertible(en_pack):
    doc = preprocess("The cat qqqxv sat.", en_pack)
    m = phonology_measures(doc, en_pack)
    assert m.unconvertible_words == ("qqqxv",)
    assert m.converted_words == 3
