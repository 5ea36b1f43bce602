from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clinlang.errors import (
    DimensionMismatchError,
    DuplicateWordError,
    InvalidWindowError,
    MalformedHeaderError,
    OutOfVocabularyError,
    ZeroWordsError,
)
from clinlang.lexsem import (
    lexical_measures,
    load_embeddings,
    ner_counts,
    semantic_distance,
)
from clinlang.textcore import preprocess


def _doc(en_pack, text):
    return preprocess(text, en_pack)


# ----------------------------------------------------------------- TTR etc.
def test_ttr_hand_computed(en_pack):
    # forms: the cat sat on the mat -> 5 types / 6 tokens
    m = lexical_measures(_doc(en_pack, "The cat sat on the mat."))
    assert m.word_count == 6
    assert m.type_count == 5
    assert m.ttr == pytest.approx(5 / 6)
    assert m.hapax_count == 4
    assert m.hapax_ratio == pytest.approx(4 / 6)


def test_mattr_hand_enumeration(en_pack):
    # forms a b a b, window 3: windows aba (2/3) and bab (2/3) -> 2/3
    m = lexical_measures(_doc(en_pack, "cat dog cat dog"), mattr_window=3)
    assert m.mattr == pytest.approx(2 / 3)


def test_mattr_window_equal_length_is_ttr(en_pack):
    doc = _doc(en_pack, "the cat sat on the mat here")
    m = lexical_measures(doc, mattr_window=7)
    assert abs(m.mattr - m.ttr) < 1e-12


def test_mattr_window_larger_than_text_falls_back(en_pack):
    m = lexical_measures(_doc(en_pack, "cat dog"), mattr_window=50)
    assert m.mattr == pytest.approx(m.ttr)


def test_zero_words_rejected(en_pack):
    with pytest.raises(ZeroWordsError):
        lexical_measures(_doc(en_pack, "... !!!"))


def test_invalid_window_rejected(en_pack):
    with pytest.raises(InvalidWindowError):
        lexical_measures(_doc(en_pack, "cat dog"), mattr_window=0)


def test_numbers_count_as_tokens_not_types(en_pack):
    m = lexical_measures(_doc(en_pack, "cat 3 dog 4"))
    assert m.word_count == 4
    assert m.type_count == 2


@given(st.lists(st.sampled_from(["cat", "dog", "mat", "sun", "sky"]), min_size=1, max_size=40))
@settings(max_examples=100)
def test_ttr_against_counter_oracle(en_pack, forms):
    text = " ".join(forms)
    m = lexical_measures(_doc(en_pack, text))
    counts = Counter(forms)
    assert m.word_count == len(forms)
    assert m.type_count == len(counts)
    assert m.ttr == pytest.approx(len(counts) / len(forms))
    assert m.hapax_count == sum(1 for c in counts.values() if c == 1)
    assert 0.0 < m.mattr <= 1.0


@given(
    st.lists(st.sampled_from(["cat", "dog", "mat"]), min_size=3, max_size=20),
    st.integers(min_value=1, max_value=3),
)
@settings(max_examples=100)
def test_mattr_against_sliding_window_oracle(en_pack, forms, window):
    m = lexical_measures(_doc(en_pack, " ".join(forms)), mattr_window=window)
    n = len(forms)
    expect = sum(
        len(set(forms[s : s + window])) / window for s in range(n - window + 1)
    ) / (n - window + 1)
    assert m.mattr == pytest.approx(expect)


# -------------------------------------------------------------- embeddings
def test_load_embeddings(en_pack):
    table = load_embeddings(en_pack.embeddings_path)
    assert table.dimension == 8
    assert len(table.vectors) == 12


def test_semantic_distance_bounds(en_pack):
    table = load_embeddings(en_pack.embeddings_path)
    for w1 in table.vectors:
        for w2 in table.vectors:
            d = semantic_distance(w1, w2, table)
            assert -1.0 - 1e-9 <= d <= 1.0 + 1e-9
            assert d == pytest.approx(semantic_distance(w2, w1, table))
    assert semantic_distance("cat", "cat", table) == pytest.approx(1.0)


def test_semantic_distance_oov(en_pack):
    table = load_embeddings(en_pack.embeddings_path)
    with pytest.raises(OutOfVocabularyError) as e:
        semantic_distance("cat", "zzzz", table)
    assert e.value.code == "out-of-vocabulary"


def test_embeddings_header_validation(tmp_path):
    bad = tmp_path / "bad.vec"
    bad.write_text("not a header\ncat 1 2\n")
    with pytest.raises(MalformedHeaderError):
        load_embeddings(bad)


def test_embeddings_dimension_validation(tmp_path):
    bad = tmp_path / "bad.vec"
    bad.write_text("2 3\ncat 1 2 3\ndog 1 2\n")
    with pytest.raises(DimensionMismatchError):
        load_embeddings(bad)


def test_embeddings_duplicate_validation(tmp_path):
    bad = tmp_path / "bad.vec"
    bad.write_text("2 2\ncat 1 2\ncat 3 4\n")
    with pytest.raises(DuplicateWordError):
        load_embeddings(bad)


# --------------------------------------------------------------------- NER
def test_ner_person_location_date(en_pack):
    doc = _doc(en_pack, "John went to Paris on Monday.")
    m = ner_counts(doc, en_pack)
    assert m.counts == {"person": 1, "location": 1, "date": 1}
    assert m.ratios["person"] == pytest.approx(1 / 6)


def test_ner_longest_match_multiword(en_pack):
    # "New York" matches as one two-token location span, not two misses
    doc = _doc(en_pack, "New York is big.")
    m = ner_counts(doc, en_pack)
    assert m.counts["location"] == 1
    assert m.entity_spans == (("location", (0, 2)),)


def test_ner_numeric_date(en_pack):
    doc = _doc(en_pack, "She came on 12/03/2021.")
    m = ner_counts(doc, en_pack)
    assert m.counts["date"] == 1


def test_ner_zero_entities(en_pack):
    doc = _doc(en_pack, "the cat sat.")
    m = ner_counts(doc, en_pack)
    assert m.counts == {"person": 0, "location": 0, "date": 0}
    assert m.entity_spans == ()
