from __future__ import annotations

import json

import pytest

from clinlang.cli import main

from conftest import sine, write_wav


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def text_file(tmp_path):
    p = tmp_path / "t.txt"
    p.write_text("The cat sat on the mat. The dog ran.")
    return str(p)


def test_analyze_text_json(capsys, text_file):
    code, out, err = run(capsys, "analyze-text", "--lang", "en", "--in", text_file)
    assert code == 0
    data = json.loads(out)
    assert data["meta"]["language"] == "en"
    assert "lexical" in data["blocks"]


def test_analyze_text_deterministic(capsys, text_file):
    _, out1, _ = run(capsys, "analyze-text", "--lang", "en", "--in", text_file)
    _, out2, _ = run(capsys, "analyze-text", "--lang", "en", "--in", text_file)
    assert out1 == out2


def test_analyze_text_csv(capsys, text_file):
    code, out, _ = run(
        capsys, "analyze-text", "--lang", "en", "--in", text_file, "--format", "csv"
    )
    assert code == 0
    assert out.startswith("measure,value\n")


def test_analyze_text_with_stub_discourse(capsys, text_file):
    code, out, _ = run(
        capsys,
        "analyze-text",
        "--lang",
        "en",
        "--in",
        text_file,
        "--discourse",
        "stub",
    )
    assert code == 0
    data = json.loads(out)
    assert data["blocks"]["discourse"]["backend_id"] == "stub"


def test_unknown_language_exit_1(capsys, text_file):
    code, out, err = run(capsys, "analyze-text", "--lang", "xx", "--in", text_file)
    assert code == 1
    assert out == ""
    assert json.loads(err)["code"] == "unknown-language"


def test_missing_file_exit_1(capsys):
    code, _, err = run(capsys, "analyze-text", "--lang", "en", "--in", "/no/such.txt")
    assert code == 1
    assert json.loads(err)["code"] == "file-not-found"


def test_score_spelling(capsys, tmp_path):
    items = tmp_path / "items.csv"
    items.write_text("item_id,target,response\n1,cat,kat\n")
    code, out, _ = run(capsys, "score-spelling", "--lang", "en", "--in", str(items))
    assert code == 0
    assert "1,cat,kat,1.000000,0.333333,0.666667,sub@0:c>k," in out


def test_score_phon_orthographic(capsys, tmp_path):
    items = tmp_path / "items.csv"
    items.write_text("item_id,target,response\n1,pat,bat\n")
    code, out, _ = run(
        capsys, "score-phon", "--lang", "en", "--orthographic", "--in", str(items)
    )
    assert code == 0
    assert "0.019608" in out  # (1/17)/3


def test_score_semantic(capsys, tmp_path):
    items = tmp_path / "items.csv"
    items.write_text("item_id,target,response\n1,cat,cat\n")
    code, out, _ = run(capsys, "score-semantic", "--lang", "en", "--in", str(items))
    assert code == 0
    assert "1.000000" in out


def test_ipa(capsys):
    code, out, _ = run(capsys, "ipa", "--lang", "en", "cat", "zat")
    assert code == 0
    entries = json.loads(out)
    assert entries[0] == {"ipa": "kæt", "source": "lexicon", "word": "cat"}
    assert entries[1]["source"] == "rules"


def test_languages(capsys):
    code, out, _ = run(capsys, "languages")
    assert code == 0
    ids = {e["id"]: e["tier"] for e in json.loads(out)}
    assert ids["en"] == "full"
    assert ids["is"] == "partial"


def test_analyze_audio(capsys, tmp_path):
    wav = write_wav(tmp_path / "a.wav", sine(220.0, 1.0))
    t = tmp_path / "t.txt"
    t.write_text("The cat sat on the mat.")
    code, out, _ = run(
        capsys,
        "analyze-audio",
        "--lang",
        "en",
        "--in",
        str(wav),
        "--transcript",
        str(t),
    )
    assert code == 0
    data = json.loads(out)
    assert data["blocks"]["acoustic"]["f0"]["median"] == pytest.approx(220.0, abs=3)
    assert "lexical" in data["blocks"]


def test_textgrid_csv(capsys, tmp_path):
    from pathlib import Path

    golden = Path(__file__).parent / "golden" / "simple.TextGrid"
    code, out, _ = run(capsys, "textgrid", "--in", str(golden))
    assert code == 0
    assert out.splitlines()[1] == "words,0.000000,1.000000,hello"


def test_textgrid_invalid_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.TextGrid"
    bad.write_text("File type = nonsense\n")
    code, _, err = run(capsys, "textgrid", "--in", str(bad))
    assert code == 1
    assert json.loads(err)["code"] == "syntax-error"
