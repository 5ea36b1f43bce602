from __future__ import annotations

import json
import subprocess
import sys

import pytest
from fastapi.testclient import TestClient

from clinlang.service import ServiceConfig, create_app

from conftest import sine, write_wav


@pytest.fixture()
def service(tmp_path):
    temp_dir = tmp_path / "svc-tmp"
    temp_dir.mkdir()
    config = ServiceConfig(temp_dir=temp_dir, max_upload_bytes=1024 * 1024)
    client = TestClient(create_app(config))
    return client, temp_dir


def test_languages_endpoint(service):
    client, _ = service
    r = client.get("/v1/languages")
    assert r.status_code == 200
    langs = {e["id"]: e["tier"] for e in r.json()}
    assert langs["en"] == "full"


def test_analyze_text_matches_cli_bytes(service, tmp_path):
    client, _ = service
    text = "The cat sat on the mat. The dog, um, ran."
    r = client.post("/v1/analyze/text", json={"text": text, "language": "en"})
    assert r.status_code == 200
    infile = tmp_path / "t.txt"
    infile.write_text(text)
    cli = subprocess.run(
        [sys.executable, "-m", "clinlang.cli", "analyze-text", "--lang", "en", "--in", str(infile)],
        capture_output=True,
    )
    assert cli.returncode == 0
    assert cli.stdout == r.content


def test_analyze_text_unknown_language_400(service):
    client, _ = service
    r = client.post("/v1/analyze/text", json={"text": "hi there.", "language": "xx"})
    assert r.status_code == 400
    assert r.json()["code"] == "unknown-language"


def test_analyze_text_validation_422(service):
    client, _ = service
    r = client.post("/v1/analyze/text", json={"language": "en"})
    assert r.status_code == 422


def test_analyze_audio_and_temp_cleanup(service, tmp_path):
    client, temp_dir = service
    wav = write_wav(tmp_path / "a.wav", sine(220.0, 1.0))
    with open(wav, "rb") as fh:
        r = client.post(
            "/v1/analyze/audio",
            files={"file": ("a.wav", fh, "audio/wav")},
            data={"language": "en", "transcript": "The cat sat on the mat."},
        )
    assert r.status_code == 200
    data = json.loads(r.content)
    assert data["blocks"]["acoustic"]["f0"]["median"] == pytest.approx(220.0, abs=3)
    assert list(temp_dir.iterdir()) == []


def test_analyze_audio_bad_file_cleans_temp(service, tmp_path):
    client, temp_dir = service
    bad = tmp_path / "bad.wav"
    bad.write_bytes(b"this is not audio")
    with open(bad, "rb") as fh:
        r = client.post(
            "/v1/analyze/audio",
            files={"file": ("bad.wav", fh, "audio/wav")},
            data={"language": "en"},
        )
    assert r.status_code == 400
    assert r.json()["code"] == "unsupported-encoding"
    assert list(temp_dir.iterdir()) == []


def test_analyze_audio_413(service, tmp_path):
    client, temp_dir = service
    big = tmp_path / "big.wav"
    big.write_bytes(b"\0" * (2 * 1024 * 1024))
    with open(big, "rb") as fh:
        r = client.post(
            "/v1/analyze/audio",
            files={"file": ("big.wav", fh, "audio/wav")},
            data={"language": "en"},
        )
    assert r.status_code == 413
    assert list(temp_dir.iterdir()) == []


def test_score_endpoints(service):
    client, _ = service
    r = client.post(
        "/v1/score/spelling",
        json={"items_csv": "item_id,target,response\n1,cat,kat\n", "language": "en"},
    )
    assert r.status_code == 200
    assert "1,cat,kat,1.000000" in r.text
    r = client.post(
        "/v1/score/phonological",
        json={
            "items_csv": "item_id,target,response\n1,pat,bat\n",
            "language": "en",
            "orthographic": True,
        },
    )
    assert r.status_code == 200
    assert "0.019608" in r.text
    r = client.post(
        "/v1/score/semantic",
        json={"items_csv": "item_id,target,response\n1,cat,dog\n", "language": "en"},
    )
    assert r.status_code == 200
    r = client.post(
        "/v1/score/bogus",
        json={"items_csv": "item_id,target,response\n", "language": "en"},
    )
    assert r.status_code == 400


def test_ipa_endpoint(service):
    client, _ = service
    r = client.post("/v1/ipa", json={"words": ["cat"], "language": "en"})
    assert r.status_code == 200
    assert r.json()[0]["ipa"] == "kæt"


def test_discourse_endpoint_stub(service):
    client, _ = service
    text = "The cat sat on the mat."
    rep = client.post(
        "/v1/analyze/text", json={"text": text, "language": "en"}
    ).json()
    r = client.post(
        "/v1/discourse",
        json={"report": rep, "transcript": text, "language": "en"},
    )
    assert r.status_code == 200
    body = r.json()
    assert body["backend_id"] == "stub"
    assert body["recommendation"]["flag"] == "insufficient-data"


def test_discourse_unsupported_language_400(service):
    client, _ = service
    r = client.post(
        "/v1/discourse",
        json={
            "report": {"meta": {"language": "is"}, "blocks": {"lexical": {}}},
            "transcript": "hér.",
            "language": "is",
        },
    )
    assert r.status_code == 400
    assert r.json()["code"] == "language-not-supported-for-discourse"


def test_mixed_sequence_leaves_temp_empty(service, tmp_path):
    client, temp_dir = service
    wav = write_wav(tmp_path / "a.wav", sine(220.0, 0.5))
    bad = tmp_path / "bad.wav"
    bad.write_bytes(b"junk")
    for i in range(20):
        if i % 4 == 0:
            with open(wav, "rb") as fh:
                client.post(
                    "/v1/analyze/audio",
                    files={"file": ("a.wav", fh, "audio/wav")},
                    data={"language": "en"},
                )
        elif i % 4 == 1:
            with open(bad, "rb") as fh:
                client.post(
                    "/v1/analyze/audio",
                    files={"file": ("bad.wav", fh, "audio/wav")},
                    data={"language": "en"},
                )
        elif i % 4 == 2:
            client.post(
                "/v1/analyze/text", json={"text": "The cat sat.", "language": "en"}
            )
        else:
            client.post(
                "/v1/analyze/text", json={"text": "hi.", "language": "xx"}
            )
        assert list(temp_dir.iterdir()) == []
