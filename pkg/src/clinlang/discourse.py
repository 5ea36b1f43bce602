"""Discourse analysis via a pluggable language-model backend.

The module builds a canonical prompt from the transcript plus all computed
measure blocks, sends it through a backend implementing ``DiscourseBackend``,
and parses the reply into a four-section report.  The stub backend keeps the
whole pipeline deterministic and offline; the HTTP backend posts to a generic
completion endpoint configured through the environment.

Nothing here writes the transcript or payload to disk, and the HTTP client
never logs request bodies.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass

from .errors import (
    BackendTimeoutError,
    BackendUnreachableError,
    ConfigurationError,
    DiscourseLanguageError,
    InputError,
    MalformedResponseError,
)
from .report import AssessmentReport, canonical_json
from .textcore import LanguagePack

# languages the instruction template supports
DISCOURSE_LANGUAGES = {
    "da": "Danish",
    "de": "German",
    "el": "Greek",
    "en": "English",
    "es": "Spanish",
    "fi": "Finnish",
    "fr": "French",
    "it": "Italian",
    "nl": "Dutch",
    "no": "Norwegian",
    "pt": "Portuguese",
    "sv": "Swedish",
}

FLAGS = ("no-evidence", "possible-impairment", "insufficient-data")

DEFAULT_TIMEOUT_S = 60.0
DEFAULT_MAX_TOKENS = 1024

ENV_URL = "OBAI_DISCOURSE_URL"
ENV_TOKEN = "OBAI_DISCOURSE_TOKEN"

_SECTIONS = ("macrostructure", "microstructure", "error_analysis", "recommendation")


@dataclass(frozen=True)
class PromptPayload:
    language: str
    transcript: str
    metrics_json: str  # canonical key-sorted JSON of the measure blocks
    template_id: str
    template_version: str
    prompt: str

    def to_dict(self) -> dict:
        return {
            "language": self.language,
            "transcript": self.transcript,
            "metrics": self.metrics_json,
            "template_id": self.template_id,
            "template_version": self.template_version,
        }


@dataclass(frozen=True)
class Recommendation:
    flag: str
    rationale: str

    def to_dict(self) -> dict:
        return {"flag": self.flag, "rationale": self.rationale}


@dataclass(frozen=True)
class DiscourseReport:
    macrostructure: str
    microstructure: str
    error_analysis: str
    recommendation: Recommendation
    backend_id: str
    latency_ms: float
    raw_response: str | None = None  # attached only when parsing fell back

    def to_dict(self) -> dict:
        d = {
            "macrostructure": self.macrostructure,
            "microstructure": self.microstructure,
            "error_analysis": self.error_analysis,
            "recommendation": self.recommendation.to_dict(),
            "backend_id": self.backend_id,
            "latency_ms": self.latency_ms,
        }
        if self.raw_response is not None:
            d["raw_response"] = self.raw_response
        return d


def _load_template(pack: LanguagePack) -> tuple[str, str, str]:
    if pack.prompt_template is None:
        raise DiscourseLanguageError(
            f"pack {pack.id!r} ships no discourse prompt template"
        )
    path = pack.resource_paths["prompt_template"]
    return path.stem, pack.prompt_template_version, pack.prompt_template


def build_prompt(
    report: AssessmentReport, transcript: str, pack: LanguagePack
) -> PromptPayload:
    """Assemble the canonical prompt for one transcript and its report."""
    if pack.id not in DISCOURSE_LANGUAGES:
        raise DiscourseLanguageError(
            f"no discourse support for language {pack.id!r}",
            detail={"supported": sorted(DISCOURSE_LANGUAGES)},
        )
    if report.meta.get("language") != pack.id:
        raise InputError(
            f"report language {report.meta.get('language')!r} "
            f"does not match pack {pack.id!r}"
        )
    template_id, version, template = _load_template(pack)
    metrics_json = canonical_json(report.blocks)
    prompt = (
        template.replace("{language}", DISCOURSE_LANGUAGES[pack.id])
        .replace("{transcript}", transcript)
        .replace("{metrics}", metrics_json)
    )
    return PromptPayload(
        language=pack.id,
        transcript=transcript,
        metrics_json=metrics_json,
        template_id=template_id,
        template_version=version,
        prompt=prompt,
    )


class DiscourseBackend:
    """Contract: turn a payload into raw response text."""

    backend_id = "abstract"

    def send(self, payload: PromptPayload) -> str:
        raise NotImplementedError


class StubBackend(DiscourseBackend):
    """Deterministic offline backend used by default in tests.

    Echoes the metric block names into each section and always flags
    insufficient-data, since no model was consulted.
    """

    backend_id = "stub"
    deterministic = True

    def send(self, payload: PromptPayload) -> str:
        blocks = sorted(json.loads(payload.metrics_json))
        names = ", ".join(blocks) if blocks else "none"
        return json.dumps(
            {
                "macrostructure": f"[stub] metrics considered: {names}",
                "microstructure": f"[stub] metrics considered: {names}",
                "error_analysis": f"[stub] metrics considered: {names}",
                "recommendation": {
                    "flag": "insufficient-data",
                    "rationale": "[stub] offline backend; no model consulted",
                },
            },
            sort_keys=True,
        )


class HttpBackend(DiscourseBackend):
    """Generic completion endpoint: POST {prompt, max_tokens, temperature}.

    URL and bearer token come from the environment unless given explicitly.
    The response body is treated as opaque text; the transcript is never
    logged.
    """

    backend_id = "http-generic"

    def __init__(
        self,
        url: str | None = None,
        token: str | None = None,
        timeout_s: float = DEFAULT_TIMEOUT_S,
        max_tokens: int = DEFAULT_MAX_TOKENS,
    ):
        self.url = url if url is not None else os.environ.get(ENV_URL)
        self.token = token if token is not None else os.environ.get(ENV_TOKEN)
        self.timeout_s = timeout_s
        self.max_tokens = max_tokens
        if not self.url:
            raise ConfigurationError(f"{ENV_URL} is not set")
        if not self.token:
            raise ConfigurationError(f"{ENV_TOKEN} is not set")

    def send(self, payload: PromptPayload) -> str:
        import httpx

        body = {
            "prompt": payload.prompt,
            "max_tokens": self.max_tokens,
            "temperature": 0,
        }
        try:
            resp = httpx.post(
                self.url,
                json=body,
                headers={"Authorization": f"Bearer {self.token}"},
                timeout=self.timeout_s,
            )
        except httpx.TimeoutException:
            raise BackendTimeoutError(
                f"backend did not answer within {self.timeout_s:.0f} s"
            )
        except httpx.HTTPError as e:
            raise BackendUnreachableError(f"backend request failed: {type(e).__name__}")
        if resp.status_code != 200:
            raise BackendUnreachableError(
                f"backend returned status {resp.status_code}",
                detail={"status": resp.status_code},
            )
        return resp.text


def _insufficient(raw: str, backend_id: str, latency_ms: float) -> DiscourseReport:
    return DiscourseReport(
        macrostructure="",
        microstructure="",
        error_analysis="",
        recommendation=Recommendation(
            flag="insufficient-data",
            rationale="backend response was missing required sections",
        ),
        backend_id=backend_id,
        latency_ms=latency_ms,
        raw_response=raw,
    )


def analyze_discourse(
    payload: PromptPayload, backend: DiscourseBackend
) -> DiscourseReport:
    """Send the payload and parse the reply into a four-section report."""
    t0 = time.perf_counter()
    raw = backend.send(payload)
    # deterministic backends report zero latency so their output is stable
    latency_ms = (
        0.0
        if getattr(backend, "deterministic", False)
        else (time.perf_counter() - t0) * 1000.0
    )
    try:
        data = json.loads(raw)
    except (json.JSONDecodeError, UnicodeDecodeError):
        raise MalformedResponseError(
            "backend response is not valid JSON", detail={"raw": raw}
        )
    if not isinstance(data, dict) or not all(s in data for s in _SECTIONS):
        return _insufficient(raw, backend.backend_id, latency_ms)
    rec = data["recommendation"]
    if (
        not isinstance(rec, dict)
        or rec.get("flag") not in FLAGS
        or not isinstance(rec.get("rationale"), str)
    ):
        return _insufficient(raw, backend.backend_id, latency_ms)
    texts = {}
    for s in ("macrostructure", "microstructure", "error_analysis"):
        if not isinstance(data[s], str):
            return _insufficient(raw, backend.backend_id, latency_ms)
        texts[s] = data[s]
    return DiscourseReport(
        macrostructure=texts["macrostructure"],
        microstructure=texts["microstructure"],
        error_analysis=texts["error_analysis"],
        recommendation=Recommendation(flag=rec["flag"], rationale=rec["rationale"]),
        backend_id=backend.backend_id,
        latency_ms=latency_ms,
    )
