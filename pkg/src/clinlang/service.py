"""Stateless HTTP service exposing the analysis pipelines.

Every endpoint shares the same pipeline code as the CLI, so responses are
byte-identical to CLI output for the same input and timestamp.  Uploaded
audio is written to a uniquely named temporary file that is deleted before
the response is returned, on success and on every error path; request
bodies are never logged.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, File, Form, Request, UploadFile
from fastapi.responses import JSONResponse, PlainTextResponse, Response
from pydantic import BaseModel

from . import clinscore, lexsem, pipeline, report, textcore
from .discourse import (
    DiscourseBackend,
    HttpBackend,
    StubBackend,
    analyze_discourse,
    build_prompt,
)
from .errors import (
    BackendError,
    ConfigurationError,
    InputError,
    ResourceError,
    ToolkitError,
)

DEFAULT_MAX_UPLOAD = 50 * 1024 * 1024


@dataclass
class ServiceConfig:
    registry: Path | None = None
    max_upload_bytes: int = DEFAULT_MAX_UPLOAD
    request_timeout_s: float = 60.0
    discourse_backend: str = "stub"
    temp_dir: Path = field(default_factory=lambda: Path(tempfile.gettempdir()))

    def __post_init__(self):
        if self.max_upload_bytes <= 0 or self.request_timeout_s <= 0:
            raise ConfigurationError("limits must be positive")
        self.temp_dir = Path(self.temp_dir)
        probe = self.temp_dir / f".probe-{os.getpid()}"
        try:
            probe.write_bytes(b"")
            probe.unlink()
        except OSError:
            raise ConfigurationError(f"temp directory {self.temp_dir} not writable")


def _status_for(e: ToolkitError) -> int:
    if isinstance(e, InputError):
        return 400
    if isinstance(e, BackendError):
        return 502
    if isinstance(e, ResourceError):
        return 500
    return 500


class TextRequest(BaseModel):
    text: str
    language: str
    keep_fillers: bool = True
    mattr_window: int = lexsem.DEFAULT_MATTR_WINDOW
    timestamp: str = pipeline.FIXED_TIMESTAMP
    discourse: bool = False


class ScoreRequest(BaseModel):
    items_csv: str
    language: str
    orthographic: bool = False


class IpaRequest(BaseModel):
    words: list[str]
    language: str


class DiscourseRequest(BaseModel):
    report: dict
    transcript: str
    language: str


def _make_backend(name: str) -> DiscourseBackend:
    if name == "http":
        return HttpBackend()
    return StubBackend()


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig()
    app = FastAPI(title="clinlang", version=report.TOOLKIT_VERSION)

    @app.exception_handler(ToolkitError)
    async def _toolkit_error(request: Request, e: ToolkitError):
        return JSONResponse(status_code=_status_for(e), content=e.to_dict())

    def _report_response(rep: report.AssessmentReport) -> Response:
        return Response(
            content=report.serialize_report(rep, "json"),
            media_type="application/json",
        )

    @app.get("/v1/languages")
    def languages():
        langs = textcore.list_languages(config.registry)
        return Response(
            content=report.canonical_json(langs) + "\n",
            media_type="application/json",
        )

    @app.post("/v1/analyze/text")
    def analyze_text(body: TextRequest):
        backend = _make_backend(config.discourse_backend) if body.discourse else None
        rep = pipeline.analyze_text(
            body.text,
            body.language,
            keep_fillers=body.keep_fillers,
            mattr_window=body.mattr_window,
            registry=config.registry,
            timestamp=body.timestamp,
            discourse_backend=backend,
        )
        return _report_response(rep)

    @app.post("/v1/analyze/audio")
    async def analyze_audio(
        file: UploadFile = File(...),
        language: str = Form(...),
        transcript: str | None = Form(None),
        keep_fillers: bool = Form(True),
        mattr_window: int = Form(lexsem.DEFAULT_MATTR_WINDOW),
        timestamp: str = Form(pipeline.FIXED_TIMESTAMP),
    ):
        fd, tmp_name = tempfile.mkstemp(suffix=".wav", dir=config.temp_dir)
        tmp_path = Path(tmp_name)
        try:
            written = 0
            with os.fdopen(fd, "wb") as out:
                while chunk := await file.read(1 << 20):
                    written += len(chunk)
                    if written > config.max_upload_bytes:
                        return JSONResponse(
                            status_code=413,
                            content={
                                "code": "payload-too-large",
                                "message": f"upload exceeds {config.max_upload_bytes} bytes",
                            },
                        )
                    out.write(chunk)
            rep = pipeline.analyze_audio(
                tmp_path,
                language,
                transcript=transcript,
                keep_fillers=keep_fillers,
                mattr_window=mattr_window,
                registry=config.registry,
                timestamp=timestamp,
            )
            return _report_response(rep)
        finally:
            tmp_path.unlink(missing_ok=True)

    @app.post("/v1/score/{mode}")
    def score(mode: str, body: ScoreRequest):
        if mode not in ("spelling", "phonological", "semantic"):
            raise InputError(f"unknown scoring mode {mode!r}")
        pack = pipeline.load_pack(body.language, config.registry)
        kwargs: dict = {}
        if mode == "phonological":
            kwargs["feature_table"] = clinscore.FeatureTable.load()
            if body.orthographic:
                from .phonlex import to_ipa

                kwargs["g2p"] = lambda w: to_ipa(w.lower(), pack).segments
        elif mode == "semantic":
            if pack.embeddings_path is None:
                raise ResourceError(
                    f"pack {pack.id!r} ships no embeddings for semantic scoring"
                )
            kwargs["embeddings"] = lexsem.load_embeddings(pack.embeddings_path)
        csv_out = clinscore.score_batch(body.items_csv, mode, **kwargs)
        return PlainTextResponse(csv_out, media_type="text/csv")

    @app.post("/v1/ipa")
    def ipa(body: IpaRequest):
        result = pipeline.ipa_words(body.words, body.language, config.registry)
        return Response(
            content=report.canonical_json(result) + "\n",
            media_type="application/json",
        )

    @app.post("/v1/discourse")
    def discourse_endpoint(body: DiscourseRequest):
        pack = pipeline.load_pack(body.language, config.registry)
        rep = report.AssessmentReport(
            meta=body.report.get("meta", {}),
            blocks=body.report.get("blocks", {}),
            warnings=tuple(body.report.get("warnings", ())),
        )
        payload = build_prompt(rep, body.transcript, pack)
        backend = _make_backend(config.discourse_backend)
        dreport = analyze_discourse(payload, backend)
        return Response(
            content=report.canonical_json(dreport.to_dict()) + "\n",
            media_type="application/json",
        )

    return app
