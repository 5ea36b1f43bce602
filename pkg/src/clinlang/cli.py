"""Command-line interface over the shared analysis pipeline.

Results go to stdout (canonical JSON by default, ``--format csv``),
diagnostics to stderr as JSON error objects.  Exit codes: 0 success,
1 input or resource error, 2 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import clinscore, lexsem, pipeline, report, textcore, textgrid
from .discourse import HttpBackend, StubBackend
from .errors import BackendError, InputError, ResourceError, ToolkitError


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _emit_report(rep: report.AssessmentReport, fmt: str) -> None:
    sys.stdout.buffer.write(report.serialize_report(rep, fmt))
    sys.stdout.buffer.flush()


def _discourse_backend(name: str | None):
    if name is None or name == "none":
        return None
    if name == "stub":
        return StubBackend()
    if name == "http":
        return HttpBackend()
    raise InputError(f"unknown discourse backend {name!r}")


def _add_common(p: argparse.ArgumentParser, needs_lang: bool = True) -> None:
    if needs_lang:
        p.add_argument("--lang", required=True, help="language pack id")
    p.add_argument("--registry", default=None, help="path to the pack registry")
    p.add_argument(
        "--format", choices=("json", "csv"), default="json", help="output format"
    )


def _add_report_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--timestamp",
        default=pipeline.FIXED_TIMESTAMP,
        help="timestamp written into the report (fixed for reproducible output)",
    )
    p.add_argument(
        "--drop-fillers",
        action="store_true",
        help="remove filler tokens before analysis",
    )
    p.add_argument(
        "--mattr-window",
        type=int,
        default=lexsem.DEFAULT_MATTR_WINDOW,
        help="MATTR window size in words",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clinlang",
        description="Multilingual clinical language assessment toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze-text", help="full written-language analysis")
    _add_common(p)
    _add_report_opts(p)
    p.add_argument("--in", dest="infile", required=True, help="text file or -")
    p.add_argument(
        "--discourse",
        choices=("none", "stub", "http"),
        default="none",
        help="append a discourse block via the chosen backend",
    )

    p = sub.add_parser("analyze-audio", help="acoustic (and optional text) analysis")
    _add_common(p)
    _add_report_opts(p)
    p.add_argument("--in", dest="infile", required=True, help="PCM-16 WAV file")
    p.add_argument("--transcript", default=None, help="optional transcript text file")

    for cmd, mode in (
        ("score-spelling", "spelling"),
        ("score-phon", "phonological"),
        ("score-semantic", "semantic"),
    ):
        p = sub.add_parser(cmd, help=f"batch {mode} scoring of a CSV of items")
        _add_common(p)
        p.add_argument(
            "--in", dest="infile", required=True, help="CSV with item_id,target,response"
        )
        if mode == "phonological":
            p.add_argument(
                "--orthographic",
                action="store_true",
                help="items are orthographic; convert with the pack's G2P first",
            )
        p.set_defaults(mode=mode)

    p = sub.add_parser("ipa", help="grapheme-to-phoneme conversion")
    _add_common(p)
    p.add_argument("words", nargs="*", help="words to convert")
    p.add_argument("--in", dest="infile", default=None, help="file with one word per line")

    p = sub.add_parser("textgrid", help="validate a TextGrid and export it as CSV")
    _add_common(p, needs_lang=False)
    p.add_argument("--in", dest="infile", required=True, help="TextGrid file")
    p.add_argument(
        "--validate-only", action="store_true", help="parse and validate, no output"
    )

    p = sub.add_parser("languages", help="list available language packs")
    _add_common(p, needs_lang=False)

    p = sub.add_parser("serve", help="run the HTTP service")
    _add_common(p, needs_lang=False)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument(
        "--discourse",
        choices=("none", "stub", "http"),
        default="stub",
        help="discourse backend exposed by /v1/discourse",
    )

    return parser


def _run(args: argparse.Namespace) -> int:
    cmd = args.command

    if cmd == "languages":
        langs = textcore.list_languages(pipeline.registry_path(args.registry))
        print(report.canonical_json(langs))
        return 0

    if cmd == "analyze-text":
        rep = pipeline.analyze_text(
            _read_input(args.infile),
            args.lang,
            keep_fillers=not args.drop_fillers,
            mattr_window=args.mattr_window,
            registry=args.registry,
            timestamp=args.timestamp,
            discourse_backend=_discourse_backend(args.discourse),
        )
        _emit_report(rep, args.format)
        return 0

    if cmd == "analyze-audio":
        transcript = (
            _read_input(args.transcript) if args.transcript is not None else None
        )
        rep = pipeline.analyze_audio(
            args.infile,
            args.lang,
            transcript=transcript,
            keep_fillers=not args.drop_fillers,
            mattr_window=args.mattr_window,
            registry=args.registry,
            timestamp=args.timestamp,
        )
        _emit_report(rep, args.format)
        return 0

    if cmd in ("score-spelling", "score-phon", "score-semantic"):
        pack = pipeline.load_pack(args.lang, args.registry)
        kwargs: dict = {}
        if args.mode == "phonological":
            kwargs["feature_table"] = clinscore.FeatureTable.load()
            if getattr(args, "orthographic", False):
                from .phonlex import to_ipa

                kwargs["g2p"] = lambda w: to_ipa(w.lower(), pack).segments
        elif args.mode == "semantic":
            if pack.embeddings_path is None:
                raise ResourceError(
                    f"pack {pack.id!r} ships no embeddings for semantic scoring"
                )
            kwargs["embeddings"] = lexsem.load_embeddings(pack.embeddings_path)
        sys.stdout.write(
            clinscore.score_batch(_read_input(args.infile), args.mode, **kwargs)
        )
        return 0

    if cmd == "ipa":
        words = list(args.words)
        if args.infile:
            words.extend(
                w.strip() for w in _read_input(args.infile).splitlines() if w.strip()
            )
        if not words:
            raise InputError("no words given (positional arguments or --in)")
        result = pipeline.ipa_words(words, args.lang, args.registry)
        print(report.canonical_json(result))
        return 0

    if cmd == "textgrid":
        grid = textgrid.parse_textgrid(Path(args.infile).read_bytes())
        if not args.validate_only:
            sys.stdout.write(textgrid.textgrid_to_csv(grid))
        return 0

    if cmd == "serve":
        import uvicorn

        from .service import ServiceConfig, create_app

        config = ServiceConfig(
            registry=pipeline.registry_path(args.registry),
            discourse_backend=args.discourse,
        )
        uvicorn.run(create_app(config), host=args.host, port=args.port)
        return 0

    raise InputError(f"unknown command {cmd!r}")  # pragma: no cover


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except (InputError, ResourceError, BackendError) as e:
        print(json.dumps(e.to_dict(), sort_keys=True), file=sys.stderr)
        return 1
    except ToolkitError as e:
        print(json.dumps(e.to_dict(), sort_keys=True), file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(
            json.dumps(
                {"code": "file-not-found", "message": str(e)}, sort_keys=True
            ),
            file=sys.stderr,
        )
        return 1
    except Exception as e:  # anything else is an internal error
        print(
            json.dumps(
                {"code": "internal-error", "message": f"{type(e).__name__}: {e}"},
                sort_keys=True,
            ),
            file=sys.stderr,
        )
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
