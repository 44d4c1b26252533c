"""Command-line front door: parse, classify, quantize, trace, serve.

Exit codes: 0 success, 1 domain error, 2 usage error.  The serve port can
be overridden with the PARADOX_PORT environment variable.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .dsl import format_system, parse
from .errors import LiarError
from .inference import TruthToken, classification_to_json, classify, walk
from .quantize import is_double_liar_a, model_to_json, quantize_cycle, quantize_double_liar_a
from .session import create_session


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liarsim",
        description="Classify self-referential sentence systems and simulate their quantized truth dynamics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="echo the canonical form of a .liar file")
    p.add_argument("file")

    p = sub.add_parser("classify", help="brute-force truth-assignment classification (JSON)")
    p.add_argument("file")

    p = sub.add_parser("quantize", help="write the quantum model as JSON")
    p.add_argument("file")
    p.add_argument("--case-a-tensor", action="store_true",
                   help="use the 16-dim tensor embedding (classic double liar only)")
    p.add_argument("--out", required=True, help="output path for the model JSON")

    p = sub.add_parser("trace", help="token probabilities over a time window")
    p.add_argument("file")
    p.add_argument("--measure", metavar="S=VALUE",
                   help="hypothesize sentence S true/false before tracing, e.g. 1=false")
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--t1", type=float, required=True)
    p.add_argument("--dt", type=float, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("serve", help="run the HTTP/JSON session service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--static", metavar="DIR", help="also serve web console assets from DIR")

    return parser


def _read_system(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def _parse_measure(arg: str) -> tuple[int, bool]:
    sentence, sep, value = arg.partition("=")
    if not sep or not sentence.strip().isdigit() or value.strip().lower() not in ("true", "false"):
        raise LiarError(f"--measure expects S=true|false, got {arg!r}")
    return int(sentence), value.strip().lower() == "true"


def run_command(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        if args.command == "parse":
            print(format_system(_read_system(args.file)))
        elif args.command == "classify":
            system = _read_system(args.file)
            print(json.dumps(classification_to_json(system, classify(system)), indent=2))
        elif args.command == "quantize":
            system = _read_system(args.file)
            if args.case_a_tensor:
                if not is_double_liar_a(system):
                    raise LiarError("--case-a-tensor requires the classic double liar system")
                model, _ = quantize_double_liar_a()
            else:
                w = walk(system, TruthToken(1, True))
                model = quantize_cycle(system, w.steps[w.tail_len])
            with open(args.out, "w", encoding="utf-8") as fh:
                json.dump(model_to_json(model), fh)
                fh.write("\n")
        elif args.command == "trace":
            session = create_session(_read_system(args.file))
            if args.measure:
                sentence, value = _parse_measure(args.measure)
                session.hypothesize(sentence, value)
            table = session.trace(args.t0, args.t1, args.dt)
            if args.format == "csv":
                sys.stdout.write(table.to_csv())
            else:
                print(json.dumps(table.to_json()))
        elif args.command == "serve":
            from .service import serve  # deferred: pulls in fastapi/uvicorn

            port = int(os.environ.get("PARADOX_PORT", args.port))
            serve(port, args.static)
    except LiarError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
