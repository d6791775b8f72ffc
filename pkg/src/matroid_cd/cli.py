"""Command-line front end.

The CLI does no matroid work itself: every subcommand builds a request,
sends it through the HTTP service, and renders the response.  By default
the service runs in-process; ``--server URL`` points the same client at
a remote instance started with ``matroid-cd serve``.

Exit status: 0 success (for ``audit``, all audits passed), 1 audits ran
with failures, 2 input or caps error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .reports import render_analyze, render_circuits, render_recognition

AUDIT_TIMEOUT = 3600.0


class InputError(Exception):
    """Client-side input problem; maps to exit status 2."""


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _first_meaningful_line(text: str) -> str:
    for raw in text.splitlines():
        line = raw.strip()
        if line:
            return line
    return ""


def input_payload(spec: str) -> dict:
    """Resolve a CLI input spec into the service's matroid-input body.

    Mirrors the file-or-name dispatch of the core parser: ``graph:@path``
    reads a graph file, any readable path is sent as its content, and
    everything else travels as a name spec.
    """
    spec = spec.strip()
    if spec.lower().startswith("graph:@"):
        path = spec[len("graph:@"):]
        content = _read_file(path)
        if _first_meaningful_line(content).lower() != "graph":
            raise InputError(f"{path}: a graph:@ file must start with a 'graph' header")
        return {"text": content}
    if os.path.isfile(spec):
        return {"text": _read_file(spec)}
    return {"name": spec}


class ServiceClient:
    """POSTs to the in-process app, or to ``--server`` when given."""

    def __init__(self, server: str | None = None) -> None:
        if server is None:
            import warnings

            with warnings.catch_warnings():
                # starlette warns about its own httpx shim at import time;
                # not actionable from here and noise on every invocation
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import create_app

            self._http = TestClient(create_app())
        else:
            import httpx

            self._http = httpx.Client(
                base_url=server.rstrip("/"), timeout=AUDIT_TIMEOUT
            )

    def post(self, path: str, payload: dict) -> tuple[int, dict]:
        resp = self._http.post(path, json=payload)
        try:
            body = resp.json()
        except ValueError:
            body = {"error": {"type": "bad-response", "message": resp.text[:500]}}
        return resp.status_code, body


def _error_text(body: dict) -> str:
    err = body.get("error")
    if isinstance(err, dict):
        msg = err.get("message", "request failed")
        if err.get("line") is not None:
            return f"{msg} (line {err['line']})"
        return str(msg)
    detail = body.get("detail")
    if isinstance(detail, list):
        # pydantic request validation
        parts = []
        for item in detail:
            loc = ".".join(str(x) for x in item.get("loc", []) if x != "body")
            parts.append(f"{loc}: {item.get('msg', 'invalid')}" if loc else item.get("msg", "invalid"))
        return "; ".join(parts)
    return str(detail or body)


def _emit_json(body: dict) -> None:
    print(json.dumps(body, indent=2, sort_keys=True))


def _render_audit(body: dict) -> str:
    lines = []
    for res in body["results"]:
        tag = "PASS" if res["passed"] else "FAIL"
        head = (
            f"[{tag}] {res['lemma']}: checked {res['checked']} "
            f"in {res['seconds']:.3f}s  ({res['corpus']})"
        )
        if res.get("note"):
            head += f"  note: {res['note']}"
        lines.append(head)
        for failure in res["failures"]:
            lines.append(f"    FAIL {failure['description']}")
            for row in failure["matroid"].splitlines():
                lines.append(f"        {row}")
    total = len(body["results"])
    failed = sum(1 for res in body["results"] if not res["passed"])
    if failed:
        lines.append(f"{failed} of {total} audits failed")
    else:
        lines.append(f"all {total} audits passed")
    return "\n".join(lines)


def _render_exminors(body: dict) -> str:
    plural = "s" if body["count"] != 1 else ""
    lines = [f"rank {body['rank']}: {body['count']} excluded series minor{plural}"]
    for i, entry in enumerate(body["entries"], start=1):
        verified = "yes" if entry["verified"] else "NO"
        lines.append("")
        lines.append(
            f"#{i}: {entry['size']} elements, family member rank {entry['rank']}, "
            f"verified excluded series minor: {verified}"
        )
        lines.append("  family member:")
        for row in entry["member"].splitlines():
            lines.append(f"    {row}")
        lines.append("  dual (the excluded series minor):")
        for row in entry["dual"].splitlines():
            lines.append(f"    {row}")
    return "\n".join(lines)


def _render_census(body: dict) -> str:
    kind = "simple connected" if body["simple"] else "connected"
    lines = [
        f"{kind} binary matroids with at most {body['max_elements']} elements: "
        f"{body['total']} isomorphism classes"
    ]
    for n in sorted(body["by_size"], key=int):
        lines.append(f"  {n} elements: {body['by_size'][n]}")
    if body["signature_deduped"]:
        lines.append(
            "  note: deduped by circuit-size signature beyond the exact-isomorphism "
            "bound; counts are approximate"
        )
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="emit the raw JSON response"
    )
    common.add_argument(
        "--server",
        metavar="URL",
        help="send requests to a running service instead of in-process",
    )

    parser = argparse.ArgumentParser(
        prog="matroid-cd",
        description="Circuit-difference analysis of binary matroids",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("analyze", "full report: facts, circuits, predicates, recognition"),
        ("circuits", "list the circuits"),
        ("recognize", "structural circuit-difference decision (regular inputs)"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument(
            "input",
            help="matrix/graph file, graph:@file reference, or name spec such as s8 or K:4",
        )

    p = sub.add_parser(
        "audit", parents=[common], help="run the lemma-by-lemma verification suite"
    )
    p.add_argument(
        "--max-elements",
        type=int,
        default=9,
        metavar="N",
        help="census size bound for the exhaustive corpora (default 9, cap 14)",
    )
    p.add_argument("--seed", type=int, default=0, metavar="S", help="corpus RNG seed")
    p.add_argument(
        "--lemma",
        metavar="ID",
        help="run only audits whose id matches (exact or dotted/dashed prefix)",
    )

    p = sub.add_parser(
        "exminors", parents=[common], help="excluded series minors by family rank"
    )
    p.add_argument(
        "--rank", type=int, required=True, metavar="R", help="family rank, 3 to 5"
    )

    p = sub.add_parser(
        "census", parents=[common], help="count connected binary matroids by size"
    )
    p.add_argument(
        "--elements", type=int, required=True, metavar="N", help="maximum element count"
    )
    p.add_argument(
        "--simple", action="store_true", help="restrict to simple matroids"
    )

    p = sub.add_parser("serve", help="run the HTTP service under uvicorn")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "serve":
        import uvicorn

        uvicorn.run("matroid_cd.service.app:app", host=args.host, port=args.port)
        return 0

    try:
        client = ServiceClient(args.server)

        if args.command in ("analyze", "circuits", "recognize"):
            payload = {"matroid": input_payload(args.input)}
            status, body = client.post(f"/{args.command}", payload)
            if status >= 400:
                print(f"error: {_error_text(body)}", file=sys.stderr)
                return 2
            if args.json:
                _emit_json(body)
            elif args.command == "analyze":
                print(render_analyze(body))
            elif args.command == "circuits":
                print(render_circuits(body))
            else:
                print(render_recognition(body))
            return 0

        if args.command == "audit":
            payload = {
                "max_elements": args.max_elements,
                "seed": args.seed,
                "lemma": args.lemma,
            }
            status, body = client.post("/audit", payload)
            if status >= 400:
                print(f"error: {_error_text(body)}", file=sys.stderr)
                return 2
            if args.json:
                _emit_json(body)
            else:
                print(_render_audit(body))
            return 0 if body["passed"] else 1

        if args.command == "exminors":
            status, body = client.post("/exminors", {"rank": args.rank})
            if status >= 400:
                print(f"error: {_error_text(body)}", file=sys.stderr)
                return 2
            if args.json:
                _emit_json(body)
            else:
                print(_render_exminors(body))
            return 0

        if args.command == "census":
            payload = {"elements": args.elements, "simple": args.simple}
            status, body = client.post("/census", payload)
            if status >= 400:
                print(f"error: {_error_text(body)}", file=sys.stderr)
                return 2
            if args.json:
                _emit_json(body)
            else:
                print(_render_census(body))
            return 0
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
