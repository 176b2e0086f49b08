"""Command-line front end: ``python -m c4c4det <subcommand> ...``.

Exit codes: 0 ok, 1 not a member, 2 usage, 3 internal mismatch, overflow or scan violations.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from .membership import classify
from .errors import FactorizationOverflow, InternalMismatch, NotAMember
from .forms import dG_factored
from .group import dG_direct
from .verify import (
    EXHAUSTIVE_01,
    RANDOM_BOX,
    ScanConfig,
    completeness_scan,
    default_shards,
    run_property_suite,
    soundness_scan,
)
from .witness import synthesize

OK, NOT_A_MEMBER, ERROR = "ok", "not-a-member", "error"
EXIT_CODES = {OK: 0, NOT_A_MEMBER: 1, ERROR: 3}


@dataclass
class CommandResult:
    status: str
    payload: Any
    lines: list[Any] | None = None  # JSONL records, when requested
    pretty: bool = False
    out: str | None = None

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


def _eval(args) -> CommandResult:
    fb = dG_factored(args.a)
    value = dG_direct(args.a)
    if value != fb.total:
        raise InternalMismatch(f"direct {value} != factored {fb.total}")
    return CommandResult(OK, {"value": value, "d4b": fb.d4b, "d4c": fb.d4c, "n0": fb.n0, "n1": fb.n1})


def _classify(args) -> CommandResult:
    c = classify(args.n)
    return CommandResult(OK if c.in_s else NOT_A_MEMBER, c.to_json())


def _witness(args) -> CommandResult:
    try:
        w = synthesize(args.n)
    except NotAMember as exc:
        return CommandResult(NOT_A_MEMBER, {"value": args.n, "in_S": False, "reason": exc.reason})
    return CommandResult(OK, w.to_json())


def _report_json(rep, histogram: bool) -> dict[str, Any]:
    out = rep.to_json()
    if not histogram:
        out.pop("value_histogram")
    return out


def _finish_scan(reports: dict[str, Any], args) -> CommandResult:
    status = OK if all(r.ok for r in reports.values()) else ERROR
    payload = {name: _report_json(r, args.histogram) for name, r in reports.items()}
    lines = None
    if args.jsonl:
        lines = [
            dict(v, scan=name) for name, r in reports.items() for v in r.to_json()["violations"]
        ]
        lines.append({"summary": {name: {k: v for k, v in p.items() if k != "violations"}
                                  for name, p in payload.items()}})
    return CommandResult(status, payload, lines)


def _verify(args) -> CommandResult:
    cfg = ScanConfig(
        mode=EXHAUSTIVE_01 if args.mode == "exhaustive01" else RANDOM_BOX,
        box_radius=args.radius,
        samples=args.samples,
        seed=args.seed,
        shards=args.shards,
    )
    return _finish_scan({"properties": run_property_suite(cfg), "soundness": soundness_scan(cfg)}, args)


def _scan_complete(args) -> CommandResult:
    rep = completeness_scan(args.odd_bound, args.even_bound, args.a_bound)
    return _finish_scan({"completeness": rep}, args)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument("--out", metavar="FILE", help="also write the JSON document to FILE")
    scans = argparse.ArgumentParser(add_help=False)
    scans.add_argument("--jsonl", action="store_true", help="one JSON object per violation")
    scans.add_argument("--histogram", action="store_true", help="include the value histogram")

    parser = argparse.ArgumentParser(prog="c4c4det", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate the group determinant")
    p.add_argument("a", nargs=16, type=int, metavar="a_i")
    p.set_defaults(func=_eval)

    p = sub.add_parser("classify", parents=[common], help="decide membership of N")
    p.add_argument("n", type=int, metavar="N")
    p.set_defaults(func=_classify)

    p = sub.add_parser("witness", parents=[common], help="construct a witness tuple for N")
    p.add_argument("n", type=int, metavar="N")
    p.set_defaults(func=_witness)

    p = sub.add_parser("verify", parents=[common, scans], help="property and soundness scans")
    p.add_argument("--mode", choices=("exhaustive01", "random"), default="random")
    p.add_argument("--radius", type=int, default=3)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--shards", type=int, default=default_shards())
    p.set_defaults(func=_verify)

    p = sub.add_parser("scan-complete", parents=[common, scans], help="witness every member in range")
    p.add_argument("--odd-bound", type=int, required=True)
    p.add_argument("--even-bound", type=int, required=True)
    p.add_argument("--a-bound", type=int, default=None, help="bound for A-elements (default: odd bound)")
    p.set_defaults(func=_scan_complete)
    return parser


def run(argv: Sequence[str]) -> CommandResult:
    """Parse and execute; usage errors raise SystemExit(2) from argparse."""
    args = build_parser().parse_args(list(argv))
    try:
        result = args.func(args)
    except FactorizationOverflow as exc:
        result = CommandResult(ERROR, {"error": "FactorizationOverflow", "value": exc.value})
    except InternalMismatch as exc:
        result = CommandResult(ERROR, {"error": "InternalMismatch", "detail": str(exc)})
    result.pretty = args.pretty
    result.out = args.out
    return result


def _pretty(payload: Any, indent: str = "") -> str:
    if isinstance(payload, dict):
        rows = []
        for k, v in payload.items():
            if isinstance(v, dict) and v:
                rows.append(f"{indent}{k}:")
                rows.append(_pretty(v, indent + "  "))
            elif isinstance(v, list):
                rows.append(f"{indent}{k}: " + " ".join(
                    json.dumps(x) if isinstance(x, dict) else str(x) for x in v))
            else:
                rows.append(f"{indent}{k}: {v}")
        return "\n".join(rows)
    return f"{indent}{payload}"


def render(result: CommandResult) -> str:
    if result.lines is not None:
        return "\n".join(json.dumps(line) for line in result.lines)
    if result.pretty:
        return _pretty(result.payload)
    return json.dumps(result.payload)


def main(argv: Sequence[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    text = render(result)
    print(text)
    if result.out:
        with open(result.out, "w") as fh:
            fh.write(json.dumps(result.payload) + "\n")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
