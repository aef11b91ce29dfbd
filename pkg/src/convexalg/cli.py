"""Command-line front end.

Subcommands mirror the HTTP endpoints and call the same handlers
in-process, so the CLI works offline and the two surfaces cannot
drift.  Exit codes: 0 all checks passed, 1 a counterexample was found,
2 a precondition failed (unknown instance, malformed input, dominance
violation, ...), 64 usage error.  CONVEXALG_SEED sets the default
--seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, NoReturn

from .errors import ConvexAlgError, ParseError
from .service import handlers

SEED_ENV_VAR = "CONVEXALG_SEED"


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract here is 64."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(64, f"{self.prog}: error: {message}\n")


def _positive_int(raw: str) -> int:
    value = int(raw)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonneg_int(raw: str) -> int:
    value = int(raw)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV_VAR, "0")
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}") from None


def _read_json(path: str) -> Any:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from None


def _emit(data: dict, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _report_text(data: dict) -> str:
    lines = []
    for entry in data["laws"]:
        status = "PASS" if entry["pass"] else "FAIL"
        lines.append(f"{status} {entry['law']}: {entry['failures']}/{entry['cases']} failures")
        if entry["counterexample"] is not None:
            kv = ", ".join(f"{k}={v}" for k, v in entry["counterexample"].items())
            lines.append(f"     counterexample: {kv}")
    verdict = "all laws hold" if data["ok"] else "counterexamples found"
    lines.append(f"result: {verdict}")
    return "\n".join(lines)


def _parse_interval(raw: str) -> tuple[float, float]:
    try:
        lo_s, hi_s = raw.split(":", 1)
        return float(lo_s), float(hi_s)
    except ValueError:
        raise ParseError(f"interval must look like LO:HI, got {raw!r}") from None


def cmd_laws(args: argparse.Namespace) -> int:
    data = handlers.run_laws(args.instance, seed=args.seed, cases=args.cases)
    _emit(data, args.format, _report_text(data))
    return 0 if data["ok"] else 1


def cmd_barycenter(args: argparse.Namespace) -> int:
    payload = _read_json(args.input)
    if not isinstance(payload, dict) or "weights" not in payload or "points" not in payload:
        raise ParseError("barycenter input needs 'weights' and 'points'")
    data = handlers.barycenter(args.instance, payload["weights"], payload["points"])
    _emit(data, args.format, json.dumps(data["point"]))
    return 0


def cmd_hull_split(args: argparse.Namespace) -> int:
    payload = _read_json(args.input)
    if not isinstance(payload, dict):
        raise ParseError("hull-split input must be a JSON object")
    missing = [k for k in ("witness", "x_indices", "default_x", "default_y")
               if k not in payload]
    if missing:
        raise ParseError(f"hull-split input lacks {', '.join(missing)}")
    data = handlers.hull_split(args.instance, payload["witness"],
                               payload["x_indices"], payload["default_x"],
                               payload["default_y"])
    text = "\n".join([
        f"p = {data['p']}",
        f"x = {json.dumps(data['x'])}",
        f"y = {json.dumps(data['y'])}",
        f"point = {json.dumps(data['point'])}",
        f"reconstructed = {str(data['reconstructed']).lower()}",
    ])
    _emit(data, args.format, text)
    return 0 if data["reconstructed"] else 1


def cmd_divergence(args: argparse.Namespace) -> int:
    data = handlers.divergence(_read_json(args.p), _read_json(args.q))
    _emit(data, args.format, f"divergence = {data['divergence']} bits")
    return 0


def cmd_convex_check(args: argparse.Namespace) -> int:
    lo, hi = _parse_interval(args.interval)
    data = handlers.convex_check(args.fn, mode=args.mode, lo=lo, hi=hi,
                                 cases=args.cases, seed=args.seed,
                                 slack=args.slack, grid_points=args.grid)
    _emit(data, args.format, _report_text(data))
    return 0 if data["ok"] else 1


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser(default_seed: int) -> argparse.ArgumentParser:
    parser = _Parser(prog="convexalg",
                     description="Exact law checkers and calculators for convex algebra")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["text", "json"], default="text",
                       help="output format (default: text)")

    p = sub.add_parser("laws", help="run the full law suite on an instance")
    p.add_argument("--instance", required=True, help="instance name (see /instances)")
    p.add_argument("--seed", type=int, default=default_seed)
    p.add_argument("--cases", type=_positive_int, default=500)
    add_format(p)
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("barycenter", help="evaluate a weighted combination")
    p.add_argument("--instance", required=True)
    p.add_argument("--input", default="-",
                   help="JSON file with 'weights' and 'points' ('-' for stdin)")
    add_format(p)
    p.set_defaults(func=cmd_barycenter)

    p = sub.add_parser("hull-split", help="split a hull witness along a tagged subset")
    p.add_argument("--instance", required=True)
    p.add_argument("--input", default="-",
                   help="JSON file with witness, x_indices, default_x, default_y")
    add_format(p)
    p.set_defaults(func=cmd_hull_split)

    p = sub.add_parser("divergence", help="divergence of two distributions (bits)")
    p.add_argument("p", help="JSON file for P ({'weights': [...]})")
    p.add_argument("q", help="JSON file for Q")
    add_format(p)
    p.set_defaults(func=cmd_divergence)

    p = sub.add_parser("convex-check", help="sample a convexity/concavity inequality")
    p.add_argument("--fn", required=True, help="catalog function name")
    p.add_argument("--mode", choices=["convex", "concave"], default="convex")
    p.add_argument("--interval", default="1e-6:1e6", help="sampling interval LO:HI")
    p.add_argument("--cases", type=_positive_int, default=10_000)
    p.add_argument("--seed", type=int, default=default_seed)
    p.add_argument("--slack", type=float, default=1e-9)
    p.add_argument("--grid", type=_nonneg_int, default=0,
                   help="also run the second-derivative test on this many grid points")
    add_format(p)
    p.set_defaults(func=cmd_convex_check)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        parser = build_parser(_default_seed())
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else 64
        return args.func(args)
    except ConvexAlgError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
