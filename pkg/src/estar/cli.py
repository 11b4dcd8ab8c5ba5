"""Command line: ``estar gallery``, ``estar check`` and ``estar verify``.

Exit codes: 0 when the property holds (or the certificate verifies), 1 when
it fails, 2 for undecidable-at-caps, malformed input, or unknown names.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, gallery
from .certificates import dumps, verify_certificate
from .checks import PROPERTIES, Caps, check_property
from .errors import EstarError
from .graph import parse_edge_list, to_dot
from .limits import DEFAULT_MAX_EDGES, DEFAULT_MAX_SUBSET_BITS, DEFAULT_MAX_VERTICES, ENV_MAX_BITS

HOLDS, FAILS, UNDECIDED = 0, 1, 2


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_gallery(args: argparse.Namespace) -> int:
    if args.list or not args.name:
        for name in gallery.NAMES:
            print(name)
        return HOLDS
    data = gallery.bundle(args.name, max_bits=args.max_subset_bits)
    if args.dot:
        Path(args.dot).write_text(data["dot"], encoding="utf-8")
    _emit(dumps(data), args.out)
    return HOLDS


def cmd_check(args: argparse.Namespace) -> int:
    text = sys.stdin.read() if args.graph == "-" else Path(args.graph).read_text(encoding="utf-8")
    graph = parse_edge_list(text, args.label_base)
    if args.dot:
        Path(args.dot).write_text(to_dot(graph, "G", args.label_base), encoding="utf-8")
    caps = Caps(args.max_vertices, args.max_edges, args.max_subset_bits)
    result = check_property(graph, args.property, caps, args.label_base)
    print(result.message, file=sys.stderr)
    if result.certificate is not None:
        _emit(dumps(result.certificate), args.out)
    return result.status


def cmd_verify(args: argparse.Namespace) -> int:
    text = sys.stdin.read() if args.certificate == "-" else Path(args.certificate).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise EstarError(f"not JSON: {exc}") from None
    if not isinstance(data, dict):
        raise EstarError("certificate must be a JSON object")
    report = verify_certificate(data)
    if report.ok:
        print(f"PASS: {len(report.checks)} claims re-checked")
        return HOLDS
    for line in report.failures():
        print(f"FAIL {line}")
    return FAILS


def _add_caps(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES, help="vertex cap (default %(default)s)")
    p.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES, help="edge cap (default %(default)s)")
    p.add_argument(
        "--max-subset-bits",
        type=int,
        default=None,
        help=f"largest exhaustive subset scan, as a power of two (default ${ENV_MAX_BITS} or {DEFAULT_MAX_SUBSET_BITS})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="estar", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gallery", help="emit a named counterexample with its certificates")
    p.add_argument("name", nargs="?", help="gstar, circulant-N-1-3, or line-complement:<name>")
    p.add_argument("--list", action="store_true", help="list the standard entries")
    p.add_argument("--out", help="write the JSON bundle here instead of stdout")
    p.add_argument("--dot", help="also write the graph in DOT format to this file")
    _add_caps(p)
    p.set_defaults(func=cmd_gallery)

    p = sub.add_parser("check", help="decide one property of a graph given as an edge list")
    p.add_argument("graph", help="edge-list file ('n m' then m lines 'u v'), or - for stdin")
    p.add_argument("--property", required=True, choices=PROPERTIES)
    p.add_argument("--label-base", type=int, default=0, help="first vertex label in the file (default 0)")
    p.add_argument("--out", help="write the certificate here instead of stdout")
    p.add_argument("--dot", help="also write the graph in DOT format to this file")
    _add_caps(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="re-check a certificate from scratch")
    p.add_argument("certificate", help="JSON certificate or gallery bundle, or - for stdin")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (EstarError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return UNDECIDED


if __name__ == "__main__":
    raise SystemExit(main())
