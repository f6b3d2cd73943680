"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 internal inconsistency.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from .curve_family import CurveParams
from .cyclic_genvec import MOVE_SETS, EnumerationBoundExceeded
from .fields import QuadElem
from .reports import (
    GENERIC_CAVEAT,
    classify_report,
    conformal_report,
    equiv_report,
    family_report,
    harvey_report,
)
from .signature import InconsistentDataError, Signature

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _lambda_quad(text: str) -> QuadElem:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected p,q,d")
    try:
        p, q, d = Fraction(parts[0]), Fraction(parts[1]), int(parts[2])
        return QuadElem(p, q, d)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superelliptic",
        description="Exact checks for a family of superelliptic curves and their group actions.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="also write the JSON report to this path")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", parents=[common], help="case, genus, group and subgroup actions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    lam = p.add_mutually_exclusive_group()
    lam.add_argument("--lambda", dest="lam", type=_fraction, help="rational lambda p/q")
    lam.add_argument("--lambda-quad", dest="lam_quad", type=_lambda_quad, help="p + q sqrt(d) as p,q,d")
    lam.add_argument("--symbolic", action="store_true", help="keep lambda symbolic (default)")

    p = sub.add_parser("classify", parents=[common], help="orbits of cyclic generating vectors")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--signature", required=True, help='"gamma,m1,...,mr"')
    p.add_argument("--moves", choices=MOVE_SETS, default="scalar")

    p = sub.add_parser("equiv", parents=[common], help="direct topological equivalence of two vectors")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--v1", type=_int_list, required=True)
    p.add_argument("--v2", type=_int_list, required=True)
    p.add_argument("--moves", choices=MOVE_SETS, default="scalar")

    p = sub.add_parser("conformal", parents=[common], help="Möbius obstruction search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)

    p = sub.add_parser("harvey", parents=[common], help="xi from a rotation number omega_m^eta")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--eta", type=int, required=True)
    return parser


def run(args: argparse.Namespace) -> dict[str, Any]:
    caveats: list[str] = []
    if args.command == "family":
        lam = args.lam if args.lam is not None else args.lam_quad
        inputs = {"n": args.n, "a": args.a, "lambda": "symbolic" if lam is None else str(lam)}
        results = family_report(CurveParams(args.n, args.a, lam))
        caveats = results.pop("caveats")
    elif args.command == "classify":
        inputs = {"n": args.n, "signature": args.signature, "moves": args.moves}
        results = classify_report(args.n, Signature.from_text(args.signature), args.moves)
    elif args.command == "equiv":
        inputs = {"n": args.n, "v1": list(args.v1), "v2": list(args.v2), "moves": args.moves}
        results = equiv_report(args.n, args.v1, args.v2, args.moves)
    elif args.command == "conformal":
        inputs = {"n": args.n, "a": args.a}
        results = conformal_report(args.n, args.a)
        caveats = [GENERIC_CAVEAT]
    else:
        inputs = {"m": args.m, "eta": args.eta}
        results = harvey_report(args.m, args.eta)
    return {"command": args.command, "inputs": inputs, "results": results, "caveats": caveats}


def _scalar(v: Any) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    return json.dumps(v) if isinstance(v, (list, dict)) else str(v)


def render_text(obj: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if (isinstance(v, dict) and v) or (isinstance(v, list) and v and isinstance(v[0], (dict, list))):
                lines.append(f"{pad}{k}:")
                lines += render_text(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, dict):
                lines.append(f"{pad}-")
                lines += render_text(item, indent + 1)
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(pad + _scalar(obj))
    return lines


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        report = run(args)
    except InconsistentDataError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, ZeroDivisionError, EnumerationBoundExceeded) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    as_json = json.dumps(report, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(as_json + "\n")
    print(as_json if args.format == "json" else "\n".join(render_text(report)))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
