"""Command-line surface.

Exit codes: 0 pass / success, 1 verification failure, 2 usage error,
3 domain error (for instance too few variables for a column).
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import parse_partition
from .crystal import crystal_graph
from .csp import (
    ShapeNotDivisible,
    macdonald_csp_suite,
    orbits,
    refined_csp_suite,
    sigma_csp_suite,
)
from .fillings import SkewShape, macdonald_e
from .hall_littlewood import kostka_foulkes
from .llt import VStripTuple, llt_poly, mininv
from .rsk_charge import BurgeWord, rsk
from .symfunc import to_schur

USAGE_ERROR = 2
DOMAIN_ERROR = 3


def _parse_shape(text: str) -> SkewShape:
    try:
        return SkewShape.parse(text)
    except ValueError as exc:
        raise SystemExit_usage(f"bad shape {text!r}: {exc}")


def SystemExit_usage(msg: str) -> SystemExit:
    print(f"error: {msg}", file=sys.stderr)
    return SystemExit(USAGE_ERROR)


def cmd_e(args: argparse.Namespace) -> int:
    shape = _parse_shape(args.shape)
    if any(h > args.m for h in shape.col_heights()):
        print(
            f"error: m={args.m} is smaller than the longest column of {shape}",
            file=sys.stderr,
        )
        return DOMAIN_ERROR
    poly = macdonald_e(shape, args.m)
    if args.basis == "schur":
        poly = to_schur(poly)
    if args.format == "json":
        print(json.dumps(poly.to_json()))
    else:
        print(poly.text())
    return 0


def _print_report(report, as_json: bool) -> int:
    if as_json:
        print(json.dumps(report.to_json()))
    else:
        for key, val in report.triple.items():
            print(f"{key}: {val}")
        print(report.table())
        for entry in report.lyndon:
            print(
                f"  lyndon d={entry['d']}: f_(n/d)(1)={entry['f_smaller_at_1']} "
                f"f(xi^d)={entry['f_at_root']} {'ok' if entry['ok'] else 'MISMATCH'}"
            )
        if not report.applicable:
            print(f"NOT-APPLICABLE: {report.witness}")
        else:
            print("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


def cmd_csp(args: argparse.Namespace) -> int:
    try:
        if args.kind == "main":
            shape = _parse_shape(args.shape)
            if not shape.is_straight():
                raise SystemExit_usage("csp main takes a straight shape")
            report = macdonald_csp_suite(shape.outer, args.n, args.m)
        elif args.kind == "skew":
            shape = _parse_shape(args.shape)
            report = macdonald_csp_suite(shape.outer, args.n, args.m, shape.inner)
        elif args.kind == "refined":
            shape = _parse_shape(args.shape)
            if args.content is None:
                raise SystemExit_usage("csp refined needs --content")
            content = tuple(int(x) for x in args.content.split(","))
            report = refined_csp_suite(shape.outer, args.n, content)
        else:  # sigma
            shape = _parse_shape(args.shape)
            if args.sigma is None:
                raise SystemExit_usage("csp sigma needs --sigma (one-line permutation)")
            sigma = tuple(int(x) for x in args.sigma.split(","))
            report = sigma_csp_suite(shape.outer, args.m, sigma)
    except ShapeNotDivisible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR
    return _print_report(report, args.json)


def cmd_orbits(args: argparse.Namespace) -> int:
    shape = _parse_shape(args.shape)
    content = (
        tuple(int(x) for x in args.content.split(",")) if args.content else None
    )
    try:
        orbs = orbits(shape, args.n, args.m, content)
    except ShapeNotDivisible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR
    if args.json:
        print(
            json.dumps(
                [[f.label() for f in orbit] for orbit in orbs]
            )
        )
    else:
        print(f"{len(orbs)} orbits, sizes {sorted((len(o) for o in orbs), reverse=True)}")
        for k, orbit in enumerate(orbs, 1):
            print(f"  orbit {k} (size {len(orbit)}): {orbit[0].label()}")
    return 0


def cmd_crystal(args: argparse.Namespace) -> int:
    shape = _parse_shape(args.shape)
    graph = crystal_graph(shape, args.m)
    if args.json:
        print(json.dumps(graph.to_json()))
    else:
        print(graph.to_dot())
    return 0


def cmd_rsk(args: argparse.Namespace) -> int:
    text = args.word if args.word else sys.stdin.read()
    text = text.strip()
    try:
        if text.startswith("{"):
            word = BurgeWord.from_json(json.loads(text))
        else:
            lines = [ln for ln in text.splitlines() if ln.strip()]
            if len(lines) != 2:
                raise ValueError("expected two lines (top and bottom)")
            top = tuple(int(x) for x in lines[0].replace(",", " ").split())
            bottom = tuple(int(x) for x in lines[1].replace(",", " ").split())
            word = BurgeWord(top, bottom)
    except ValueError as exc:
        raise SystemExit_usage(str(exc))
    p, q = rsk(word)
    if args.json:
        print(json.dumps({"P": p.to_json(), "Q": q.to_json()}))
    else:
        print(f"P: {p.label()}")
        print(f"Q: {q.label()}")
    return 0


def cmd_kostka(args: argparse.Namespace) -> int:
    try:
        lam = parse_partition(args.lam)
        mu = parse_partition(args.mu)
        poly = kostka_foulkes(lam, mu)
    except ValueError as exc:
        raise SystemExit_usage(str(exc))
    print(poly.text(spaces=True))
    return 0


def cmd_llt(args: argparse.Namespace) -> int:
    try:
        nu = VStripTuple.parse(args.tuple)
    except ValueError as exc:
        raise SystemExit_usage(str(exc))
    if args.mininv:
        print(f"mininv = {mininv(nu)}")
        return 0
    poly = llt_poly(nu, args.m)
    if args.basis == "schur":
        poly = to_schur(poly)
    if args.json:
        print(json.dumps(poly.to_json()))
    else:
        print(poly.text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="macsieve",
        description="Exact combinatorics of specialized Macdonald polynomials "
        "and cyclic sieving verification.",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=1,
        help="worker hint for the verification suites (output is deterministic "
        "regardless; the current implementation runs sequentially)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("e", help="print E_{lam/mu}(x;q,0)")
    p.add_argument("shape")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--basis", choices=["monomial", "schur"], default="monomial")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_e)

    p = sub.add_parser("csp", help="run a cyclic sieving suite")
    p.add_argument("kind", choices=["main", "refined", "skew", "sigma"])
    p.add_argument("shape")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--content")
    p.add_argument("--sigma")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_csp)

    p = sub.add_parser("orbits", help="orbit table under the column rotation")
    p.add_argument("shape")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--content")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("crystal", help="crystal graph as DOT or JSON")
    p.add_argument("shape")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_crystal)

    p = sub.add_parser("rsk", help="insertion and recording tableaux of a Burge word")
    p.add_argument("word", nargs="?", help="two-line text or JSON; stdin when absent")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rsk)

    p = sub.add_parser("kostka", help="Kostka-Foulkes polynomial K_{lam,mu}(q)")
    p.add_argument("lam")
    p.add_argument("mu")
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("llt", help="vertical-strip LLT polynomial")
    p.add_argument("tuple", help="strips a/b, comma separated, e.g. 3/0,3/1,2/1,3/0")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--basis", choices=["monomial", "schur"], default="monomial")
    p.add_argument("--mininv", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_llt)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors already
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
