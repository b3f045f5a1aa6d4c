"""Command-line front end.

    valuebound invariants MAP [--q Q] [--modulus c0,c1,..] [--u] [--no-value-set] [--skip-heavy]
    valuebound verify --q 3 4 --n 1 2 --count 50 --seed 7 [--exhaustive-degree D] [--u]
    valuebound example NAME [--q Q] [--n N] [--a A] [--k K]
    valuebound plot MAP --out fig.svg [--q Q]

Exit codes: 0 ok, 2 parse error, 3 envelope exceeded, 4 unused variables,
5 verification violation.
"""
from __future__ import annotations

import argparse
import itertools
import json
import re
import sys
from pathlib import Path

from .dilation import StateSpaceTooLarge, UnusedVariables
from .families import EXAMPLE_NAMES, BadParams, make_example, map_text
from .gf import FieldError, field_make, prime_power
from .plot import NotTwoDimensional, polytope_picture, render_svg
from .poly import ComponentCountMismatch, ConstantMap, MapSyntaxError, PolyMap, parse_map
from .report import (
    EnvelopeError,
    all_low_degree_maps,
    invariant_report,
    random_corpus,
    verify_maps,
)
from .valueset import DomainTooLarge

EXIT_OK, EXIT_PARSE, EXIT_ENVELOPE, EXIT_UNUSED, EXIT_VIOLATION = 0, 2, 3, 4, 5

_DIRECTIVE = re.compile(r"^#\s*field:\s*q=(\d+)(?:\s+modulus=([\d,]+))?", re.MULTILINE)


class CliError(Exception):
    def __init__(self, msg: str, code: int):
        super().__init__(msg)
        self.code = code


def _field_for(text: str, q: int | None, modulus: str | None):
    m = _DIRECTIVE.search(text)
    if q is None and m:
        q = int(m.group(1))
        if modulus is None and m.group(2):
            modulus = m.group(2)
    if q is None:
        raise CliError("field unknown: pass --q or add a '# field: q=...' line", EXIT_PARSE)
    p, a = prime_power(q)
    mod = [int(c) for c in modulus.split(",")] if modulus else None
    return field_make(p, a, mod)


def load_map(path: str, q: int | None = None, modulus: str | None = None) -> PolyMap:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    try:
        return parse_map(text, _field_for(text, q, modulus))
    except (MapSyntaxError, ComponentCountMismatch, FieldError) as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from exc


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def cmd_invariants(args) -> int:
    f = load_map(args.map, args.q, args.modulus)
    try:
        rep = invariant_report(
            f, with_value_set=not args.no_value_set, with_u=args.u, skip_heavy=args.skip_heavy
        )
    except UnusedVariables as exc:
        raise CliError(str(exc), EXIT_UNUSED) from exc
    except ConstantMap as exc:
        raise CliError(str(exc), EXIT_UNUSED) from exc
    except (EnvelopeError, DomainTooLarge) as exc:
        raise CliError(f"{exc} (use --skip-heavy)", EXIT_ENVELOPE) from exc
    print(_dump(rep.to_json()))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.exhaustive_degree is not None:
        maps = []
        for q in args.q:
            F = field_make(*prime_power(q))
            for n in args.n:
                maps.append(all_low_degree_maps(F, n, args.exhaustive_degree))
        corpus = itertools.chain.from_iterable(maps)
    else:
        corpus = random_corpus(args.q, args.n, args.count, args.seed)
    try:
        summary = verify_maps(corpus, with_u=args.u)
    except (DomainTooLarge, StateSpaceTooLarge) as exc:
        raise CliError(str(exc), EXIT_ENVELOPE) from exc
    print(_dump(summary.to_json()))
    return EXIT_VIOLATION if summary.violations else EXIT_OK


def cmd_example(args) -> int:
    try:
        f = make_example(args.name, q=args.q, n=args.n, a=args.a, k=args.k)
    except (BadParams, FieldError) as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc
    sys.stdout.write(map_text(f))
    return EXIT_OK


def cmd_plot(args) -> int:
    f = load_map(args.map, args.q, args.modulus)
    try:
        svg = render_svg(polytope_picture(f))
    except NotTwoDimensional as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc
    except UnusedVariables as exc:
        raise CliError(str(exc), EXIT_UNUSED) from exc
    Path(args.out).write_text(svg, encoding="utf-8")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="valuebound", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="JSON report of all invariants of a map file")
    p.add_argument("map")
    p.add_argument("--q", type=int)
    p.add_argument("--modulus", help="comma-separated modulus coefficients, low degree first")
    p.add_argument("--u", action="store_true", help="also search for U(f) (heavy)")
    p.add_argument("--no-value-set", action="store_true")
    p.add_argument("--skip-heavy", action="store_true",
                   help="skip heavy parts that exceed their envelope instead of failing")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="check every bound on a generated corpus")
    p.add_argument("--q", type=int, nargs="+", required=True)
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive-degree", type=int,
                   help="enumerate every map of at most this degree instead of sampling")
    p.add_argument("--u", action="store_true", help="also check U(f) for q^n <= 27")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("example", help="print a sharp example map")
    p.add_argument("name", choices=EXAMPLE_NAMES)
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("plot", help="SVG of the Newton polytope of a two-variable map")
    p.add_argument("map")
    p.add_argument("--out", required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--modulus")
    p.set_defaults(func=cmd_plot)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
