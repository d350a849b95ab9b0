"""Command-line front end.

Exit codes: 0 success, 1 a hard identity failure, 2 usage or input error.
"""

import argparse
import json
import sys

from .homalg import regular_compose
from .octonion import E, OctonionParseError, format_octonion, parse_octonion
from .paralinear import Chirality, ParaLinearMap, paralinear_dimension
from . import verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def table_text():
    labels = ["1"] + ["e%d" % i for i in range(1, 8)]
    rows = [[""] + labels]
    for i in range(8):
        rows.append([labels[i]] + [format_octonion(E[i] * E[j]) for j in range(8)])
    width = max(len(c) for r in rows for c in r)
    return "\n".join(" ".join(c.rjust(width) for c in r) for r in rows)


def cmd_table(args):
    print(table_text())
    return EXIT_OK


def cmd_mul(args):
    try:
        a, b = parse_octonion(args.a), parse_octonion(args.b)
    except OctonionParseError as exc:
        raise InputError(str(exc)) from None
    print(format_octonion(a * b))
    return EXIT_OK


def _load_map(path):
    try:
        with open(path) as fh:
            return ParaLinearMap.from_json(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError("cannot read a map from %s: %s" % (path, exc)) from None


def cmd_compose(args):
    chirality = Chirality.coerce(args.chirality)
    f, g = _load_map(args.f), _load_map(args.g)
    for name, h in (("f", f), ("g", g)):
        if h.chirality is not chirality:
            raise InputError("%s is %s para-linear, expected %s" % (name, h.chirality.value, chirality.value))
    try:
        fg = regular_compose(f, g)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    with open(args.out, "w") as fh:
        json.dump(fg.to_json(), fh, indent=2)
        fh.write("\n")
    print("wrote %s (%s para-linear, %s -> %s)" % (args.out, fg.chirality.value, fg.dom, fg.cod))
    return EXIT_OK


def cmd_check(args):
    opts = dict(trials=args.trials, seed=args.seed, max_rank=args.max_rank, coeff_bound=args.coeff_bound)
    try:
        if args.identity == "all":
            reports = verify.run_all(group=args.group, **opts)
        else:
            reports = [verify.run_check(args.identity, **opts)]
    except verify.UnknownIdentity as exc:
        raise InputError("unknown identity %s; see 'check --list'" % exc) from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.json:
        print(verify.reports_to_json(reports))
    else:
        print(verify.format_lines(reports))
    return EXIT_OK if verify.all_ok(reports) else EXIT_FAIL


def cmd_hom_dim(args):
    n, m = args.n, args.m
    if n < 1 or m < 1:
        raise InputError("ranks must be positive")
    print(8 * n * m)
    for ch in (Chirality.LEFT, Chirality.RIGHT):
        d = paralinear_dimension(n, m, ch)
        print("constraint rank check (%s): %d %s" % (ch.value, d, "ok" if d == 8 * n * m else "MISMATCH"))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="octomod", description="Exact octonionic bimodule computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print the 8x8 multiplication table")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("mul", help="multiply two octonion literals, e.g. 1+2e3-1/2e7")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("compose", help="regular composition f (*) g of two JSON maps")
    p.add_argument("chirality", choices=["left", "right"])
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("out")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("check", help="run a catalog identity, or 'all'")
    p.add_argument("identity", nargs="?", default="all")
    p.add_argument("--trials", type=int, default=verify.DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--max-rank", type=int, default=verify.DEFAULT_MAX_RANK)
    p.add_argument("--coeff-bound", type=int, default=verify.DEFAULT_BOUND)
    p.add_argument("--group", choices=["core", "functor"], help="restrict 'all' to one group")
    p.add_argument("--json", action="store_true", help="emit a JSON array of reports")
    p.add_argument("--list", action="store_true", help="list identity names and exit")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("hom-dim", help="dimension of para-linear maps O^n -> O^m")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_hom_dim)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "check" and args.list:
        for name in verify.names():
            c = verify.CATALOG[name]
            print("%-50s %-8s%s  %s" % (name, c.group, " (discovery)" if c.discovery else "", c.statement))
        return EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
