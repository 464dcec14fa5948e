"""Command line: ``check``, ``gen`` and ``selftest``.

Exit codes: 0 every selected check holds, 1 some check fails, 2 inconclusive
because of a degree cap, 3 input error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .graded_algebra import NonMinimalGeneratorsError, NotAnRModuleError
from .harness import (
    CHECK_GROUPS,
    FAMILIES,
    InstanceError,
    _parse_checks,
    emit_report,
    generate_instance,
    parse_instance,
    run_battery,
)
from .resolution import CACHE_ENV

EXIT_OK, EXIT_FAIL, EXIT_CAP, EXIT_INPUT = 0, 1, 2, 3


def _params(items: list[str]) -> dict:
    out = {}
    for item in items:
        if "=" not in item:
            raise ValueError(f"family parameter {item!r} must look like name=value")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qcipoincare", description="Koszul homology, q.c.i. certificates and "
                                 "Poincaré series checks over graded quotient rings.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run the verification battery on an instance file")
    c.add_argument("file")
    c.add_argument("--hmax", type=int)
    c.add_argument("--dmax", type=int)
    c.add_argument("--char", type=int, help="override the characteristic declared in the file")
    c.add_argument("--checks", default=None, help="comma list from: " + ", ".join(CHECK_GROUPS) + " (or all)")
    c.add_argument("--format", choices=("text", "machine"), default="text")
    c.add_argument("--cache-dir", default=None, help=f"resolution cache (default: ${CACHE_ENV})")
    c.add_argument("--minimize", action="store_true", help="replace non-minimal ideal generators by a minimal subset")
    c.add_argument("--no-timing", action="store_true", help="omit timing so reports compare byte for byte")

    g = sub.add_parser("gen", help="print a generated instance")
    g.add_argument("--family", required=True, choices=FAMILIES)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--char", type=int, default=101)
    g.add_argument("params", nargs="*", help="family parameters as name=value (a, b, n, vars, maxdeg, count, template)")

    s = sub.add_parser("selftest", help="run the acceptance battery")
    s.add_argument("--only", default=None, help="comma list of criterion numbers")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "check":
        return _check(args)
    if args.command == "gen":
        try:
            params = _params(args.params)
            inst = generate_instance(args.family, seed=args.seed, p=args.char, **params)
        except ValueError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_INPUT
        sys.stdout.write(inst.to_text())
        return EXIT_OK
    from .acceptance import run_all

    only = [int(x) for x in args.only.split(",")] if args.only else None
    ok = run_all(only=only, out=sys.stdout)
    return EXIT_OK if ok else EXIT_FAIL


def _check(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    try:
        inst = parse_instance(text)
        if args.char is not None:
            inst.char = args.char
            inst = parse_instance(inst.to_text())
        checks = _parse_checks(args.checks) if args.checks is not None else None
        report = run_battery(inst, hmax=args.hmax, dmax=args.dmax, checks=checks,
                             cache_dir=args.cache_dir or os.environ.get(CACHE_ENV), minimize=args.minimize)
    except (InstanceError, NonMinimalGeneratorsError, NotAnRModuleError) as e:
        print(f"{args.file}: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as e:
        print(f"{args.file}: input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(emit_report(report, args.format, include_timing=not args.no_timing))
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())
