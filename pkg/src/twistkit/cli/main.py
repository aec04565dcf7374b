"""twistkit <command> [--builtin NAME | --spec PATH] [--N int] [--D int] [--json PATH] [--quiet]"""
from __future__ import annotations

import argparse
import sys

from ..errors import TwistkitError
from .commands import COMMANDS, Session
from .library import BUILTINS, load_builtin
from .report import Report
from .specfile import load_spec


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twistkit",
                                description="Exact checks for Drinfeld twists of quadratic algebras.")
    p.add_argument("command", choices=COMMANDS)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", choices=BUILTINS, help="one of the shipped problems")
    src.add_argument("--spec", metavar="PATH", help="problem file")
    p.add_argument("--n", type=int, default=2, help="dim V for the (C_2)^n builtins (default 2)")
    p.add_argument("--N", type=int, default=None, help="largest Koszul degree n (default from the problem)")
    p.add_argument("--D", type=int, default=None, help="largest internal degree d (default from the problem)")
    p.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' for stdout)")
    p.add_argument("--quiet", action="store_true", help="no human-readable output")
    p.add_argument("--no-timing", action="store_true", help="leave timings out of the report")
    return p


def run(argv=None) -> tuple[int, Report | None]:
    args = build_parser().parse_args(argv)
    for flag in ("n", "N", "D"):
        v = getattr(args, flag)
        if v is not None and v < (1 if flag == "n" else 0):
            print(f"twistkit: --{flag} must be {'positive' if flag == 'n' else 'nonnegative'}", file=sys.stderr)
            return 2, None
    try:
        if args.builtin:
            problem = load_builtin(args.builtin, args.n)
        else:
            problem = load_spec(args.spec)
    except OSError as exc:
        print(f"twistkit: {exc}", file=sys.stderr)
        return 2, None
    except TwistkitError as exc:
        print(f"twistkit: {args.spec or args.builtin}: {exc}", file=sys.stderr)
        return 2, None

    session = Session(problem, args.N, args.D, timing=not args.no_timing)
    bounds = session.bounds
    if args.builtin and args.builtin != "qplane-r":
        bounds["n"] = args.n
    report = Report(args.command, problem.name, bounds, session.run(args.command))
    if not args.quiet:
        print(report.render())
    if args.json:
        text = report.to_json()
        if args.json == "-":
            print(text)
        else:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
    return (0 if report.ok else 1), report


def main(argv=None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
