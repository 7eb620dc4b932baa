"""Command line entry point: ``ramsey56 {build,verify,enumerate,bounds,patterns}``.

Exit status is 0 on success, 1 when a verification or soundness check fails,
and 2 for usage errors. Output files go to ``$RAMSEY56_OUT`` (or the current
directory) unless a path is given.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import combined, enumerator, patterns, verifier

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
LONG_RUN_Q = 13


class UsageError(Exception):
    pass


def _out_dir() -> Path:
    return Path(os.environ.get("RAMSEY56_OUT", "."))


def _names(s: str) -> list[str]:
    return [x for x in (t.strip() for t in s.split(",")) if x]


def cmd_build(args) -> int:
    con = combined.build(args.q)
    out = Path(args.out) if args.out else _out_dir() / f"coloring_q{args.q}.txt"
    con.write(out, args.dictionary)
    print(f"q={con.q} n={con.n} beta={con.beta} edges={con.num_edges} colors={con.num_colors}")
    print(f"wrote {out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.input:
        header, coloring = combined.read_export(args.input)
        label = f"{args.input} ({' '.join(f'{k}={v}' for k, v in header.items())})"
    else:
        if args.q >= LONG_RUN_Q and not args.long_run:
            raise UsageError(f"q={args.q} takes minutes; pass --long-run to proceed")
        coloring = combined.build(args.q).coloring
        label = f"construction q={args.q}"
    print(f"verifying {label}")
    report = verifier.verify(coloring, args.p, args.min_colors, threads=args.threads)
    print(report)
    if args.summary:
        report.write(args.summary)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_enumerate(args) -> int:
    pats = patterns.load_patterns(args.patterns)
    excluded = _names(args.exclude)
    forbidden = patterns.select(pats, exclude=excluded)
    residual = [p for p in pats if p.name in set(excluded)]
    result = enumerator.enumerate_colorings(args.n, args.m, forbidden, annotate=residual)
    lines = enumerator.output_lines(result, args.n, args.m, excluded)
    if args.out:
        Path(args.out).write_text("\n".join(lines) + "\n")
    print("\n".join(lines))
    return EXIT_OK


def cmd_bounds(args) -> int:
    value, ceil = verifier.lower_bound_56(args.n)
    print(f"n={args.n}")
    print(f"lower bound f(n,5,6) >= (5n/6 - 95/144)^(1/2) = {value:.4f}  (ceiling {ceil})")
    if args.t is not None:
        sub = verifier.recursion_bound(args.n, args.t)
        print(f"with t={args.t} colors some vertex has a monochromatic neighbourhood of order >= {sub}")
    root = int(round(args.n ** 0.5))
    if root * root == args.n and root >= 3 and root % 2 and all(root % d for d in range(3, int(root ** 0.5) + 1, 2)):
        beta = combined.choose_beta(root)
        print(f"construction q={root}: beta={beta}, at most {combined.color_bound(root, beta)} colors")
    return EXIT_OK


def cmd_patterns_validate(args) -> int:
    pats = patterns.load_patterns(args.patterns)
    con = combined.build(args.q)
    report = patterns.soundness(con, pats, samples=args.samples, seed=args.seed)
    print(f"soundness on q={args.q}: {args.samples} random 5-subsets, seed {args.seed}")
    print("\n".join(report.lines()))
    print("all patterns absent" if report.ok else "some patterns FIRED")
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ramsey56", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build the coloring of K_{q^2} and export it")
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--out")
    b.add_argument("--dictionary", help="color dictionary path (default: <out>.colors)")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="check every p-clique spans at least --min-colors colors")
    src = v.add_mutually_exclusive_group(required=True)
    src.add_argument("--q", type=int)
    src.add_argument("--input", help="edge list written by 'build'")
    v.add_argument("--p", type=int, default=5)
    v.add_argument("--min-colors", type=int, default=6)
    v.add_argument("--threads", type=int, default=verifier.default_threads())
    v.add_argument("--long-run", action="store_true", help=f"allow q >= {LONG_RUN_Q}")
    v.add_argument("--summary", help="write a JSON summary here")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="list K_n colorings avoiding the forbidden patterns")
    e.add_argument("--n", type=int, default=5)
    e.add_argument("--m", type=int, default=5, help="color budget (default 5: fewer than six colors)")
    e.add_argument("--patterns", help="pattern file (default: shipped set)")
    e.add_argument("--exclude", default="", help="comma-separated pattern names to leave out of the filter")
    e.add_argument("--out")
    e.set_defaults(func=cmd_enumerate)

    bd = sub.add_parser("bounds", help="lower bound on f(n,5,6) and related numbers")
    bd.add_argument("--n", type=int, required=True)
    bd.add_argument("--t", type=int)
    bd.set_defaults(func=cmd_bounds)

    pv_help = "run the pattern soundness suite against a construction"
    nested = sub.add_parser("patterns", help="pattern utilities").add_subparsers(dest="action", required=True)
    # 'patterns validate' and the flat alias 'patterns-validate' take the same options
    for p in (nested.add_parser("validate", help=pv_help), sub.add_parser("patterns-validate", help=pv_help)):
        p.add_argument("--q", type=int, default=7)
        p.add_argument("--samples", type=int, default=100_000)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--patterns")
        p.set_defaults(func=cmd_patterns_validate)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"ramsey56 {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
