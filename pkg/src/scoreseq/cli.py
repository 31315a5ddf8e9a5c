"""Command-line front end.

Exit codes: 0 ok, 1 negative answer or mismatch, 2 usage/parse error,
3 internal inconsistency between methods, 4 resource limit.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import analysis, counters, oracle
from .bfile import BFileEntry, BFileError, parse_bfile, write_bfile
from .counters import ConsistencyError, Method, MethodMismatch
from .dp import CellBudgetExceeded
from .model import ClassKind, InvalidSequence, classify
from .oracle import OracleLimitExceeded

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INCONSISTENT, EXIT_RESOURCE = 0, 1, 2, 3, 4

KINDS = [k.value for k in ClassKind]
METHODS = [m.value for m in Method]

_CHECK_LINES = [
    ("score-sequence", ClassKind.ALL),
    ("strong", ClassKind.STRONG),
    ("self-complementary", ClassKind.SELF_COMPLEMENTARY),
    ("strong-self-complementary", ClassKind.STRONG_SELF_COMPLEMENTARY),
]


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def _method(args) -> Method | None:
    return Method(args.method) if args.method else None


def cmd_count(args, out) -> int:
    value = counters.count(ClassKind(args.kind), args.n, _method(args))
    out.write(f"{value}\n")
    return EXIT_OK


def cmd_table(args, out) -> int:
    if args.from_ > args.to:
        raise UsageError("--from must not exceed --to")
    table = counters.series(ClassKind(args.kind), args.to, _method(args))
    rows = [(n, table[n]) for n in range(args.from_, args.to + 1)]
    if args.format == "csv":
        out.write("n,count\n")
        for n, v in rows:
            out.write(f"{n},{v}\n")
    elif args.format == "bfile":
        write_bfile((BFileEntry(n, v) for n, v in rows), out)
    else:
        wn = max(len("n"), len(str(args.to)))
        wv = max(len("count"), *(len(str(v)) for _, v in rows))
        out.write(f"{'n':>{wn}}  {'count':>{wv}}\n")
        for n, v in rows:
            out.write(f"{n:>{wn}}  {v:>{wv}}\n")
    return EXIT_OK


def parse_sequence(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        seq = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"not a comma-separated integer list: {text!r}") from None
    if any(s < 0 for s in seq):
        raise UsageError("scores must be nonnegative")
    return seq


def cmd_check(args, out) -> int:
    seq = parse_sequence(args.sequence)
    try:
        kinds = classify(seq)
    except InvalidSequence:
        out.write("note: scores are not in nondecreasing order\n")
        kinds = frozenset()
    for label, kind in _CHECK_LINES:
        out.write(f"{label}: {'yes' if kind in kinds else 'no'}\n")
    return EXIT_OK if ClassKind.ALL in kinds else EXIT_NEGATIVE


def cmd_verify(args, out) -> int:
    try:
        if args.path == "-":
            entries = parse_bfile(sys.stdin)
        else:
            with open(args.path, encoding="ascii") as fh:
                entries = parse_bfile(fh)
    except (OSError, UnicodeDecodeError, BFileError) as exc:
        raise UsageError(f"cannot read b-file {args.path}: {exc}") from None
    if args.to is not None:
        entries = [e for e in entries if e.n <= args.to]
    if not entries:
        print("warning: no b-file rows to compare", file=sys.stderr)
        out.write("compared 0 rows, 0 mismatches\n")
        return EXIT_OK
    table = counters.series(ClassKind(args.kind), entries[-1].n, _method(args))
    mismatches = 0
    for e in entries:
        if table[e.n] != e.value:
            mismatches += 1
            out.write(f"mismatch n={e.n}: file {e.value}, computed {table[e.n]}\n")
    out.write(f"compared {len(entries)} rows, {mismatches} mismatches\n")
    return EXIT_NEGATIVE if mismatches else EXIT_OK


def cmd_enumerate(args, out) -> int:
    seqs = oracle.enumerate_sequences(args.n, ClassKind(args.kind), args.limit)
    for s in seqs:
        out.write(",".join(map(str, s)) + "\n")
    out.write(f"total {len(seqs)}\n")
    return EXIT_OK


def cmd_ratios(args, out) -> int:
    if args.fraction:
        report = analysis.strong_fraction(args.to, args.precision)
    else:
        report = analysis.growth_ratios(ClassKind(args.kind), args.to, args.stride,
                                        args.precision)
    out.write(report.to_csv())
    direction = analysis.default_direction(report)
    settle = analysis.settling_index(report, direction)
    print(f"# {direction} from n={settle} through n={args.to}", file=sys.stderr)
    if args.strict:
        start = args.settle if args.settle is not None else -1
        bad = [(a, b) for a, b in analysis.monotonicity_check(report, direction)
               if a.n >= start]
        for a, b in bad:
            print(f"# violation: n={a.n} -> n={b.n}", file=sys.stderr)
        if bad:
            return EXIT_NEGATIVE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="scoreseq",
                                description="Count tournament score sequences exactly.")
    sub = p.add_subparsers(dest="command", required=True)

    def kind_arg(sp, default="all"):
        sp.add_argument("--kind", choices=KINDS, default=default,
                        help="all, sc (self-complementary), strong, ssc (strong self-complementary)")

    def method_arg(sp):
        sp.add_argument("--method", choices=METHODS, default=None,
                        help="default: both for strong/ssc, dp otherwise")

    sp = sub.add_parser("count", help="count sequences of one length")
    kind_arg(sp)
    sp.add_argument("--n", type=_nonneg, required=True)
    method_arg(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("table", help="print a range of counts")
    kind_arg(sp)
    sp.add_argument("--from", dest="from_", type=_nonneg, default=0)
    sp.add_argument("--to", type=_nonneg, required=True)
    sp.add_argument("--format", choices=["plain", "csv", "bfile"], default="plain")
    method_arg(sp)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("check", help="classify a comma-separated score list")
    sp.add_argument("sequence", help="e.g. 1,1,2,3,4,4")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("verify", help="compare a b-file against computed values")
    kind_arg(sp)
    sp.add_argument("path", help="b-file path, or - for stdin")
    sp.add_argument("--to", type=_nonneg, default=None, help="ignore rows beyond this n")
    method_arg(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("enumerate", help="list sequences by brute force")
    kind_arg(sp)
    sp.add_argument("--n", type=_nonneg, required=True)
    sp.add_argument("--limit", type=_nonneg, default=oracle.DEFAULT_ORACLE_LIMIT)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("ratios", help="CSV report of growth ratios")
    kind_arg(sp)
    sp.add_argument("--to", type=_nonneg, default=100)
    sp.add_argument("--stride", type=int, choices=[1, 2], default=1)
    sp.add_argument("--fraction", action="store_true", help="report S(n)/SS(n) instead")
    sp.add_argument("--strict", action="store_true",
                    help="exit 1 on a monotonicity violation between rows at or after --settle")
    sp.add_argument("--settle", type=_nonneg, default=None,
                    help="first n checked under --strict (default: every row)")
    sp.add_argument("--precision", type=int, default=analysis.DEFAULT_PRECISION)
    sp.set_defaults(func=cmd_ratios)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, MethodMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (CellBudgetExceeded, OracleLimitExceeded) as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
