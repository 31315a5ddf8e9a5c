"""Compute all four series up to N, cross-check both methods, write b-files.

    python scripts/sweep.py --to 100 --out results/
"""
import argparse
import time
from pathlib import Path

from scoreseq import counters
from scoreseq.bfile import BFileEntry, write_bfile
from scoreseq.model import ClassKind


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--to", type=int, default=100)
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    for kind in ClassKind:
        t0 = time.perf_counter()
        table = counters.series(kind, args.to)
        dt = time.perf_counter() - t0
        path = args.out / f"{kind.value}_0_{args.to}.txt"
        with open(path, "w") as fh:
            fh.write(f"# {kind.name.lower()} score sequences, method {table.method.value}\n")
            write_bfile((BFileEntry(n, v) for n, v in enumerate(table.values)), fh)
        print(f"{kind.value:>7}  n={args.to}  {table[args.to]}  ({dt:.2f}s) -> {path}")


if __name__ == "__main__":
    main()
