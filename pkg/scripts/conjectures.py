"""Ratio reports for the growth conjectures, with settling indices.

Writes one CSV per report and prints where each trend starts to hold.
"""
import argparse
from pathlib import Path

from scoreseq import analysis
from scoreseq.model import ClassKind

REPORTS = [
    (ClassKind.ALL, 1),
    (ClassKind.SELF_COMPLEMENTARY, 2),
    (ClassKind.STRONG, 1),
    (ClassKind.STRONG_SELF_COMPLEMENTARY, 2),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--to", type=int, default=100)
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    reports = [(f"growth_{k.value}", analysis.growth_ratios(k, args.to, s)) for k, s in REPORTS]
    reports.append(("strong_fraction", analysis.strong_fraction(args.to)))
    for name, report in reports:
        direction = analysis.default_direction(report)
        settle = analysis.settling_index(report, direction)
        (args.out / f"{name}.csv").write_text(report.to_csv())
        last = report.rows[-1]
        print(f"{name:>16}: {direction} from n={settle}; "
              f"n={last.n} ratio {analysis.render_decimal(last.ratio)}")


if __name__ == "__main__":
    main()
