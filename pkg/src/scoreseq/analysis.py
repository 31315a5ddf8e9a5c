"""Ratio reports for the growth conjectures.

All comparisons use exact fractions; the decimal column is presentation only.
"""
from __future__ import annotations

import csv
import decimal
import io
from dataclasses import dataclass
from fractions import Fraction

from . import counters
from .model import ClassKind

DEFAULT_PRECISION = 6

INCREASING = "increasing"
DECREASING = "decreasing"


@dataclass(frozen=True)
class RatioRow:
    n: int
    numerator: int
    denominator: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


@dataclass(frozen=True)
class RatioReport:
    kind: ClassKind
    rows: tuple[RatioRow, ...]
    stride: int = 1
    label: str = "growth"
    precision: int = DEFAULT_PRECISION

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "numerator", "denominator", "ratio"])
        for row in self.rows:
            writer.writerow([row.n, row.numerator, row.denominator,
                             render_decimal(row.ratio, self.precision)])
        return buf.getvalue()


def render_decimal(q: Fraction, precision: int = DEFAULT_PRECISION) -> str:
    """Round q to ``precision`` significant digits, half-even, positional notation."""
    ctx = decimal.Context(prec=precision, rounding=decimal.ROUND_HALF_EVEN)
    # Decimal(int) is exact and division is correctly rounded in ctx
    d = ctx.divide(decimal.Decimal(q.numerator), decimal.Decimal(q.denominator))
    return format(d, "f")


def growth_ratios(kind: ClassKind, n_max: int, stride: int = 1,
                  precision: int = DEFAULT_PRECISION) -> RatioReport:
    """value(n) / value(n - stride) for ascending n, skipping zero denominators."""
    if not isinstance(kind, ClassKind):
        raise ValueError(f"unknown kind {kind!r}")
    if stride not in (1, 2):
        raise ValueError("stride must be 1 or 2")
    values = counters.series(kind, n_max).values
    rows = tuple(RatioRow(n, values[n], values[n - stride])
                 for n in range(stride, n_max + 1) if values[n - stride])
    return RatioReport(kind, rows, stride, "growth", precision)


def strong_fraction(n_max: int, precision: int = DEFAULT_PRECISION) -> RatioReport:
    """S(n) / SS(n) wherever SS(n) > 0."""
    S = counters.series(ClassKind.ALL, n_max).values
    SS = counters.series(ClassKind.STRONG, n_max).values
    rows = tuple(RatioRow(n, S[n], SS[n]) for n in range(n_max + 1) if SS[n])
    return RatioReport(ClassKind.STRONG, rows, 1, "fraction", precision)


def monotonicity_check(report: RatioReport, direction: str) -> list[tuple[RatioRow, RatioRow]]:
    """Pairs of consecutive rows that break the claimed direction.

    With stride 2 the even and odd chains are checked separately, since
    each ratio compares n with n-2.
    """
    if direction not in (INCREASING, DECREASING):
        raise ValueError(f"direction must be {INCREASING!r} or {DECREASING!r}")
    violations = []
    last: dict[int, RatioRow] = {}
    for row in report.rows:
        chain = row.n % report.stride
        prev = last.get(chain)
        if prev is not None:
            a, b = prev.ratio, row.ratio
            if (direction == INCREASING and not a < b) or (direction == DECREASING and not a > b):
                violations.append((prev, row))
        last[chain] = row
    return violations


def settling_index(report: RatioReport, direction: str) -> int | None:
    """Smallest n from which the trend holds through the last row.

    None for an empty report.
    """
    if not report.rows:
        return None
    violations = monotonicity_check(report, direction)
    if not violations:
        return report.rows[0].n
    return max(row.n for _, row in violations)


def default_direction(report: RatioReport) -> str:
    return DECREASING if report.label == "fraction" else INCREASING
