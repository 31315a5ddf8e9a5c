"""Exact counts of tournament score sequences: all, self-complementary, strong,
and strong self-complementary."""
from .counters import Method, SeriesTable, count, series
from .model import ClassKind, classify, is_score_sequence, is_self_complementary_sequence, is_strong_sequence

__all__ = [
    "ClassKind", "Method", "SeriesTable", "classify", "count", "series",
    "is_score_sequence", "is_self_complementary_sequence", "is_strong_sequence",
]
