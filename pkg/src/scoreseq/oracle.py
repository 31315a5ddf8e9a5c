"""Brute-force enumeration of score sequences, independent of the DP route."""
from __future__ import annotations

import itertools
from typing import Iterator

from .model import (ClassKind, binom2, in_class, is_score_sequence)

DEFAULT_ORACLE_LIMIT = 14


class OracleLimitExceeded(ValueError):
    pass


def _check_limit(n: int, limit: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > limit:
        raise OracleLimitExceeded(f"n={n} exceeds the oracle limit {limit}")


def _generate(n: int, strict: bool) -> Iterator[tuple[int, ...]]:
    """Nondecreasing sequences over 0..n-1 passing the prefix test, in lex order."""
    total = binom2(n)
    seq: list[int] = []

    def extend(prefix_sum: int, low: int) -> Iterator[tuple[int, ...]]:
        r = len(seq)
        if r == n:
            if prefix_sum == total:
                yield tuple(seq)
            return
        left = n - r  # terms still to place, including this one
        for x in range(low, n):
            p = prefix_sum + x
            if p + x * (left - 1) > total:
                break  # later terms are >= x, total would overshoot
            if p + (left - 1) * (n - 1) < total:
                continue  # even maximal later terms cannot reach the total
            if r + 1 < n:
                need = binom2(r + 1)
                if p < need or (strict and p == need):
                    continue
            seq.append(x)
            yield from extend(p, x)
            seq.pop()

    yield from extend(0, 0)


def enumerate_sequences(n: int, kind: ClassKind = ClassKind.ALL,
                        limit: int = DEFAULT_ORACLE_LIMIT) -> list[tuple[int, ...]]:
    _check_limit(n, limit)
    strict = kind in (ClassKind.STRONG, ClassKind.STRONG_SELF_COMPLEMENTARY)
    return [s for s in _generate(n, strict) if in_class(s, kind)]


def enumerate_unpruned(n: int, kind: ClassKind = ClassKind.ALL) -> list[tuple[int, ...]]:
    """Generate every nondecreasing sequence over 0..n-1, then filter."""
    cands = itertools.combinations_with_replacement(range(n), n) if n else [()]
    return [s for s in cands if is_score_sequence(s) and in_class(s, kind)]


def oracle_count(n: int, kind: ClassKind = ClassKind.ALL,
                 limit: int = DEFAULT_ORACLE_LIMIT) -> int:
    return len(enumerate_sequences(n, kind, limit))
