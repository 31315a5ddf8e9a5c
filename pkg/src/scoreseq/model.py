"""Score sequences, binomial helpers and the class predicates.

Sequences are plain tuples of ints kept in nondecreasing order.  Comments
below use 1-based positions ``s_1 .. s_n``; storage is 0-based.
"""
from __future__ import annotations

import enum
from typing import Sequence


class InvalidSequence(ValueError):
    """Input is not a nondecreasing sequence of nonnegative integers."""


class ClassKind(enum.Enum):
    ALL = "all"
    SELF_COMPLEMENTARY = "sc"
    STRONG = "strong"
    STRONG_SELF_COMPLEMENTARY = "ssc"

    @classmethod
    def parse(cls, name: str) -> "ClassKind":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown kind {name!r}; expected one of "
                             f"{', '.join(k.value for k in cls)}") from None


def binom2(r: int) -> int:
    if r < 0:
        raise ValueError("r must be nonnegative")
    return r * (r - 1) // 2


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def is_well_formed(seq: Sequence[int]) -> bool:
    return all(s >= 0 for s in seq) and all(a <= b for a, b in zip(seq, seq[1:]))


def check_well_formed(seq: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(seq)
    if not is_well_formed(seq):
        raise InvalidSequence(f"not a nondecreasing nonnegative sequence: {seq}")
    return seq


def _prefix_ok(seq: Sequence[int], strict: bool) -> bool:
    # r runs over 1 .. n-1
    total = 0
    for r, s in enumerate(seq[:-1], start=1):
        total += s
        if total < binom2(r) or (strict and total == binom2(r)):
            return False
    return True


def is_score_sequence(seq: Sequence[int]) -> bool:
    """Landau's test: prefix sums at least C(r,2), total exactly C(n,2)."""
    return sum(seq) == binom2(len(seq)) and _prefix_ok(seq, strict=False)


def is_strong_sequence(seq: Sequence[int]) -> bool:
    """Strict prefix inequality for every proper prefix, total C(n,2)."""
    return sum(seq) == binom2(len(seq)) and _prefix_ok(seq, strict=True)


def is_self_complementary_sequence(seq: Sequence[int]) -> bool:
    n = len(seq)
    return all(seq[n - 1 - i] == n - 1 - seq[i] for i in range(n // 2))


def reverse_complement(seq: Sequence[int]) -> tuple[int, ...]:
    """Scores of the complement tournament, sorted: s_i -> n-1-s_{n+1-i}."""
    n = len(seq)
    return tuple(n - 1 - s for s in reversed(seq))


def classify(seq: Sequence[int]) -> frozenset[ClassKind]:
    """Return every class the sequence belongs to (empty if it is no score sequence).

    Raises InvalidSequence for input that is not nondecreasing and nonnegative.
    """
    seq = check_well_formed(seq)
    if not is_score_sequence(seq):
        return frozenset()
    kinds = {ClassKind.ALL}
    strong = is_strong_sequence(seq)
    sc = is_self_complementary_sequence(seq)
    if strong:
        kinds.add(ClassKind.STRONG)
    if sc:
        kinds.add(ClassKind.SELF_COMPLEMENTARY)
    if strong and sc:
        kinds.add(ClassKind.STRONG_SELF_COMPLEMENTARY)
    return frozenset(kinds)


def in_class(seq: Sequence[int], kind: ClassKind) -> bool:
    return kind in classify(seq)
