"""Brute-force references that share no code with the DP engine."""
import itertools
from collections import Counter
from math import comb


def prefix_ok(seq, strict):
    total = 0
    for r in range(1, len(seq)):
        total += seq[r - 1]
        if total < comb(r, 2) or (strict and total == comb(r, 2)):
            return False
    return True


def brute_cells(n, e_max, t_max, strict):
    """Counter {(T, E): count} over nondecreasing length-n sequences on 0..e_max."""
    cells = Counter()
    for seq in itertools.combinations_with_replacement(range(e_max + 1), n):
        T = sum(seq)
        if T <= t_max and prefix_ok(seq, strict):
            cells[T, seq[-1]] += 1
    return cells


def brute_count(n, strict=False, sc=False):
    count = 0
    for seq in itertools.combinations_with_replacement(range(max(n, 1)), n):
        if sum(seq) != comb(n, 2) or not prefix_ok(seq, strict):
            continue
        if sc and any(seq[n - 1 - i] != n - 1 - seq[i] for i in range(n // 2)):
            continue
        count += 1
    return count
