"""Counts of score sequences in the four classes.

Two routes exist for the strong classes: a direct sum over G arrays and a
recurrence that only needs the plain / self-complementary series.  The
recurrence route never touches a G array, so agreement between the two is a
genuine cross-check.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from . import dp
from .dp import DPLayer, DPRequest, Variant
from .model import ClassKind, binom2, ceil_div


class Method(enum.Enum):
    DP = "dp"
    RECURRENCE = "recurrence"
    BOTH = "both"


class MethodMismatch(ValueError):
    """The requested method does not exist for this class."""


class ConsistencyError(RuntimeError):
    """Two independent methods produced different values."""


@dataclass(frozen=True)
class SeriesTable:
    kind: ClassKind
    values: tuple[int, ...]
    method: Method

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def truncated(self, n_max: int) -> "SeriesTable":
        return SeriesTable(self.kind, self.values[:n_max + 1], self.method)


# --- direct sums over a single layer ---------------------------------------

def _full_sum(layer: DPLayer) -> int:
    # sequences of length n with total C(n,2); the last term is at least the average
    n = layer.n
    return dp.suffix_cell_sum(layer, binom2(n), ceil_div(n - 1, 2), n - 1)


def _half_sum(layer: DPLayer, odd: bool, strict: bool) -> int:
    """Self-complementary count of length 2m (or 2m+1) from layer m.

    Such a sequence is fixed by its first m terms; their total T runs from
    C(m,2) (C(m,2)+1 when strict) up to m*s_m, and s_m is at most m-1 (even)
    or m (odd, the middle term is m).
    """
    m = layer.n
    e_top = m if odd else m - 1
    t_lo = binom2(m) + (1 if strict else 0)
    total = 0
    for T in range(t_lo, m * e_top + 1):
        total += dp.suffix_cell_sum(layer, T, ceil_div(T, m), e_top)
    return total


def _full_request(variant: Variant, n: int) -> DPRequest:
    return DPRequest(variant, n, e_max=n - 1, t_max=binom2(n))


def _half_request(variant: Variant, n: int) -> DPRequest:
    m = n // 2
    e_top = m if n % 2 else m - 1
    return DPRequest(variant, m, e_max=e_top, t_max=m * e_top)


def count_all(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    return _full_sum(dp.build(_full_request(Variant.F, n)))


def count_strong_direct(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    return _full_sum(dp.build(_full_request(Variant.G, n)))


def count_self_complementary(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n < 2:
        return 1
    layer = dp.build(_half_request(Variant.F, n))
    return _half_sum(layer, odd=bool(n % 2), strict=False)


def count_ssc_direct(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n < 2:
        return 1
    layer = dp.build(_half_request(Variant.G, n))
    return _half_sum(layer, odd=bool(n % 2), strict=True)


# --- whole tables in one sweep ----------------------------------------------
# Cell values do not depend on the layer bounds, so one sweep sized for
# n_max serves every smaller n as well.

def _full_table(variant: Variant, n_max: int) -> tuple[int, ...]:
    values = [1]
    if n_max >= 1:
        for layer in dp.iter_layers(variant, n_max, n_max - 1, binom2(n_max)):
            values.append(_full_sum(layer))
    return tuple(values)


def _half_table(variant: Variant, n_max: int) -> tuple[int, ...]:
    strict = variant is Variant.G
    values = [1, 1][:n_max + 1]
    m_max = n_max // 2
    if m_max >= 1:
        for layer in dp.iter_layers(variant, m_max, m_max, m_max * m_max):
            for n in (2 * layer.n, 2 * layer.n + 1):
                if n <= n_max:
                    values.append(_half_sum(layer, odd=bool(n % 2), strict=strict))
    return tuple(values)


def _strong_recurrence(S: tuple[int, ...]) -> tuple[int, ...]:
    # reducible = strong head of length i followed by any score sequence of length n-i
    SS = [1]
    for n in range(1, len(S)):
        SS.append(S[n] - sum(SS[i] * S[n - i] for i in range(1, n)))
    return tuple(SS)


def _ssc_recurrence(SS: tuple[int, ...], SCS: tuple[int, ...]) -> tuple[int, ...]:
    # strong head of length i, its complement as the tail, self-complementary middle
    SSCS = [1]
    for n in range(1, len(SCS)):
        SSCS.append(SCS[n] - sum(SS[i] * SCS[n - 2 * i] for i in range(1, n // 2 + 1)))
    return tuple(SSCS)


_cache: dict[tuple[ClassKind, Method], SeriesTable] = {}


def clear_cache() -> None:
    _cache.clear()


def _cached(kind: ClassKind, method: Method, n_max: int, compute) -> SeriesTable:
    hit = _cache.get((kind, method))
    if hit is not None and hit.n_max >= n_max:
        return hit.truncated(n_max)
    table = SeriesTable(kind, compute(n_max), method)
    _cache[(kind, method)] = table
    return table


def all_table(n_max: int) -> SeriesTable:
    return _cached(ClassKind.ALL, Method.DP, n_max,
                   lambda k: _full_table(Variant.F, k))


def self_complementary_table(n_max: int) -> SeriesTable:
    return _cached(ClassKind.SELF_COMPLEMENTARY, Method.DP, n_max,
                   lambda k: _half_table(Variant.F, k))


def strong_direct_table(n_max: int) -> SeriesTable:
    return _cached(ClassKind.STRONG, Method.DP, n_max,
                   lambda k: _full_table(Variant.G, k))


def ssc_direct_table(n_max: int) -> SeriesTable:
    return _cached(ClassKind.STRONG_SELF_COMPLEMENTARY, Method.DP, n_max,
                   lambda k: _half_table(Variant.G, k))


def count_strong_recurrence(n_max: int) -> SeriesTable:
    return _cached(ClassKind.STRONG, Method.RECURRENCE, n_max,
                   lambda k: _strong_recurrence(all_table(k).values))


def count_ssc_recurrence(n_max: int) -> SeriesTable:
    return _cached(ClassKind.STRONG_SELF_COMPLEMENTARY, Method.RECURRENCE, n_max,
                   lambda k: _ssc_recurrence(count_strong_recurrence(k).values,
                                             self_complementary_table(k).values))


_DIRECT_TABLES = {
    ClassKind.ALL: all_table,
    ClassKind.SELF_COMPLEMENTARY: self_complementary_table,
    ClassKind.STRONG: strong_direct_table,
    ClassKind.STRONG_SELF_COMPLEMENTARY: ssc_direct_table,
}
_RECURRENCE_TABLES = {
    ClassKind.STRONG: count_strong_recurrence,
    ClassKind.STRONG_SELF_COMPLEMENTARY: count_ssc_recurrence,
}
_DIRECT_COUNTS = {
    ClassKind.ALL: count_all,
    ClassKind.SELF_COMPLEMENTARY: count_self_complementary,
    ClassKind.STRONG: count_strong_direct,
    ClassKind.STRONG_SELF_COMPLEMENTARY: count_ssc_direct,
}


def default_method(kind: ClassKind) -> Method:
    return Method.BOTH if kind in _RECURRENCE_TABLES else Method.DP


def _check_method(kind: ClassKind, method: Method) -> None:
    if method is not Method.DP and kind not in _RECURRENCE_TABLES:
        raise MethodMismatch(f"kind {kind.value!r} only supports method 'dp'")


def series(kind: ClassKind, n_max: int, method: Method | None = None) -> SeriesTable:
    """Values 0..n_max of one series; ``Method.BOTH`` cross-checks row by row."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    method = default_method(kind) if method is None else method
    _check_method(kind, method)
    if method is Method.DP:
        return _DIRECT_TABLES[kind](n_max)
    if method is Method.RECURRENCE:
        return _RECURRENCE_TABLES[kind](n_max)
    direct = _DIRECT_TABLES[kind](n_max)
    recur = _RECURRENCE_TABLES[kind](n_max)
    for n, (a, b) in enumerate(zip(direct.values, recur.values)):
        if a != b:
            raise ConsistencyError(
                f"{kind.value} n={n}: direct DP gives {a}, recurrence gives {b}")
    return SeriesTable(kind, direct.values, Method.BOTH)


def count(kind: ClassKind, n: int, method: Method | None = None) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    method = default_method(kind) if method is None else method
    _check_method(kind, method)
    if method is Method.DP:
        return _DIRECT_COUNTS[kind](n)
    recur = _RECURRENCE_TABLES[kind](n)[n]
    if method is Method.RECURRENCE:
        return recur
    direct = _DIRECT_COUNTS[kind](n)
    if direct != recur:
        raise ConsistencyError(
            f"{kind.value} n={n}: direct DP gives {direct}, recurrence gives {recur}")
    return direct
