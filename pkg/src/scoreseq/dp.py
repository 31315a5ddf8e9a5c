"""Layered F/G arrays over exact integers.

``F_n[T, E]`` counts nondecreasing length-n sequences with total ``T``, last
term ``E`` and every proper prefix sum ``>= C(r,2)``.  ``G_n`` is the same
with ``> C(r,2)``.  A layer is a dense ``(t_max+1, e_max+1)`` numpy array of
Python ints (dtype=object), so cells never overflow.

The step to the next layer reads a cumulative sum over the end-value axis of
the previous layer: ``F_n[T, E] = P_{n-1}[T-E, E]`` where
``P[T', E] = sum_{k<=E} F_{n-1}[T', k]``, zeroed outside the guard on
``T-E``.  For G the lower limit ``ceil((T-E)/(n-1))`` of the paper's sum is
not applied: every cell below it is zero already.
"""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .model import binom2

CELL_BUDGET_ENV = "SCORESEQ_CELL_BUDGET"
DEFAULT_CELL_BUDGET = 2**31


class CellBudgetExceeded(MemoryError):
    pass


class Variant(enum.Enum):
    F = "F"  # weak prefix condition
    G = "G"  # strict prefix condition


@dataclass(frozen=True)
class DPRequest:
    variant: Variant
    n_target: int
    e_max: int
    t_max: int

    def __post_init__(self):
        if self.n_target < 1:
            raise ValueError("n_target must be >= 1")
        if self.e_max < 0 or self.t_max < 0:
            raise ValueError("bounds must be nonnegative")


@dataclass(frozen=True, eq=False)
class DPLayer:
    variant: Variant
    n: int
    e_max: int
    t_max: int
    cells: np.ndarray = field(repr=False)

    def __getitem__(self, key: tuple[int, int]) -> int:
        T, E = key
        if not (0 <= T <= self.t_max and 0 <= E <= self.e_max):
            raise IndexError(f"cell ({T}, {E}) outside bounds "
                             f"t_max={self.t_max}, e_max={self.e_max}")
        return self.cells[T, E]

    def same_cells(self, other: "DPLayer") -> bool:
        return (self.variant == other.variant and self.n == other.n
                and self.cells.shape == other.cells.shape
                and bool((self.cells == other.cells).all()))


def cell_budget() -> int:
    raw = os.environ.get(CELL_BUDGET_ENV)
    return int(raw) if raw else DEFAULT_CELL_BUDGET


def _check_budget(e_max: int, t_max: int, budget: int | None) -> None:
    budget = cell_budget() if budget is None else budget
    cells = (e_max + 1) * (t_max + 1)
    if cells > budget:
        raise CellBudgetExceeded(
            f"layer needs {cells} cells, budget is {budget} "
            f"(set {CELL_BUDGET_ENV} to raise it)")


def _zeros(e_max: int, t_max: int) -> np.ndarray:
    # np.zeros(dtype=object) fills with the Python int 0
    return np.zeros((t_max + 1, e_max + 1), dtype=object)


def base_layer(variant: Variant, e_max: int, t_max: int) -> DPLayer:
    cells = _zeros(e_max, t_max)
    for v in range(min(e_max, t_max) + 1):
        cells[v, v] = 1
    return DPLayer(variant, 1, e_max, t_max, cells)


def next_layer(prev: DPLayer) -> DPLayer:
    n = prev.n + 1
    t_max, e_max = prev.t_max, prev.e_max
    # smallest admissible total of the first n-1 terms
    lo = binom2(n - 1) + (1 if prev.variant is Variant.G else 0)
    prefix = np.cumsum(prev.cells, axis=1)
    cells = _zeros(e_max, t_max)
    for E in range(e_max + 1):
        if lo + E <= t_max:
            cells[lo + E:, E] = prefix[lo:t_max + 1 - E, E]
    return DPLayer(prev.variant, n, e_max, t_max, cells)


def iter_layers(variant: Variant, n_max: int, e_max: int, t_max: int,
                budget: int | None = None) -> Iterator[DPLayer]:
    """Yield layers n = 1 .. n_max; only the current layer is kept alive."""
    _check_budget(e_max, t_max, budget)
    layer = base_layer(variant, e_max, t_max)
    yield layer
    for _ in range(n_max - 1):
        layer = next_layer(layer)
        yield layer


def build(request: DPRequest, budget: int | None = None) -> DPLayer:
    layer = None
    for layer in iter_layers(request.variant, request.n_target,
                             request.e_max, request.t_max, budget):
        pass
    return layer


def suffix_cell_sum(layer: DPLayer, T: int, e_lo: int, e_hi: int) -> int:
    """Sum of ``cells[T, E]`` for ``e_lo <= E <= e_hi`` (0 for an empty range)."""
    if e_lo > e_hi:
        return 0
    if e_lo < 0 or e_hi > layer.e_max or not 0 <= T <= layer.t_max:
        raise IndexError(f"range T={T}, E={e_lo}..{e_hi} outside layer bounds")
    return sum(layer.cells[T, e_lo:e_hi + 1].tolist())
