"""OEIS-style b-files: ``n value`` per line, ``#`` comments, strictly increasing n."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, TextIO


class BFileError(ValueError):
    pass


@dataclass(frozen=True)
class BFileEntry:
    n: int
    value: int


def parse_bfile(lines: Iterable[str]) -> list[BFileEntry]:
    entries: list[BFileEntry] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(f"line {lineno}: expected 'n value', got {line!r}")
        try:
            n, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(f"line {lineno}: non-integer field in {line!r}") from None
        if n < 0:
            raise BFileError(f"line {lineno}: negative index {n}")
        if entries and n <= entries[-1].n:
            raise BFileError(f"line {lineno}: index {n} not increasing")
        entries.append(BFileEntry(n, value))
    return entries


def write_bfile(entries: Iterable[BFileEntry], out: TextIO) -> None:
    for e in entries:
        out.write(f"{e.n} {e.value}\n")
