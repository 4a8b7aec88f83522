"""Emanation tables: label ordering, the table type, and brute-force construction."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from ..structures import Mark, StrutContext, dmz_between


@dataclass(frozen=True)
class Cell:
    p: int
    mark: Mark

    def __str__(self):
        # positive edge-sign is written with a leading dash
        return f"-{self.p}" if self.mark is Mark.POSITIVE else str(self.p)


Grid = tuple[tuple[Optional[Cell], ...], ...]


def label_order(strut: StrutContext) -> tuple[int, ...]:
    """Ascending labels from the left, each strut-opposite at the mirrored slot."""
    size = strut.G - 2
    out: list[int | None] = [None] * size
    placed: set[int] = set()
    slot = 0
    for u in range(1, strut.G):
        if u == strut.S or u in placed:
            continue
        out[slot] = u
        out[size - 1 - slot] = u ^ strut.S
        placed.update((u, u ^ strut.S))
        slot += 1
    return tuple(out)  # type: ignore[arg-type]


@dataclass(frozen=True)
class EmanationTable:
    strut: StrutContext
    labels: tuple[int, ...]
    cells: Grid
    method: str = "brute"

    def __post_init__(self):
        self.validate()

    @property
    def n(self) -> int:
        return self.strut.n

    @property
    def S(self) -> int:
        return self.strut.S

    @property
    def size(self) -> int:
        return len(self.labels)

    def __getitem__(self, rc: tuple[int, int]) -> Cell | None:
        r, c = rc
        return self.cells[r][c]

    def iter_cells(self) -> Iterator[tuple[int, int, Cell | None]]:
        for r, row in enumerate(self.cells):
            for c, cell in enumerate(row):
                yield r, c, cell

    def filled_count(self) -> int:
        return sum(cell is not None for row in self.cells for cell in row)

    def marked_count(self) -> int:
        return sum(cell is not None and cell.mark is Mark.POSITIVE
                   for row in self.cells for cell in row)

    def fill_pattern(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(c is not None for c in row) for row in self.cells)

    def index_of(self, label: int) -> int:
        return self.labels.index(label)

    def at_labels(self, R: int, C: int) -> Cell | None:
        return self.cells[self.index_of(R)][self.index_of(C)]

    def validate(self) -> None:
        labels, S, n = self.labels, self.strut.S, self.size
        if sorted(labels) != [u for u in range(1, self.strut.G) if u != S]:
            raise AssertionError("labels must be {1..G-1} minus S")
        if len(self.cells) != n or any(len(row) != n for row in self.cells):
            raise AssertionError("table is not square over its labels")
        label_set = set(labels)
        for i in range(n):
            if labels[n - 1 - i] != labels[i] ^ S:
                raise AssertionError(f"mirror slot of {labels[i]} is not its strut-opposite")
            if self.cells[i][i] is not None or self.cells[i][n - 1 - i] is not None:
                raise AssertionError(f"long diagonal not blank in row {i}")
        for r, c, cell in self.iter_cells():
            if cell != self.cells[c][r]:
                raise AssertionError(f"asymmetric at ({r}, {c})")
            if cell is not None:
                if cell.p != labels[r] ^ labels[c] or cell.p not in label_set:
                    raise AssertionError(f"bad P at ({r}, {c}): {cell.p}")


def brute_row(strut: StrutContext, labels: Sequence[int], r: int) -> list[Cell | None]:
    R = labels[r]
    row: list[Cell | None] = []
    for C in labels:
        if R == C or R ^ C == strut.S:
            row.append(None)
            continue
        w = dmz_between(strut, R, C)
        row.append(None if w is None else Cell(R ^ C, w.edge_sign))
    return row


def et_bruteforce(strut: StrutContext, workers: int = 1) -> EmanationTable:
    """Fill each cell by running the exact DMZ test on its row and column assessors.

    Rows are independent, so ``workers > 1`` splits them over a thread pool;
    the result does not depend on the worker count.
    """
    labels = label_order(strut)
    idx = range(len(labels))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda r: brute_row(strut, labels, r), idx))
    else:
        rows = [brute_row(strut, labels, r) for r in idx]
    return EmanationTable(strut, labels, tuple(tuple(r) for r in rows), "brute")
