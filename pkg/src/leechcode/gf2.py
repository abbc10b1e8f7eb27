"""GF(2) linear algebra on int bitmasks."""

from __future__ import annotations

from typing import Iterable, List, Tuple


def echelon(rows: Iterable[int], ncols: int) -> Tuple[List[int], List[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    reduced: List[int] = []
    pivots: List[int] = []
    for row in rows:
        for p, r in zip(pivots, reduced):
            if (row >> p) & 1:
                row ^= r
        if row == 0:
            continue
        p = (row & -row).bit_length() - 1
        for i, r in enumerate(reduced):
            if (r >> p) & 1:
                reduced[i] = r ^ row
        reduced.append(row)
        pivots.append(p)
    order = sorted(range(len(pivots)), key=lambda i: pivots[i])
    return [reduced[i] for i in order], [pivots[i] for i in order]


def rank(rows: Iterable[int], ncols: int) -> int:
    return len(echelon(rows, ncols)[0])


def reduce_vector(vec: int, rows: List[int], pivots: List[int]) -> int:
    """Reduce vec against echelonized rows; zero result means membership."""
    for p, r in zip(pivots, rows):
        if (vec >> p) & 1:
            vec ^= r
    return vec


def in_rowspan(vec: int, rows: Iterable[int], ncols: int) -> bool:
    ech, piv = echelon(rows, ncols)
    return reduce_vector(vec, ech, piv) == 0
