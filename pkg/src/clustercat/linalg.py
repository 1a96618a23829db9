"""Exact row reduction over Q.

Elimination is fraction-free (Bareiss) on integer-scaled rows; the reduced
form is produced only at the end, by dividing through by pivots.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for r in rows:
        den = 1
        for c in r:
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        out.append([int(c * den) for c in r])
    return out


def echelon(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Returns integer rows (only the nonzero ones) and their pivot columns.
    """
    a = _integer_rows(rows)
    if not a:
        return [], []
    ncols = len(a[0]) if ncols is None else ncols
    m = len(a)
    pivots: list[int] = []
    r = 0
    prev = 1
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, m):
            f = a[i][c]
            a[i] = [(piv * a[i][k] - f * a[r][k]) // prev for k in range(ncols)]
        prev = piv
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(echelon(rows)[1])


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q."""
    ech, pivots = echelon(rows, ncols)
    red = [[Fraction(c) for c in r] for r in ech]
    for i in range(len(red) - 1, -1, -1):
        c = pivots[i]
        p = red[i][c]
        red[i] = [x / p for x in red[i]]
        for j in range(i):
            f = red[j][c]
            if f:
                red[j] = [x - f * y for x, y in zip(red[j], red[i])]
    return red, pivots


def quotient_map(relations: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Matrix ``P`` (k x ncols) of a projection ``Q^ncols -> Q^ncols / span(relations)``.

    Coordinates of the quotient are the non-pivot columns of the reduced
    relation matrix; ``P @ r == 0`` for every relation ``r``.
    """
    red, pivots = rref(relations, ncols) if relations else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    out = []
    for c in free:
        row = [Fraction(0)] * ncols
        row[c] = Fraction(1)
        for r, p in zip(red, pivots):
            row[p] -= r[c]
        out.append(row)
    return out


def matvec(m: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> list[Fraction]:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m]
