"""Bar sorting, the incidence matrix of the divider-to-bar map, and an exact Smith-form test.

The sorting scan and the Smith-form test decide the same question by
unrelated means.  Keep them apart: neither may call the other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import BarDiagram

__all__ = [
    "SortTrace",
    "IncidenceMatrix",
    "sort_bars",
    "incidence_matrix",
    "smith_diagonal",
    "integer_rank",
    "is_onto",
    "is_bijective",
]

Bar = tuple[int, int]


@dataclass(frozen=True)
class SortTrace:
    moves: tuple[tuple[Bar, int], ...]  # (bar, divider that released it)
    residual: tuple[Bar, ...]

    @property
    def fully_sorted(self) -> bool:
        return not self.residual


def sort_bars(d: BarDiagram, policy: str = "restart") -> SortTrace:
    """Move singly-crossed bars out of the diagram until none is left to move.

    With ``policy="restart"`` each scan starts again at divider 1 after a
    move.  ``policy="wrap"`` resumes right after the divider that triggered
    the move and wraps around; it exists only to compare verdicts.
    """
    if policy not in ("restart", "wrap"):
        raise ValueError(f"unknown policy {policy!r}")
    remaining = list(d.bars)
    moves = []
    ndiv = d.n - 1
    start = 0
    while remaining and ndiv > 0:
        found = None
        for off in range(ndiv):
            div = (start + off) % ndiv + 1
            over = [b for b in remaining if b[0] <= div < b[1]]
            if len(over) == 1:
                found = (over[0], div)
                break
        if found is None:
            break
        bar, div = found
        remaining.remove(bar)
        moves.append(found)
        start = 0 if policy == "restart" else div % ndiv
    return SortTrace(tuple(moves), tuple(remaining))


@dataclass(frozen=True)
class IncidenceMatrix:
    """0/1 matrix with one row per bar and one column per divider."""

    rows: tuple[tuple[int, ...], ...]
    ncols: int

    @property
    def nrows(self) -> int:
        return len(self.rows)


def incidence_matrix(d: BarDiagram) -> IncidenceMatrix:
    cols = max(d.n - 1, 0)
    rows = tuple(tuple(1 if i <= c < j else 0 for c in range(1, cols + 1)) for i, j in d.bars)
    return IncidenceMatrix(rows, cols)


def smith_diagonal(rows, ncols: int | None = None) -> list[int]:
    """Nonzero invariant factors of an integer matrix, in divisibility order.

    Plain elimination over Python integers; the length of the result is the rank.
    """
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    n = ncols if ncols is not None else (len(a[0]) if a else 0)

    def bring_to_pivot(t, cells):
        i, j = min(cells, key=lambda ij: abs(a[ij[0]][ij[1]]))
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]

    diag = []
    for t in range(min(m, n)):
        cells = [(i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not cells:
            break
        bring_to_pivot(t, cells)
        while True:
            piv = a[t][t]
            for i in range(t + 1, m):
                q = a[i][t] // piv
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            for j in range(t + 1, n):
                q = a[t][j] // piv
                if q:
                    for row in a:
                        row[j] -= q * row[t]
            left = [(i, t) for i in range(t + 1, m) if a[i][t]]
            left += [(t, j) for j in range(t + 1, n) if a[t][j]]
            if left:
                # every leftover is a remainder, strictly smaller than the pivot
                bring_to_pivot(t, left)
                continue
            bad = next((i for i in range(t + 1, m) if any(a[i][j] % piv for j in range(t + 1, n))), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        diag.append(abs(a[t][t]))
    return diag


def integer_rank(m: IncidenceMatrix) -> int:
    return len(smith_diagonal(m.rows, m.ncols))


def is_onto(m: IncidenceMatrix) -> bool:
    """Whether ``alpha -> M alpha`` maps Z^(n-1) onto Z^e."""
    diag = smith_diagonal(m.rows, m.ncols)
    return len(diag) == m.nrows and all(x == 1 for x in diag)


def is_bijective(m: IncidenceMatrix) -> bool:
    return m.nrows == m.ncols and is_onto(m)
