"""
Rectangular patterns in Latin squares.

A Latin square contains a rectangle pattern R when some sub-rectangle,
induced by strictly increasing row and column index sets, can be obtained
from R by applying an increasing function to R's entries.  Equal entries
must therefore stay equal and strict inequalities must keep their direction,
which is the same as saying the two grids have identical rank patterns over
their distinct values.
"""
from __future__ import annotations

from itertools import combinations

from .square import LatinRectangle, LatinSquare


def rect_rank_pattern(rect: LatinRectangle) -> tuple[tuple[int, ...], ...]:
    """Entries replaced by their ranks among the grid's distinct values."""
    distinct = sorted({v for row in rect.grid for v in row})
    rank = {v: i + 1 for i, v in enumerate(distinct)}
    return tuple(tuple(rank[v] for v in row) for row in rect.grid)


def rect_order_isomorphic(a: LatinRectangle, b: LatinRectangle) -> bool:
    """Same dimensions and identical rank patterns."""
    if a.rows != b.rows or a.cols != b.cols:
        return False
    return rect_rank_pattern(a) == rect_rank_pattern(b)


def rotate_rect_90(rect: LatinRectangle) -> LatinRectangle:
    """90-degree clockwise rotation; entry (i, j) moves to (j, p+1-i)."""
    p = rect.rows
    q = rect.cols
    grid = tuple(tuple(rect.grid[p - 1 - c][r] for c in range(p)) for r in range(q))
    return LatinRectangle(grid, rect.alphabet_bound)


def contains_rectangle(
    sq: LatinSquare, rect: LatinRectangle
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """
    First sub-rectangle of the square order isomorphic to the pattern, as
    1-indexed (row indices, column indices), or None if the square avoids it.

    Search order is lexicographic: row subsets outer, column subsets inner,
    so the returned witness is deterministic.  Column choices are extended
    one at a time and pruned as soon as the partial sub-rectangle's
    comparisons disagree with the pattern's.
    """
    n = sq.order
    p = rect.rows
    q = rect.cols
    if p > n or q > n:
        raise ValueError(f"pattern is {p}x{q} but the square has order {n}")
    grid = sq.grid
    pat = rect.grid

    def consistent(rows: tuple[int, ...], cols: list[int], c: int) -> bool:
        # compare the would-be column t=len(cols) against everything chosen
        t = len(cols)
        for i in range(p):
            v = grid[rows[i]][c]
            w = pat[i][t]
            for i2 in range(i):
                v2 = grid[rows[i2]][c]
                w2 = pat[i2][t]
                if (v < v2) != (w < w2) or (v == v2) != (w == w2):
                    return False
            for t2 in range(t):
                for i2 in range(p):
                    v2 = grid[rows[i2]][cols[t2]]
                    w2 = pat[i2][t2]
                    if (v < v2) != (w < w2) or (v == v2) != (w == w2):
                        return False
        return True

    def extend(rows: tuple[int, ...], cols: list[int]) -> tuple[int, ...] | None:
        if len(cols) == q:
            return tuple(cols)
        start = cols[-1] + 1 if cols else 0
        for c in range(start, n - (q - len(cols)) + 1):
            if consistent(rows, cols, c):
                cols.append(c)
                found = extend(rows, cols)
                if found is not None:
                    return found
                cols.pop()
        return None

    for rows in combinations(range(n), p):
        cols = extend(rows, [])
        if cols is not None:
            return (
                tuple(r + 1 for r in rows),
                tuple(c + 1 for c in cols),
            )
    return None


def extract_subrectangle(
    sq: LatinSquare, rows: tuple[int, ...], cols: tuple[int, ...]
) -> LatinRectangle:
    """The sub-rectangle at the given 1-indexed row and column index sets."""
    grid = tuple(tuple(sq.grid[r - 1][c - 1] for c in cols) for r in rows)
    return LatinRectangle(grid, sq.order)
