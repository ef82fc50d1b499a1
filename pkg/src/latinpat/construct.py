"""
Direct constructive generators: the unique column-avoiding completions of a
fixed anchor row, the n cyclic squares avoiding a given length-3 pattern,
and the modular square whose longest line-monotone subsequence stays small.
No searching happens here; every square is written down in closed form or by
the iterative column-filling procedure, and the enumeration engine is used
only in the test suite to confirm uniqueness.
"""
from __future__ import annotations

from typing import Sequence

from . import perm
from .perm import Perm, as_perm
from .square import LatinSquare, flip_vertical, latin_square, relabel, rotate180

#: length-3 patterns whose avoiders are built from cyclic *decreasing* lines
DECREASING_PATTERNS = {(1, 2, 3), (2, 3, 1), (3, 1, 2)}
#: length-3 patterns whose avoiders are built from cyclic *increasing* lines
INCREASING_PATTERNS = {(1, 3, 2), (2, 1, 3), (3, 2, 1)}

#: patterns for which the anchor row sits at the bottom of the square
BOTTOM_ANCHORED = {(2, 3, 1), (2, 1, 3)}


def _require_s3(pattern: Sequence[int]) -> Perm:
    p = as_perm(pattern)
    if len(p) != 3:
        raise ValueError(f"pattern must have length 3, got {p}")
    return p


def _fill_columns_123(first_row: Perm) -> LatinSquare:
    """
    The unique square with the given top row whose columns avoid 1-2-3.

    Iterative construction: process anchors 1, 2, ..., n-1 in turn.  In the
    column topped by anchor a, the values below a are forced: everything
    smaller than a descends immediately under it, everything larger than a
    descends through the bottom rows.  The column topped by n is then
    completed row by row through elimination.
    """
    n = len(first_row)
    grid = [[0] * n for _ in range(n)]
    grid[0] = list(first_row)
    position = {a: j for j, a in enumerate(first_row)}
    for a in range(1, n):
        j = position[a]
        for r, v in enumerate(range(a - 1, 0, -1), start=1):
            grid[r][j] = v
        for r, v in enumerate(range(n, a, -1), start=a):
            grid[r][j] = v
    j_last = position[n]
    for r in range(1, n):
        grid[r][j_last] = n * (n + 1) // 2 - sum(grid[r])  # the row's missing value
    return latin_square(grid)


def _fill_columns_132(first_row: Perm) -> LatinSquare:
    """
    The unique square with the given top row whose columns avoid 1-3-2:
    values above the anchor ascend right below it, values below the anchor
    ascend through the bottom rows.  The column topped by n is completed by
    elimination.
    """
    n = len(first_row)
    grid = [[0] * n for _ in range(n)]
    grid[0] = list(first_row)
    position = {a: j for j, a in enumerate(first_row)}
    for a in range(1, n):
        j = position[a]
        for r, v in enumerate(range(a + 1, n + 1), start=1):
            grid[r][j] = v
        for r, v in enumerate(range(1, a), start=n - a + 1):
            grid[r][j] = v
    j_last = position[n]
    for r in range(1, n):
        grid[r][j_last] = n * (n + 1) // 2 - sum(grid[r])
    return latin_square(grid)


def _complemented(builder, first_row: Perm) -> LatinSquare:
    # Solve for the complement pattern on the complemented anchor row, then
    # complement every entry back.
    comp_row = perm.complement(first_row)
    return relabel(builder(comp_row), perm.complement(perm.identity(len(first_row))))


def complete_columns_avoiding(anchor_row: Sequence[int], pattern: Sequence[int]) -> LatinSquare:
    """
    The unique Latin square avoiding the length-3 pattern in every column,
    anchored on the given row.

    For patterns 1-2-3, 1-3-2, 3-1-2 and 3-2-1 the anchor is the *top* row;
    for 2-3-1 and 2-1-3 the completion runs upward instead, and the anchor
    is the *bottom* row.
    """
    anchor_row = as_perm(anchor_row)
    p = _require_s3(pattern)
    if p == (1, 2, 3):
        return _fill_columns_123(anchor_row)
    if p == (1, 3, 2):
        return _fill_columns_132(anchor_row)
    if p == (3, 2, 1):
        return _complemented(_fill_columns_123, anchor_row)
    if p == (3, 1, 2):
        return _complemented(_fill_columns_132, anchor_row)
    # bottom-anchored cases: flip the square built for the reversed pattern
    if p == (2, 3, 1):
        return flip_vertical(_fill_columns_132(anchor_row))
    return flip_vertical(_complemented(_fill_columns_132, anchor_row))  # 2-1-3


def construct_s3_avoider(n: int, pattern: Sequence[int], start: int) -> LatinSquare:
    """
    The unique square avoiding the length-3 pattern in all rows and columns
    whose top-left entry is `start`: every line is cyclic decreasing for
    1-2-3, 2-3-1 and 3-1-2, cyclic increasing for 1-3-2, 2-1-3 and 3-2-1.
    """
    p = _require_s3(pattern)
    if not 1 <= start <= n:
        raise ValueError(f"start symbol {start} outside 1..{n}")
    if p in DECREASING_PATTERNS:
        grid = [[(start - 1 - r - c) % n + 1 for c in range(n)] for r in range(n)]
    else:
        grid = [[(start - 1 + r + c) % n + 1 for c in range(n)] for r in range(n)]
    return latin_square(grid)


def all_s3_avoiders(n: int, pattern: Sequence[int]) -> list[LatinSquare]:
    """All n squares avoiding the length-3 pattern, by top-left entry 1..n."""
    return [construct_s3_avoider(n, pattern, i) for i in range(1, n + 1)]


def connolly_square(n: int) -> LatinSquare:
    """
    The order-n^2 square whose (i, j) entry is k*n reduced mod n^2+1, where
    k is i+j-1 reduced into 1..n^2.  Every line's longest monotone
    subsequence has length n+1, which pins the minimax for square orders.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    order = n * n
    modulus = order + 1
    grid = [
        [((i + j - 2) % order + 1) * n % modulus for j in range(1, order + 1)]
        for i in range(1, order + 1)
    ]
    return latin_square(grid)


# ---------------------------------------------------------------------------
# avoider-set bijections
# ---------------------------------------------------------------------------

def avoider_complement_map(sq: LatinSquare) -> LatinSquare:
    """
    Replace every entry e with n+1-e.  An involution carrying the squares
    avoiding a pattern onto the squares avoiding its complement.
    """
    return relabel(sq, perm.complement(perm.identity(sq.order)))


def avoider_reverse_map(sq: LatinSquare) -> LatinSquare:
    """
    Rotate 180 degrees, reversing all rows and columns.  An involution
    carrying the avoiders of a pattern onto the avoiders of its reverse.
    """
    return rotate180(sq)


def avoider_relabel_map(sq: LatinSquare, source: Sequence[int], target: Sequence[int]) -> LatinSquare:
    """
    Relabel entries by target . source^{-1}; for full-length patterns this
    carries the squares column-avoiding `source` onto those column-avoiding
    `target` (and likewise for row or row+column avoidance).
    """
    source = as_perm(source)
    target = as_perm(target)
    if len(source) != sq.order or len(target) != sq.order:
        raise ValueError(
            f"patterns must have length {sq.order}, got {len(source)} and {len(target)}"
        )
    return relabel(sq, perm.compose(target, perm.inverse(source)))
