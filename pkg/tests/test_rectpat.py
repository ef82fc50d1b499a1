import random

import pytest

from latinpat.construct import connolly_square
from latinpat.perm import contains
from latinpat.rectpat import (
    contains_rectangle,
    extract_subrectangle,
    rect_order_isomorphic,
    rect_rank_pattern,
    rotate_rect_90,
)
from latinpat.square import (
    column_permutations,
    latin_rectangle,
    row_permutations,
)

from conftest import S3, S4, collect_squares


# ---------------------------------------------------------------------------
# order isomorphism
# ---------------------------------------------------------------------------

def test_worked_isomorphism_example():
    a = latin_rectangle([[6, 8, 3], [1, 6, 8]])
    b = latin_rectangle([[3, 4, 2], [1, 3, 4]])
    assert rect_order_isomorphic(a, b)
    assert rect_rank_pattern(a) == ((3, 4, 2), (1, 3, 4))


def test_isomorphism_identity_and_negative():
    a = latin_rectangle([[1, 2]])
    assert rect_order_isomorphic(a, a)
    assert not rect_order_isomorphic(a, latin_rectangle([[2, 1]]))
    assert not rect_order_isomorphic(a, latin_rectangle([[1], [2]]))


def test_repeated_values_must_stay_equal():
    # 3 appears twice in the first; an increasing relabel cannot split it
    a = latin_rectangle([[3, 4], [1, 3]])
    b = latin_rectangle([[3, 4], [1, 2]])
    assert not rect_order_isomorphic(a, b)
    assert rect_order_isomorphic(a, latin_rectangle([[5, 9], [2, 5]]))


def random_subrectangle(rng, sq, p, q):
    rows = tuple(sorted(rng.sample(range(1, sq.order + 1), p)))
    cols = tuple(sorted(rng.sample(range(1, sq.order + 1), q)))
    return extract_subrectangle(sq, rows, cols)


def test_isomorphism_is_an_equivalence_relation():
    rng = random.Random(7)
    sq = connolly_square(3)
    rects = [random_subrectangle(rng, sq, 2, 3) for _ in range(40)]
    for a in rects[:12]:
        assert rect_order_isomorphic(a, a)
        for b in rects[:12]:
            assert rect_order_isomorphic(a, b) == rect_order_isomorphic(b, a)
            for c in rects[:12]:
                if rect_order_isomorphic(a, b) and rect_order_isomorphic(b, c):
                    assert rect_order_isomorphic(a, c)


# ---------------------------------------------------------------------------
# rotation
# ---------------------------------------------------------------------------

def test_rotation_of_row_rectangle():
    row = latin_rectangle([[1, 2, 3]])
    col = rotate_rect_90(row)
    assert col.grid == ((1,), (2,), (3,))
    assert (col.rows, col.cols) == (3, 1)


def test_rotation_four_times_is_identity():
    rect = latin_rectangle([[3, 4, 2], [1, 3, 4]])
    out = rect
    for _ in range(4):
        out = rotate_rect_90(out)
    assert out.grid == rect.grid
    once = rotate_rect_90(rect)
    assert (once.rows, once.cols) == (rect.cols, rect.rows)


def test_rotation_index_map():
    rect = latin_rectangle([[1, 2], [3, 4], [5, 6]])  # 3x2
    got = rotate_rect_90(rect)
    # entry (i, j) moves to (j, p+1-i) with p = 3
    assert got.grid == ((5, 3, 1), (6, 4, 2))


# ---------------------------------------------------------------------------
# containment
# ---------------------------------------------------------------------------

def test_worked_containment_example():
    sq = connolly_square(3)
    rect = latin_rectangle([[3, 4, 2], [1, 3, 4]])
    witness = contains_rectangle(sq, rect)
    assert witness == ((2, 7), (1, 5, 9))
    sub = extract_subrectangle(sq, *witness)
    assert sub.grid == ((6, 8, 3), (1, 6, 8))
    assert rect_order_isomorphic(sub, rect)


def test_single_cell_pattern_always_contained():
    rect = latin_rectangle([[1]])
    for n in (1, 2, 4):
        sq = collect_squares(n)[0]
        assert contains_rectangle(sq, rect) == ((1,), (1,))


def test_dimension_overflow():
    sq = collect_squares(2)[0]
    with pytest.raises(ValueError):
        contains_rectangle(sq, latin_rectangle([[1, 2, 3]]))


def test_witness_reverifies(squares4):
    rng = random.Random(3)
    rects = [random_subrectangle(rng, connolly_square(2), 2, 2) for _ in range(10)]
    for sq in squares4[::101]:
        for rect in rects:
            witness = contains_rectangle(sq, rect)
            if witness is not None:
                sub = extract_subrectangle(sq, *witness)
                assert rect_order_isomorphic(sub, rect)


def test_row_rectangle_reduction(squares3, squares4):
    # a 1xk rectangle is contained iff some row contains the pattern, and
    # its rotation iff some column does
    for squares, patterns in ((squares3, S3), (squares4, S3 + S4)):
        for q in patterns:
            rect = latin_rectangle([list(q)])
            rot = rotate_rect_90(rect)
            for sq in squares:
                in_rows = any(contains(r, q) for r in row_permutations(sq))
                in_cols = any(contains(c, q) for c in column_permutations(sq))
                assert (contains_rectangle(sq, rect) is not None) == in_rows
                assert (contains_rectangle(sq, rot) is not None) == in_cols


def test_avoiding_row_rect_and_rotation_is_the_cyclic_family(squares3, squares4):
    rect = latin_rectangle([[1, 2, 3]])
    rot = rotate_rect_90(rect)
    for n, squares in ((3, squares3), (4, squares4)):
        avoiders = [
            sq
            for sq in squares
            if contains_rectangle(sq, rect) is None
            and contains_rectangle(sq, rot) is None
        ]
        assert len(avoiders) == n
