"""Counting 0/1 fillings of Young diagrams by shape.

A shape is a weakly decreasing tuple of positive row lengths.  A filling
of its boxes with 0s and 1s is valid when (1) every column contains at
least one 1 and (2) no box holds a 0 that has a 1 above it in its column
and a 1 to its left in its row.  Row 1 is the top row; rows and columns
are 1-based.

Walking the southeast border of the diagram from the top-right corner of
its bounding rectangle down to the bottom-left corner and numbering the
steps 1..n (n = rows + columns), the horizontal steps form a set S of
values in [2, n] with max S = n, and the number of valid fillings equals
the number of permutations of [n] with descent-value set S.  The count is
therefore available three ways: by the border-path descent set, by a
direct alternating sum over the shape's distinct row lengths, and by
brute enumeration of fillings.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence

from .formula import cdes_formula

BOX_CAP = 20


def check_shape(parts: Iterable[int]) -> tuple[int, ...]:
    """Validate a weakly decreasing tuple of positive row lengths."""
    p = tuple(parts)
    if not p:
        raise ValueError("a shape needs at least one row")
    if any(not isinstance(v, int) or v < 1 for v in p):
        raise ValueError(f"row lengths must be positive integers: {p!r}")
    if any(a < b for a, b in itertools.pairwise(p)):
        raise ValueError(f"row lengths must be weakly decreasing: {p!r}")
    return p


def partition_type(parts: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Distinct row lengths in decreasing order, paired with the number of
    rows at least that long.

    >>> partition_type((2, 1))
    ((2, 1), (1, 2))
    >>> partition_type((3, 3, 1))
    ((3, 1), (2, 3))
    """
    p = check_shape(parts)
    a = tuple(sorted(set(p), reverse=True))
    b = tuple(sum(1 for row in p if row >= v) for v in a)
    return a, b


def shape_to_descent_set(parts: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Label the border-path steps 1..n and collect the horizontal ones.

    At row r and column c the path steps down when the r-th row ends at
    column c, and left otherwise; below the last row it runs left along
    the bottom.  The first step is always vertical and the last always
    horizontal, so 1 is never in the set and n always is.

    >>> shape_to_descent_set((2, 1))
    (4, (2, 4))
    >>> shape_to_descent_set((3,))
    (4, (2, 3, 4))
    """
    p = check_shape(parts)
    rows, width = len(p), p[0]
    n = rows + width
    horizontal = []
    row, col = 1, width
    for step in range(1, n + 1):
        if row <= rows and p[row - 1] == col:
            row += 1
        else:
            horizontal.append(step)
            col -= 1
    assert row == rows + 1 and col == 0
    return n, tuple(horizontal)


def count_tableaux_formula(parts: Iterable[int]) -> int:
    """Number of valid fillings, through the border-path descent set.

    >>> count_tableaux_formula((2, 1))
    3
    >>> count_tableaux_formula((1, 1, 1))
    7
    """
    n, s = shape_to_descent_set(parts)
    return cdes_formula(n, s)


def count_tableaux_type_sum(parts: Iterable[int]) -> int:
    """Number of valid fillings, directly from the shape's type: an
    alternating sum over {0,1}^width with one first-power factor per
    column and one extra power per distinct row length.

    Agrees with :func:`count_tableaux_formula` on every shape.
    """
    a, b = partition_type(parts)
    width = a[0]
    # Position a_t carries the extra exponent b_t - b_{t-1}: how many rows
    # of length exactly a_t there are, with a sentinel 1 above the widest.
    extras = {}
    prev_count = 1
    for length, count in zip(a, b):
        extras[length] = count - prev_count
        prev_count = count
    total = 0
    for bits in itertools.product((0, 1), repeat=width):
        prefix = 0
        term = 1
        for i, x in enumerate(bits, start=1):
            prefix += x
            term *= 1 + prefix
            if i in extras:
                term *= (1 + prefix) ** extras[i]
        if (width - sum(bits)) % 2:
            term = -term
        total += term
    return total


def _split_rows(p: tuple[int, ...], bits: Sequence[int]) -> list[list[int]]:
    cells = list(bits)
    if len(cells) != sum(p):
        raise ValueError(f"filling has {len(cells)} bits for {sum(p)} boxes")
    if any(v not in (0, 1) for v in cells):
        raise ValueError("filling entries must be 0 or 1")
    rows = []
    at = 0
    for length in p:
        rows.append(cells[at : at + length])
        at += length
    return rows


def is_valid_tableau(parts: Iterable[int], bits: Sequence[int]) -> bool:
    """Check both validity properties for a flat row-major filling.

    >>> is_valid_tableau((2, 1), (1, 1, 1))
    True
    >>> is_valid_tableau((2, 2), (1, 1, 1, 0))
    False
    """
    p = check_shape(parts)
    rows = _split_rows(p, bits)
    for col in range(p[0]):
        if not any(row[col] for row in rows if len(row) > col):
            return False
    for r, row in enumerate(rows):
        for c, v in enumerate(row):
            if v == 0:
                above = any(rows[rr][c] for rr in range(r))
                left = any(row[cc] for cc in range(c))
                if above and left:
                    return False
    return True


def format_filling(parts: Iterable[int], bits: Sequence[int]) -> str:
    """Debug dump: one row per line of 0/1 characters."""
    rows = _split_rows(check_shape(parts), bits)
    return "\n".join("".join(str(v) for v in row) for row in rows)


def brute_count_tableaux(parts: Iterable[int], *, cap: int = BOX_CAP) -> int:
    """Count valid fillings by depth-first search, column by column.

    A column pattern with no 1 is pruned immediately; the pattern rule is
    checked as each column is placed, since it only looks up within the
    column and left along rows already filled.

    >>> brute_count_tableaux((2, 1))
    3
    >>> brute_count_tableaux((2, 2))
    7
    """
    p = check_shape(parts)
    boxes = sum(p)
    if boxes > cap:
        raise ValueError(f"{boxes} boxes exceed the enumeration cap {cap}")
    heights = [sum(1 for row in p if row > c) for c in range(p[0])]

    def extend(col: int, row_has_one: tuple[bool, ...]) -> int:
        if col == len(heights):
            return 1
        h = heights[col]
        count = 0
        for pattern in range(1, 1 << h):
            flags = list(row_has_one)
            one_above = False
            ok = True
            for r in range(h):
                if pattern >> r & 1:
                    flags[r] = True
                    one_above = True
                elif one_above and row_has_one[r]:
                    ok = False
                    break
            if ok:
                count += extend(col + 1, tuple(flags))
        return count

    return extend(0, (False,) * len(p))


def iter_shapes(max_boxes: int, max_rows: int) -> Iterator[tuple[int, ...]]:
    """Every shape with at most ``max_boxes`` boxes and ``max_rows`` rows."""

    def grow(prefix: tuple[int, ...], remaining: int, max_part: int):
        for part in range(1, min(max_part, remaining) + 1):
            shape = (*prefix, part)
            yield shape
            if len(shape) < max_rows:
                yield from grow(shape, remaining - part, part)

    yield from grow((), max_boxes, max_boxes)
