import math

import pytest

from cdescent import (
    brute_count_tableaux,
    count_tableaux_formula,
    count_tableaux_type_sum,
    format_filling,
    is_valid_tableau,
    iter_shapes,
    partition_type,
    shape_to_descent_set,
)


@pytest.mark.parametrize(
    "shape, a, b",
    [
        ((2, 1), (2, 1), (1, 2)),
        ((3, 3, 1), (3, 1), (2, 3)),
        ((2, 2), (2,), (2,)),
    ],
)
def test_partition_type(shape, a, b):
    assert partition_type(shape) == (a, b)


@pytest.mark.parametrize("bad", [(), (1, 2), (2, 0), (2, -1)])
def test_bad_shapes_rejected(bad):
    with pytest.raises(ValueError):
        partition_type(bad)


@pytest.mark.parametrize(
    "shape, expected",
    [
        ((2, 1), (4, (2, 4))),
        ((1, 1, 1), (4, (4,))),
        ((3,), (4, (2, 3, 4))),
        ((3, 3, 1), (6, (3, 4, 6))),
    ],
)
def test_shape_to_descent_set(shape, expected):
    assert shape_to_descent_set(shape) == expected


def test_border_path_invariants():
    for shape in iter_shapes(12, 4):
        n, s = shape_to_descent_set(shape)
        assert n == len(shape) + shape[0]
        assert 1 not in s
        assert s[-1] == n
        assert len(s) == shape[0]
        assert n - len(s) == len(shape)


@pytest.mark.parametrize(
    "shape, expected",
    [
        ((2, 1), 3),
        ((1, 1, 1), 7),
        ((3,), 1),
    ],
)
def test_count_tableaux_formula(shape, expected):
    assert count_tableaux_formula(shape) == expected


@pytest.mark.parametrize(
    "shape, bits, expected",
    [
        ((2, 1), (1, 1, 1), True),
        ((2, 1), (0, 1, 0), False),  # first column has no 1
        ((2, 2), (1, 1, 1, 0), False),  # 0 with a 1 above and a 1 to its left
    ],
)
def test_is_valid_tableau(shape, bits, expected):
    assert is_valid_tableau(shape, bits) is expected


def test_filling_validation():
    with pytest.raises(ValueError):
        is_valid_tableau((2, 1), (1, 1))
    with pytest.raises(ValueError):
        is_valid_tableau((2, 1), (1, 2, 0))


def test_format_filling():
    assert format_filling((2, 1), (1, 0, 1)) == "10\n1"


@pytest.mark.parametrize(
    "shape, expected",
    [
        ((2, 1), 3),
        ((2, 2), 7),
        ((1, 1), 3),
    ],
)
def test_brute_count(shape, expected):
    assert brute_count_tableaux(shape) == expected


def test_brute_count_is_filter_count():
    # The pruned search agrees with filtering all fillings through the
    # validity predicate.
    import itertools

    for shape in [(2, 1), (2, 2), (3, 1), (3, 2, 1), (2, 2, 2)]:
        boxes = sum(shape)
        direct = sum(
            is_valid_tableau(shape, bits)
            for bits in itertools.product((0, 1), repeat=boxes)
        )
        assert brute_count_tableaux(shape) == direct, shape


def test_box_cap():
    with pytest.raises(ValueError):
        brute_count_tableaux((6, 6, 6, 6))
    assert brute_count_tableaux((4, 4), cap=8) == count_tableaux_formula((4, 4))


def test_three_routes_agree():
    for shape in iter_shapes(12, 4):
        want = count_tableaux_formula(shape)
        assert count_tableaux_type_sum(shape) == want, shape
        assert brute_count_tableaux(shape) == want, shape


def test_counts_by_length_sum_to_factorial():
    # Every shape of semiperimeter <= n is reachable in S_n (short shapes
    # stand for tableaux padded with empty rows), and with the empty
    # descent set they exhaust the n! permutations.
    for n in range(2, 9):
        total = 1 + sum(
            count_tableaux_formula(shape)
            for shape in iter_shapes(n * n, n)
            if len(shape) + shape[0] <= n
        )
        assert total == math.factorial(n), n


def test_iter_shapes():
    shapes = list(iter_shapes(4, 2))
    assert (2, 2) in shapes and (4,) in shapes and (1, 1) in shapes
    assert (1, 1, 1) not in shapes  # three rows
    assert (3, 2) not in shapes  # five boxes
    assert all(sum(s) <= 4 and len(s) <= 2 for s in shapes)
    assert len(shapes) == len(set(shapes))
