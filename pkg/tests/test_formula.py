import pytest
from hypothesis import given
from hypothesis import strategies as st

from cdescent import (
    brute_cdes_table,
    cdes_formula,
    cdes_formula_typed,
    gap_vector,
    iter_value_sets,
    set_type,
    tau,
    tree_weight_sum,
)

value_sets = st.sets(st.integers(2, 14), max_size=7).map(lambda s: tuple(sorted(s)))


@pytest.mark.parametrize(
    "s, expected",
    [
        ((2, 4), (2, 1)),
        ((7,), (6,)),
        ((2, 3, 4), (1, 1, 1)),
        ((), ()),
    ],
)
def test_gap_vector(s, expected):
    assert gap_vector(s) == expected


def test_gap_vector_rejects_one():
    with pytest.raises(ValueError):
        gap_vector((1, 3))


@given(value_sets.filter(bool))
def test_gap_vector_shape(s):
    gaps = gap_vector(s)
    assert all(g >= 1 for g in gaps)
    assert sum(gaps) == max(s) - 1
    # Cumulative sums from 1, read in reverse, reconstruct the set.
    assert tau(gaps[::-1]) == s


@pytest.mark.parametrize(
    "s, expected",
    [
        ((2, 4), ((4, 1), (2, 1))),
        ((3, 4, 7, 8, 9), ((9, 3), (4, 2))),
        ((2,), ((2, 1),)),
        ((), ()),
    ],
)
def test_set_type(s, expected):
    assert set_type(s) == expected


def test_set_type_reconstructs():
    for n in range(2, 9):
        for s in iter_value_sets(n):
            if not s:
                continue
            rebuilt = []
            for run_max, run_len in set_type(s):
                rebuilt.extend(range(run_max - run_len + 1, run_max + 1))
            assert tuple(sorted(rebuilt)) == s


@pytest.mark.parametrize(
    "n, s, expected",
    [
        (4, (2, 4), 3),
        (5, (3, 5), 17),
        (6, (6,), 31),
        (5, (2, 3, 4, 5), 1),
        (5, (1, 3), 0),
        (7, (), 1),
        (1, (), 1),
    ],
)
def test_cdes_formula(n, s, expected):
    assert cdes_formula(n, s) == expected


@pytest.mark.parametrize(
    "n, s, expected",
    [
        (4, (2, 4), 3),
        (5, (4, 5), 31),
        (9, (), 1),
    ],
)
def test_cdes_formula_typed(n, s, expected):
    assert cdes_formula_typed(n, s) == expected


def test_rejects_n_below_max():
    with pytest.raises(ValueError):
        cdes_formula(3, (2, 4))
    with pytest.raises(ValueError):
        cdes_formula_typed(3, (4,))
    with pytest.raises(ValueError):
        cdes_formula(0, ())


def test_formula_independent_of_n():
    for s in [(2,), (3, 5), (2, 4, 7), (6,)]:
        base = cdes_formula(max(s), s)
        for n in range(max(s), max(s) + 6):
            assert cdes_formula(n, s) == base


def test_formula_matches_brute():
    for n in range(1, 7):
        table = brute_cdes_table(n)
        for s in iter_value_sets(n):
            assert cdes_formula(n, s) == table.get(s, 0), (n, s)


def test_typed_matches_formula_exhaustively():
    for n in range(1, 9):
        for s in iter_value_sets(n):
            assert cdes_formula_typed(n, s) == cdes_formula(n, s), (n, s)


def test_singleton_law():
    for n in range(2, 65):
        assert cdes_formula(n, (n,)) == 2 ** (n - 1) - 1


@given(value_sets)
def test_typed_and_tree_agree_with_formula(s):
    n = max(s, default=1)
    want = cdes_formula(n, s)
    assert cdes_formula_typed(n, s) == want
    if s:
        assert tree_weight_sum(gap_vector(s)) == want
    assert want >= 0
