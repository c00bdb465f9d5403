import pytest

from cdescent import brute_genocchi_perm_count, gandhi_poly, genocchi_number
from cdescent.genocchi import evaluate


@pytest.mark.parametrize(
    "k, n, expected",
    [
        (2, 0, (1,)),
        (2, 1, (-1, 2)),
        (2, 2, (1, -4, 6)),
        (1, 3, (1,)),
    ],
)
def test_gandhi_poly(k, n, expected):
    assert gandhi_poly(k, n) == expected


def test_gandhi_poly_degree():
    # Degree n*(k-1), observed on the small range (not proved here).
    for k in (1, 2, 3, 4):
        for n in range(6):
            assert len(gandhi_poly(k, n)) == n * (k - 1) + 1, (k, n)


def test_gandhi_rejects():
    with pytest.raises(ValueError):
        gandhi_poly(0, 1)
    with pytest.raises(ValueError):
        gandhi_poly(2, -1)


def test_genocchi_order_two_sequence():
    assert [genocchi_number(2, n) for n in range(1, 7)] == [1, 1, 3, 17, 155, 2073]


def test_genocchi_order_one_is_constant():
    assert all(genocchi_number(1, n) == 1 for n in range(1, 9))


def test_shift_identity():
    # The subtracted term vanishes at 1, so A_{n+1}(1) = A_n(2).
    for k in (1, 2, 3):
        for n in range(6):
            assert evaluate(gandhi_poly(k, n + 1), 1) == evaluate(
                gandhi_poly(k, n), 2
            ), (k, n)


@pytest.mark.parametrize(
    "k, n, expected",
    [
        (2, 1, 1),
        (2, 2, 3),
        (1, 2, 1),
        (3, 1, 1),
    ],
)
def test_brute_count(k, n, expected):
    assert brute_genocchi_perm_count(k, n) == expected


def test_brute_count_matches_recursion():
    for k in (1, 2, 3):
        for n in range(1, 9):
            if k * n > 8:
                continue
            assert brute_genocchi_perm_count(k, n) == genocchi_number(k, n + 1), (k, n)


def test_brute_cap():
    with pytest.raises(ValueError):
        brute_genocchi_perm_count(3, 3)
    with pytest.raises(ValueError):
        brute_genocchi_perm_count(2, 0)
    assert brute_genocchi_perm_count(3, 3, cap=9) == genocchi_number(3, 4)
