import math

import pytest

from cdescent import (
    Poly,
    brute_cdes_table,
    cdes_formula,
    descent_set_coefficient,
    gn,
    gnk,
    iter_value_sets,
    tau,
)
from cdescent.verify import REFERENCE_COUNTS


def test_constructor_normalizes():
    p = Poly({((2, 1), 1): 3, ((1, 2), 1): -3, ((), 0): 5})
    assert p == Poly.constant(5)
    assert not Poly({((1,), 0): 0})
    with pytest.raises(ValueError):
        Poly({((1, 1), 0): 1})
    with pytest.raises(ValueError):
        Poly({((), -1): 1})


def test_arithmetic_identities():
    p = Poly({((1,), 1): 1, ((), 0): 1})  # 1 + x1*y
    assert p * Poly.constant(1) == p
    assert p + 0 == p
    assert p - p == Poly()
    assert 2 * p == p + p
    assert (p * Poly.x(2)) * 3 == 3 * (Poly.x(2) * p)


def test_squarefree_multiplication_guard():
    with pytest.raises(ValueError):
        Poly.x(1) * Poly.x(1)
    assert Poly.x(1) * Poly.x(2) == Poly({((1, 2), 0): 1})


def test_partial_derivatives():
    p = Poly({((), 0): 1, ((1,), 1): 1})  # 1 + x1*y
    assert p.partial_x(1) == Poly.y()
    assert Poly({((1, 2), 2): 1}).partial_y() == Poly({((1, 2), 1): 2})
    assert p.partial_x(9) == Poly()
    assert Poly.constant(7).partial_y() == Poly()


def test_evaluate():
    p = Poly({((), 0): 1, ((1, 2), 2): 3})
    assert p.evaluate(1, 1) == 4
    assert p.evaluate(2, 1) == 13
    assert p.evaluate({1: 1, 2: 0}, 5) == 1


def test_str_canonical():
    assert str(Poly()) == "0"
    assert str(Poly.constant(1)) == "1"
    assert str(gn(3)) == "1 + x1*y + 3*x2*y + x1*x2*y^2"
    # ascending y-degree, then lexicographic x-variables
    p = Poly({((2,), 1): 1, ((1,), 1): 1, ((), 0): 2, ((1, 2), 2): -1})
    assert str(p) == "2 + x1*y + x2*y + -1*x1*x2*y^2"


def test_gn_small():
    assert str(gn(2)) == "1 + x1*y"
    with pytest.raises(ValueError):
        gn(1)


def test_gn_matches_reference_table():
    for n, expected in REFERENCE_COUNTS.items():
        want = {
            (tuple(v - 1 for v in s), len(s)): coeff for s, coeff in expected.items()
        }
        assert gn(n).terms() == want, n


def test_gn_matches_brute_enumeration():
    # Rebuild the polynomial straight from the brute-force table.
    for n in range(2, 7):
        direct = Poly(
            {
                (tuple(v - 1 for v in s), len(s)): count
                for s, count in brute_cdes_table(n).items()
            }
        )
        assert gn(n) == direct, n


def test_gn_coefficients_are_counts():
    for n in range(2, 10):
        g = gn(n)
        for s in iter_value_sets(n):
            assert descent_set_coefficient(g, s) == cdes_formula(n, s), (n, s)


def test_gn_structure():
    for n in range(2, 10):
        g = gn(n)
        assert all(len(xv) == ydeg for xv, ydeg in g.terms())
        assert g.evaluate(1, 1) == math.factorial(n)


@pytest.mark.parametrize(
    "parts, expected",
    [
        ((1, 2), (2, 4)),
        ((6,), (7,)),
        ((1, 1, 1), (2, 3, 4)),
    ],
)
def test_tau(parts, expected):
    assert tau(parts) == expected


def test_tau_rejects_nonpositive():
    with pytest.raises(ValueError):
        tau((1, 0))


def test_gnk_small():
    assert gnk(4, 0) == Poly.constant(1)
    assert str(gnk(4, 2)) == "x1*x2 + 3*x1*x3 + 7*x2*x3"
    assert str(gnk(5, 4)) == "x1*x2*x3*x4"
    with pytest.raises(ValueError):
        gnk(4, 4)


def test_gnk_composition_order_regression():
    # tau((1, 2)) = {2, 4} must carry weight 3 (its own gap vector (2, 1)),
    # while tau((2, 1)) = {3, 4} carries 7: attaching the unreversed
    # composition's weight would swap them.
    g = gnk(4, 2)
    assert g.coefficient((1, 3), 0) == 3
    assert g.coefficient((2, 3), 0) == 7


def test_gnk_reassembles_gn():
    for n in range(2, 9):
        total = Poly()
        for k in range(n):
            total = total + gnk(n, k) * Poly.y(k)
        assert total == gn(n), n
