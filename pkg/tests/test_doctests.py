import doctest

import pytest

import cdescent.formula
import cdescent.genocchi
import cdescent.perms
import cdescent.poly
import cdescent.recursion
import cdescent.tableaux
import cdescent.tree


@pytest.mark.parametrize(
    "module",
    [
        cdescent.perms,
        cdescent.formula,
        cdescent.recursion,
        cdescent.tree,
        cdescent.poly,
        cdescent.tableaux,
        cdescent.genocchi,
    ],
    ids=lambda m: m.__name__,
)
def test_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0
    assert result.attempted > 0
