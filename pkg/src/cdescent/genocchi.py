"""Gandhi polynomial recursion and generalized Genocchi numbers.

The order-k family starts from the constant 1 and iterates

    A_{m+1}(X) = X^k * A_m(X + 1) - (X - 1)^k * A_m(X),

all in exact integer coefficients; the 2n-th generalized Genocchi number
of order k is A_{n-1} evaluated at 1.  An independent check counts the
permutations of [k*n] in which position i holds a value >= i exactly when
that value is divisible by k; their number is the (2n+2)-nd Genocchi
number of order k.
"""

from __future__ import annotations

import itertools
from math import comb

DEFAULT_SIZE_CAP = 8


def _shift_x_plus_one(coeffs: tuple[int, ...] | list[int]) -> list[int]:
    # A(X+1) by binomial expansion of each power.
    out = [0] * len(coeffs)
    for i, c in enumerate(coeffs):
        if c:
            for j in range(i + 1):
                out[j] += c * comb(i, j)
    return out


def _mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def _trimmed_difference(a: list[int], b: list[int]) -> tuple[int, ...]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def gandhi_poly(k: int, n: int) -> tuple[int, ...]:
    """Dense ascending coefficients of the n-th polynomial of order k.

    >>> gandhi_poly(2, 0)
    (1,)
    >>> gandhi_poly(2, 1)
    (-1, 2)
    >>> gandhi_poly(2, 2)
    (1, -4, 6)
    """
    if k < 1:
        raise ValueError(f"order must be positive: {k}")
    if n < 0:
        raise ValueError(f"index must be nonnegative: {n}")
    coeffs: tuple[int, ...] = (1,)
    x_minus_one_k = [(-1) ** (k - j) * comb(k, j) for j in range(k + 1)]
    for _ in range(n):
        shifted = [0] * k + _shift_x_plus_one(coeffs)
        straight = _mul(x_minus_one_k, list(coeffs))
        coeffs = _trimmed_difference(shifted, straight)
    return coeffs


def evaluate(coeffs: tuple[int, ...], x: int) -> int:
    """Value of a dense ascending-coefficient polynomial at an integer."""
    total = 0
    for c in reversed(coeffs):
        total = total * x + c
    return total


def genocchi_number(k: int, n: int) -> int:
    """The 2n-th generalized Genocchi number of order k.

    >>> [genocchi_number(2, m) for m in range(1, 7)]
    [1, 1, 3, 17, 155, 2073]
    >>> genocchi_number(1, 5)
    1
    """
    if n < 1:
        raise ValueError(f"index must be positive: {n}")
    return evaluate(gandhi_poly(k, n - 1), 1)


def brute_genocchi_perm_count(k: int, n: int, *, cap: int = DEFAULT_SIZE_CAP) -> int:
    """Count permutations of [k*n] where sigma(i) >= i exactly when k
    divides sigma(i).  Equals ``genocchi_number(k, n + 1)``.

    >>> brute_genocchi_perm_count(2, 2)
    3
    """
    if k < 1 or n < 1:
        raise ValueError(f"order and index must be positive: ({k}, {n})")
    size = k * n
    if size > cap:
        raise ValueError(f"k*n = {size} exceeds the enumeration cap {cap}")
    count = 0
    for perm in itertools.permutations(range(1, size + 1)):
        if all((v >= i) == (v % k == 0) for i, v in enumerate(perm, start=1)):
            count += 1
    return count
