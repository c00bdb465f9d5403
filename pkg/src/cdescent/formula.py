"""Closed-form counting of permutations by descent-value set.

The count of permutations of [n] whose descent-value set equals S depends
only on the gaps between consecutive elements of S: it is an alternating
sum over the binary cube {0,1}^|S|, where the assignment x raises each
factor base by its prefix sum,

    sum_x (-1)^(|S| - sum x_j) * prod_i (1 + x_1 + ... + x_i)^(d_i),

with d the gap vector of S read from the largest element down.  The same
value can be regrouped run by run: inside a run of consecutive elements
every gap is 1, so only the position closing a run carries an extra
exponent.  Both evaluations are implemented, in exact integer arithmetic
throughout, and are cross-checked against each other and against the
brute-force oracle.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable

from .perms import as_value_set


def gap_vector(s: Iterable[int]) -> tuple[int, ...]:
    """Consecutive gaps of S in descending-element order, closing at 1.

    For S = {s_1 > s_2 > ... > s_k} the result is
    (s_1 - s_2, ..., s_{k-1} - s_k, s_k - 1); the empty set gives ().
    Entries are >= 1 and sum to max(S) - 1.

    >>> gap_vector({2, 4})
    (2, 1)
    >>> gap_vector({7})
    (6,)
    >>> gap_vector({2, 3, 4})
    (1, 1, 1)
    """
    s = as_value_set(s)
    if not s:
        return ()
    if s[0] == 1:
        raise ValueError("1 cannot belong to a descent-value set")
    desc = s[::-1]
    return tuple(a - b for a, b in itertools.pairwise(desc)) + (desc[-1] - 1,)


def set_type(s: Iterable[int]) -> tuple[tuple[int, int], ...]:
    """Maximal runs of consecutive elements as (run max, run length) pairs,
    largest run first.

    >>> set_type({2, 4})
    ((4, 1), (2, 1))
    >>> set_type({3, 4, 7, 8, 9})
    ((9, 3), (4, 2))
    >>> set_type({2})
    ((2, 1),)
    """
    s = as_value_set(s)
    if not s:
        return ()
    if s[0] == 1:
        raise ValueError("1 cannot belong to a descent-value set")
    runs: list[tuple[int, int]] = []
    start = prev = s[0]
    for v in s[1:]:
        if v != prev + 1:
            runs.append((prev, prev - start + 1))
            start = v
        prev = v
    runs.append((prev, prev - start + 1))
    return tuple(reversed(runs))


def _check_query(n: int, s: Iterable[int]) -> tuple[int, ...]:
    if n < 1:
        raise ValueError(f"n must be positive: {n}")
    return as_value_set(s, n=n)


def _cube_sum(gaps: tuple[int, ...]) -> int:
    # Depth-first walk of {0,1}^k in ascending binary order.  The signed
    # partial product is carried down, so each of the 2^k assignments
    # costs one multiplication instead of k exponentiations.
    k = len(gaps)

    def walk(i: int, prefix: int, acc: int) -> int:
        if i == k:
            return acc
        d = gaps[i]
        return walk(i + 1, prefix, -acc * (1 + prefix) ** d) + walk(
            i + 1, prefix + 1, acc * (2 + prefix) ** d
        )

    return walk(0, 0, 1)


def cdes_formula(n: int, s: Iterable[int]) -> int:
    """Count permutations of [n] with descent-value set S, by the
    alternating sum over {0,1}^|S| with the gap vector as exponents.

    Sets containing 1 count zero permutations; the empty set counts one
    (the identity).  The value is independent of n once n >= max(S);
    smaller n are rejected.

    >>> cdes_formula(4, {2, 4})
    3
    >>> cdes_formula(5, {3, 5})
    17
    >>> cdes_formula(6, {6})
    31
    """
    s = _check_query(n, s)
    if not s:
        return 1
    if s[0] == 1:
        return 0
    return _cube_sum(gap_vector(s))


def cdes_formula_typed(n: int, s: Iterable[int]) -> int:
    """Same count as :func:`cdes_formula`, evaluated through the run
    decomposition of S: one first-power factor per cube coordinate, plus
    one extra power where each run of consecutive elements closes.

    >>> cdes_formula_typed(4, {2, 4})
    3
    >>> cdes_formula_typed(5, {4, 5})
    31
    """
    s = _check_query(n, s)
    if not s:
        return 1
    if s[0] == 1:
        return 0
    runs = set_type(s)
    k = len(s)
    # Position of the last cube coordinate of each run, with the extra
    # exponent it carries: r_t - r_{t+1} - m_t, the next run max (or the
    # sentinel 1) measuring how far this run is from the one below.
    closing: dict[int, int] = {}
    position = 0
    for t, (run_max, run_len) in enumerate(runs):
        position += run_len
        next_max = runs[t + 1][0] if t + 1 < len(runs) else 1
        closing[position] = run_max - next_max - run_len
    total = 0
    for bits in itertools.product((0, 1), repeat=k):
        term = 1
        prefix = 0
        for i, x in enumerate(bits, start=1):
            prefix += x
            term *= 1 + prefix
            if i in closing:
                term *= (1 + prefix) ** closing[i]
        if (k - sum(bits)) % 2:
            term = -term
        total += term
    return total
