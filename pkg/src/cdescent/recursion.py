"""Recursive counting routes.

Two independent recursions reproduce the closed-form counts:

* the minimum-element recursion, which splits the permutations with
  descent-value set S by the relative placement of min(S) and min(S) - 1
  and is driven top-down with memoization;
* the insertion recursion, which extends a full count table for [2, n-1]
  to one for [2, n] by inserting the new largest value n into shorter
  permutations, and is driven bottom-up.

Neither route shares code with the alternating-sum evaluation, so
agreement between the three is a meaningful cross-check.
"""

from __future__ import annotations

from collections.abc import Iterable

from .perms import as_value_set

Cache = dict[tuple[int, ...], int]


def delta(s: Iterable[int]) -> tuple[int, ...]:
    """Shift every element of S down by one.

    >>> delta((2, 4))
    (1, 3)
    >>> delta(())
    ()
    """
    s = as_value_set(s)
    if s and s[0] == 1:
        raise ValueError("cannot shift a set containing 1")
    return tuple(v - 1 for v in s)


def cdes_recursive(
    n: int,
    s: Iterable[int],
    cache: Cache | None = None,
    *,
    use_min2_shortcut: bool = True,
) -> int:
    """Count permutations of [n] with descent-value set S by the
    minimum-element recursion

        count(S) = count(S with min replaced by min-1)
                 + count(delta(S))
                 + count(delta(S) without its minimum)

    with base cases: 1 in S -> 0, empty S -> 1, singleton {m} -> 2^(m-1)-1.
    Every subproblem is independent of n (only max(S) matters), so cache
    keys are the sets themselves.  When min(S) = 2 the first two branches
    vanish and a single-step shortcut is taken; ``use_min2_shortcut=False``
    forces the general step instead, which must give the same value.

    A cache may be shared across calls and across threads: it only ever
    grows, and a key is always published with the same value.

    >>> cdes_recursive(3, {3})
    3
    >>> cdes_recursive(4, {3, 4})
    7
    >>> cdes_recursive(9, {2})
    1
    """
    if n < 1:
        raise ValueError(f"n must be positive: {n}")
    s = as_value_set(s, n=n)
    if cache is None:
        cache = {}
    return _count(s, cache, use_min2_shortcut)


def _count(s: tuple[int, ...], cache: Cache, shortcut: bool) -> int:
    if not s:
        return 1
    if s[0] == 1:
        return 0
    if len(s) == 1:
        return (1 << (s[0] - 1)) - 1
    value = cache.get(s)
    if value is not None:
        return value
    if shortcut and s[0] == 2:
        # Only the third branch survives: the 2 forces its companion 1
        # immediately to its right, and deleting the pair reduces n by one.
        value = _count(tuple(v - 1 for v in s[1:]), cache, shortcut)
    else:
        swapped = (s[0] - 1, *s[1:])
        shifted = tuple(v - 1 for v in s)
        value = (
            _count(swapped, cache, shortcut)
            + _count(shifted, cache, shortcut)
            + _count(shifted[1:], cache, shortcut)
        )
    cache[s] = value
    return value


def cdes_insertion_table(n: int) -> dict[tuple[int, ...], int]:
    """Full descent-value count table for subsets of [2, n], built bottom-up.

    Growing from m-1 to m, sets not containing m keep their count, and

        count_m(S + {m}) = (m - 1 - |S|) * count_{m-1}(S)
                           + sum over i in [2, m-1] outside S
                             of count_{m-1}(S + {i})

    since inserting m into a shorter permutation either creates exactly the
    new descent value m (m - 1 - |S| slots do) or additionally swallows one
    existing non-descent value i.

    >>> cdes_insertion_table(3)
    {(): 1, (2,): 1, (3,): 3, (2, 3): 1}
    """
    if n < 2:
        raise ValueError(f"insertion table starts at n = 2: {n}")
    table: dict[tuple[int, ...], int] = {(): 1, (2,): 1}
    for m in range(3, n + 1):
        grown = dict(table)
        for s, count in table.items():
            members = set(s)
            total = (m - 1 - len(s)) * count
            for i in range(2, m):
                if i not in members:
                    total += table[tuple(sorted((*s, i)))]
            grown[(*s, m)] = total
        table = grown
    return table
