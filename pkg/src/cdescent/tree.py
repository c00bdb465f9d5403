"""Weighted binary generating tree.

The tree grows from a root labelled 1 by the rule that a node labelled k
has two children, labelled k and k + 1.  Truncated at height k it has 2^k
leaves, and reading off the label increments along a root-to-leaf path is
a bijection onto {0,1}^k (``leaf_theta``).

Given a weight sequence d, a non-root vertex at height j with label l
weighs l**d[j-1]; an edge weighs +1 when the child label increments and
-1 when it repeats.  The sum of signed path weights over all leaves can
be computed two ways: by walking the materialized tree, or as a closed
alternating sum over {0,1}^k with no tree at all.  When d is the gap
vector of a descent-value set S, both equal the number of permutations
with descent-value set S.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

BUILD_CAP = 20
SUM_CAP = 30


@dataclass(frozen=True, slots=True)
class TreeNode:
    label: int
    height: int
    children: tuple["TreeNode", ...] = field(default=())

    @property
    def is_leaf(self) -> bool:
        return not self.children


def build_tree(k: int, *, cap: int = BUILD_CAP) -> TreeNode:
    """Materialize the full tree of height k (2^(k+1) - 1 nodes).

    Children are ordered repeating label first, then incremented label.

    >>> root = build_tree(1)
    >>> [(c.height, c.label) for c in root.children]
    [(1, 1), (1, 2)]
    """
    if k < 0:
        raise ValueError(f"height must be nonnegative: {k}")
    if k > cap:
        raise ValueError(f"height {k} exceeds the materialization cap {cap}")

    def grow(label: int, height: int) -> TreeNode:
        if height == k:
            return TreeNode(label, height)
        return TreeNode(
            label, height, (grow(label, height + 1), grow(label + 1, height + 1))
        )

    return grow(1, 0)


def iter_leaf_paths(root: TreeNode) -> Iterator[tuple[int, ...]]:
    """Root-to-leaf label sequences, repeating-label branch first."""
    stack: list[tuple[TreeNode, tuple[int, ...]]] = [(root, (root.label,))]
    while stack:
        node, path = stack.pop()
        if node.is_leaf:
            yield path
        else:
            for child in reversed(node.children):
                stack.append((child, (*path, child.label)))


def _check_weights(d: Iterable[int]) -> tuple[int, ...]:
    w = tuple(d)
    if any(not isinstance(v, int) or v < 0 for v in w):
        raise ValueError(f"weight exponents must be nonnegative integers: {w!r}")
    return w


def tree_weight_traversal(d: Sequence[int], *, cap: int = BUILD_CAP) -> int:
    """Total signed path weight of the height-len(d) tree, by walking every
    root-to-leaf path of the materialized tree.

    >>> tree_weight_traversal((2, 1))
    3
    >>> tree_weight_traversal((0,))
    0
    """
    weights = _check_weights(d)
    root = build_tree(len(weights), cap=cap)
    total = 0
    for path in iter_leaf_paths(root):
        w = 1
        for parent, child, exponent in zip(path, path[1:], weights):
            w *= child**exponent
            if child == parent:
                w = -w
        total += w
    return total


def tree_weight_sum(d: Sequence[int], *, cap: int = SUM_CAP) -> int:
    """Closed form of :func:`tree_weight_traversal`: the alternating sum
    over {0,1}^k of the prefix-sum powers, with no tree materialized.

    >>> tree_weight_sum((4,))
    15
    >>> tree_weight_sum((1, 1, 2))
    15
    """
    weights = _check_weights(d)
    k = len(weights)
    if k > cap:
        raise ValueError(f"length {k} exceeds the summation cap {cap}")
    total = 0
    for bits in itertools.product((0, 1), repeat=k):
        prefix = 0
        term = 1
        for x, exponent in zip(bits, weights):
            prefix += x
            term *= (1 + prefix) ** exponent
        if (k - sum(bits)) % 2:
            term = -term
        total += term
    return total


def leaf_theta(path: Sequence[int]) -> tuple[int, ...]:
    """Binary increment pattern of a root-to-leaf label path.

    >>> leaf_theta((1, 2, 3))
    (1, 1)
    >>> leaf_theta((1, 2, 2))
    (1, 0)
    """
    p = tuple(path)
    if not p or p[0] != 1:
        raise ValueError("paths start at the root label 1")
    steps = tuple(b - a for a, b in itertools.pairwise(p))
    if any(x not in (0, 1) for x in steps):
        raise ValueError(f"labels must repeat or increment along a path: {p!r}")
    return steps


def leaf_theta_inverse(bits: Sequence[int]) -> tuple[int, ...]:
    """Rebuild the label path from its increment pattern.

    >>> leaf_theta_inverse((1, 0))
    (1, 2, 2)
    """
    if any(x not in (0, 1) for x in bits):
        raise ValueError(f"increments are 0 or 1: {tuple(bits)!r}")
    return tuple(itertools.accumulate(bits, initial=1))
