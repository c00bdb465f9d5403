import itertools
import random

import pytest

from cdescent import (
    build_tree,
    cdes_formula,
    gap_vector,
    iter_leaf_paths,
    iter_value_sets,
    leaf_theta,
    leaf_theta_inverse,
    tree_weight_sum,
    tree_weight_traversal,
)


def test_build_tree_small():
    root = build_tree(0)
    assert (root.label, root.height, root.children) == (1, 0, ())
    root = build_tree(1)
    assert [(c.label, c.height) for c in root.children] == [(1, 1), (2, 1)]
    leaves = [p[-1] for p in iter_leaf_paths(build_tree(2))]
    assert sorted(leaves) == [1, 2, 2, 3]


def test_build_tree_rejects():
    with pytest.raises(ValueError):
        build_tree(-1)
    with pytest.raises(ValueError):
        build_tree(3, cap=2)


def test_leaf_count_and_labels():
    for k in range(9):
        paths = list(iter_leaf_paths(build_tree(k)))
        assert len(paths) == 2**k
        for path in paths:
            # A label equals 1 plus the incrementing steps taken so far.
            for at, label in enumerate(path):
                assert label == 1 + sum(
                    1 for a, b in itertools.pairwise(path[: at + 1]) if b > a
                )


@pytest.mark.parametrize(
    "path, expected",
    [
        ((1, 2, 3), (1, 1)),
        ((1, 1, 1), (0, 0)),
        ((1, 2, 2), (1, 0)),
        ((1,), ()),
    ],
)
def test_leaf_theta(path, expected):
    assert leaf_theta(path) == expected
    assert leaf_theta_inverse(expected) == path


@pytest.mark.parametrize("bad", [(2, 3), (1, 3), (1, 0), ()])
def test_leaf_theta_rejects(bad):
    with pytest.raises(ValueError):
        leaf_theta(bad)


def test_theta_is_a_bijection():
    for k in range(9):
        images = {leaf_theta(p) for p in iter_leaf_paths(build_tree(k))}
        assert images == set(itertools.product((0, 1), repeat=k))


@pytest.mark.parametrize(
    "d, expected",
    [
        ((2, 1), 3),
        ((1, 2), 7),
        ((0,), 0),
    ],
)
def test_tree_weight_traversal(d, expected):
    assert tree_weight_traversal(d) == expected


@pytest.mark.parametrize(
    "d, expected",
    [
        ((4,), 15),
        ((1, 1, 2), 15),
        ((1, 1), 1),
        ((), 1),
    ],
)
def test_tree_weight_sum(d, expected):
    assert tree_weight_sum(d) == expected


def test_weight_caps_and_validation():
    with pytest.raises(ValueError):
        tree_weight_sum((1,) * 31)
    with pytest.raises(ValueError):
        tree_weight_traversal((1,) * 21)
    with pytest.raises(ValueError):
        tree_weight_sum((-1,))


def test_traversal_matches_sum_exhaustively():
    for k in range(0, 6):
        for d in itertools.product((0, 1, 2), repeat=k):
            assert tree_weight_traversal(d) == tree_weight_sum(d), d


def test_traversal_matches_sum_sampled():
    rng = random.Random(424211)
    for _ in range(40):
        d = tuple(rng.randint(0, 4) for _ in range(rng.randint(1, 12)))
        assert tree_weight_traversal(d) == tree_weight_sum(d), d


def test_gap_vector_weight_counts_permutations():
    for n in range(2, 11):
        for s in iter_value_sets(n):
            if not s:
                continue
            weight = tree_weight_sum(gap_vector(s))
            assert weight == cdes_formula(n, s), (n, s)
            assert weight >= 0
