"""Exact enumeration of permutations by circular descent set.

The circular descent set of a permutation collects the values that sit
immediately before a smaller neighbour.  This package counts permutations
with a prescribed descent-value set through four independent routes
(brute-force scan, alternating-sum formula, minimum-element recursion,
weighted generating tree), assembles the counts into sparse generating
polynomials, and applies them to 0/1 fillings of Young diagrams and to
generalized Genocchi numbers.  All arithmetic is exact.
"""

from .formula import cdes_formula, cdes_formula_typed, gap_vector, set_type
from .genocchi import brute_genocchi_perm_count, gandhi_poly, genocchi_number
from .perms import (
    as_value_set,
    brute_cdes_count,
    brute_cdes_table,
    brute_nwexb_count,
    brute_nwexb_table,
    circular_descent_set,
    iter_value_sets,
    nwexb_set,
    reduction,
)
from .poly import Poly, descent_set_coefficient, gn, gnk, tau
from .recursion import cdes_insertion_table, cdes_recursive, delta
from .tableaux import (
    brute_count_tableaux,
    count_tableaux_formula,
    count_tableaux_type_sum,
    format_filling,
    is_valid_tableau,
    iter_shapes,
    partition_type,
    shape_to_descent_set,
)
from .tree import (
    TreeNode,
    build_tree,
    iter_leaf_paths,
    leaf_theta,
    leaf_theta_inverse,
    tree_weight_sum,
    tree_weight_traversal,
)

__version__ = "0.1.0"

__all__ = [
    "Poly",
    "TreeNode",
    "as_value_set",
    "brute_cdes_count",
    "brute_cdes_table",
    "brute_count_tableaux",
    "brute_genocchi_perm_count",
    "brute_nwexb_count",
    "brute_nwexb_table",
    "build_tree",
    "cdes_formula",
    "cdes_formula_typed",
    "cdes_insertion_table",
    "cdes_recursive",
    "circular_descent_set",
    "count_tableaux_formula",
    "count_tableaux_type_sum",
    "delta",
    "descent_set_coefficient",
    "format_filling",
    "gandhi_poly",
    "gap_vector",
    "genocchi_number",
    "gn",
    "gnk",
    "is_valid_tableau",
    "iter_leaf_paths",
    "iter_shapes",
    "iter_value_sets",
    "leaf_theta",
    "leaf_theta_inverse",
    "nwexb_set",
    "partition_type",
    "reduction",
    "set_type",
    "shape_to_descent_set",
    "tau",
    "tree_weight_sum",
    "tree_weight_traversal",
]
