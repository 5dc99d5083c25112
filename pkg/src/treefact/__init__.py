"""treefact: exact combinatorics of labeled trees, cyclic reflection
factorizations of the affine long translation, and maximal distinguished
subwords, with three agreeing polynomial point counts.

The chain of bijections::

    labeled trees  <->  cyclic factorizations  <->  maximal subwords

together with any one of the point counts proves the tree count n^(n-2)
exactly, with no floating-point arithmetic anywhere.
"""

from .affine import (AffinePerm, DomainError, InvariantViolation, Reflection,
                     Word, compose_all, lambda_element, residue)
from .checks import CheckResult, run_suite
from .factorization import (Direction, Factorization, ReflectionPair,
                            chain_form, chain_reflections,
                            cyclically_ordered, decreases, direction,
                            increases, is_cyclic, is_minimal, is_tree_like,
                            m_sequence, neighbor_sequence,
                            neighbor_sequences, nesting_violations,
                            pair_structure, residue_chained,
                            residue_clock_test, suffix_images)
from .qcount import (BiPoly, LaurentPoly, cayley_count, cayley_limit,
                     closed_form, deodhar_point_count, haglund_bracket,
                     haglund_hilbert, haglund_sum, hilbert_specialization,
                     kostant_partitions, lambda_weight, opdam_bracket,
                     opdam_point_count, qint)
from .subwords import (Subword, classify_distinguished,
                       enumerate_distinguished, enumerate_maximal,
                       grid_cell, grid_render, in_pattern_class,
                       inversion_table, is_distinguished,
                       is_maximal_distinguished, negative_skip_cells,
                       orbit_sizes, rotate, rotation_orbit,
                       skip_pattern_permutation, skip_reflections,
                       subword_from_factorization)
from .trees import (LabeledTree, PlaneTree, RunLeafLabels, WalkSequence,
                    all_labeled_trees, all_plane_trees, clockwise_walk,
                    cyclic_embedding, export_dot, export_tikz,
                    factorization_from_tree, parse_edge_list,
                    run_leaf_labels, subword_from_tree,
                    tree_from_factorization, tree_from_subword)

__version__ = "0.1.0"

__all__ = [
    "AffinePerm", "BiPoly", "CheckResult", "Direction", "DomainError",
    "Factorization", "InvariantViolation", "LabeledTree", "LaurentPoly",
    "PlaneTree", "Reflection", "ReflectionPair", "RunLeafLabels", "Subword",
    "WalkSequence", "Word", "all_labeled_trees", "all_plane_trees",
    "cayley_count", "cayley_limit", "chain_form", "chain_reflections",
    "classify_distinguished", "clockwise_walk", "closed_form", "compose_all",
    "cyclic_embedding", "cyclically_ordered", "decreases",
    "deodhar_point_count", "direction", "enumerate_distinguished",
    "enumerate_maximal", "export_dot", "export_tikz",
    "factorization_from_tree", "grid_cell", "grid_render", "haglund_bracket",
    "haglund_hilbert", "haglund_sum", "hilbert_specialization",
    "in_pattern_class", "increases", "inversion_table", "is_cyclic",
    "is_distinguished",
    "is_maximal_distinguished", "is_minimal", "is_tree_like",
    "kostant_partitions", "lambda_element", "lambda_weight", "m_sequence",
    "negative_skip_cells", "neighbor_sequence", "neighbor_sequences",
    "nesting_violations", "opdam_bracket", "opdam_point_count",
    "orbit_sizes", "pair_structure", "parse_edge_list", "qint", "residue",
    "residue_chained", "residue_clock_test", "rotate", "rotation_orbit",
    "run_leaf_labels", "run_suite", "skip_pattern_permutation",
    "skip_reflections", "subword_from_factorization", "subword_from_tree",
    "suffix_images", "tree_from_factorization", "tree_from_subword",
]
