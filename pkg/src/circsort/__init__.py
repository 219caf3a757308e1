"""Sorting permutations with cyclically adjacent transpositions."""

from .displacement import (
    DisplacementVector,
    InfeasibleDisplacementError,
    initial_displacement,
    is_feasible,
    lower_bound,
    net_swap_count,
    net_swap_matrix,
    normalize,
    satisfies_opt,
)
from .oracle import bfs_distance, diameter, distance_histogram, feng_worst_case
from .perm_core import (
    InvalidSwapError,
    Permutation,
    PermutationError,
    Swap,
    apply_swap,
    apply_transposition,
    directly_before,
    inversions,
    is_restriction,
    make_permutation,
    parse_permutation,
    restrict,
    transposition_to_swap,
)
from .reduction import (
    VerificationReport,
    delete_element_swaps,
    verify_appendix,
    verify_induction_step,
    verify_lemma_prop,
)
from .sorter import (
    NetCountMatrix,
    SwapSequence,
    bubble_sort,
    optimal_sort,
    sequence_net_counts,
    sort_by_displacement,
    validate_sequence,
)

__version__ = "0.1.0"
