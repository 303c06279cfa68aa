"""Exact k-profiles of trees: induced subtree counts by isomorphism type."""

from .bounds import (
    BoundReport,
    DiamConstants,
    check_balanced_bound,
    check_diam_claim,
    check_holder,
    check_many_paths,
    check_mix_lower_bound,
    check_simple_bound,
    check_star_moment_bound,
    check_unbalanced_bound,
    diam_constants,
)
from .canonical import free_code, is_isomorphic, rooted_code
from .catalog import TreeCatalog, build_catalog, classify
from .counting import count_all_subtrees, count_paths, count_stars, simple_upper_bound
from .enumeration import (
    BalancePartition,
    ProfileResult,
    balance_partition,
    brute_force_profile,
    edge_weight,
    enumerate_subtrees,
    profile,
)
from .experiments import ExperimentRow, cross_size_report, run_sequence
from .families import (
    FamilySpec,
    caterpillar,
    complete_dary,
    extended_star,
    random_prufer,
)
from .tree import (
    Tree,
    degree_moment,
    diameter,
    from_edge_list,
    prufer_decode,
    prufer_encode,
    read_edge_list,
    write_edge_list,
)

__version__ = "0.1.0"
