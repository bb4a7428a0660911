"""Structured preference domains: recognition, explanation, partitioning.

The package recognizes seven domains of strict preference profiles purely
through forbidden minors, explains members of the group-separable family by
trees and caterpillar orders, splits profiles into two structured groups in
polynomial time, and carries the clique-cover reduction plus brute-force
oracles used to validate all of it.
"""

from ._scan import IMPLEMENTATION as KERNEL_IMPLEMENTATION
from .domains import (
    DomainId,
    all_domains,
    coerce_domain,
    domain_spec,
    is_member,
    is_member_subset,
)
from .errors import PrefError
from .gstree import (
    CaterpillarOrder,
    OrderedBinaryTree,
    TreeLeaf,
    TreeNode,
    build_gs_tree,
    check_t_consistent,
    format_tree,
    recognize_caterpillar,
    tree_leaves,
    verify_caterpillar,
)
from .hardness import (
    CliquePartition,
    Graph,
    ReductionOutput,
    augment_graph,
    clique_kpartition,
    emit_graph,
    map_clique_partition_to_votes,
    parse_graph,
    reduce_to_profile,
)
from .minors import (
    DomainSpec,
    MinorPattern,
    MinorWitness,
    TripleSplit,
    conflict_pairs,
    find_explicit_minor,
    find_j_minor,
    triple_split,
    witness_matches,
)
from .oracle import (
    BUDGET_EXCEEDED,
    DEFAULT_BUDGET,
    BudgetExceeded,
    GenParams,
    KPartition,
    SplitMix64,
    bruteforce_contains_minor,
    bruteforce_kpartition,
    generate,
)
from .partition2 import (
    Bipartition,
    DangerousTriple,
    build_case2_instance,
    dangerous_triples,
    partition2,
    verify_bipartition,
)
from .profiles import (
    DedupMap,
    Profile,
    dedupe,
    emit_profile,
    parse_profile,
    restrict,
    subprofile,
)
from .satgraph import (
    Assignment,
    TwoSatInstance,
    VoteGraph,
    satisfies,
    solve_2sat,
    two_color,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_IMPLEMENTATION",
    "DomainId",
    "all_domains",
    "coerce_domain",
    "domain_spec",
    "is_member",
    "is_member_subset",
    "PrefError",
    "CaterpillarOrder",
    "OrderedBinaryTree",
    "TreeLeaf",
    "TreeNode",
    "tree_leaves",
    "build_gs_tree",
    "check_t_consistent",
    "format_tree",
    "recognize_caterpillar",
    "verify_caterpillar",
    "CliquePartition",
    "Graph",
    "ReductionOutput",
    "augment_graph",
    "clique_kpartition",
    "emit_graph",
    "map_clique_partition_to_votes",
    "parse_graph",
    "reduce_to_profile",
    "DomainSpec",
    "MinorPattern",
    "MinorWitness",
    "TripleSplit",
    "conflict_pairs",
    "find_explicit_minor",
    "find_j_minor",
    "triple_split",
    "witness_matches",
    "BUDGET_EXCEEDED",
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "GenParams",
    "KPartition",
    "SplitMix64",
    "bruteforce_contains_minor",
    "bruteforce_kpartition",
    "generate",
    "Bipartition",
    "DangerousTriple",
    "build_case2_instance",
    "dangerous_triples",
    "partition2",
    "verify_bipartition",
    "DedupMap",
    "Profile",
    "dedupe",
    "emit_profile",
    "parse_profile",
    "restrict",
    "subprofile",
    "Assignment",
    "TwoSatInstance",
    "VoteGraph",
    "satisfies",
    "solve_2sat",
    "two_color",
]
