"""Combinatorics of edge-ideal powers: weighted matchings, t-saturating
graphs, saturation membership, classification tables and associated
primes, with brute-force oracles and exhaustive verification sweeps."""

from .associated_primes import (
    AssReport,
    ass_primes_4,
    ass_primes_oracle,
    closed_neighborhood,
    core,
    depth4_positive,
    derived_table4_patterns,
    is_associated_prime,
    minimal_covers,
)
from .canonical import are_isomorphic, canonical_key
from .classification import (
    classify3,
    classify4,
    derived_table3,
    sample_classification,
    verify_classification,
)
from .edge_ideal import (
    in_power,
    in_saturation,
    in_saturation_oracle,
    is_sat4_member,
    restriction,
    saturation_gap_witnesses,
)
from .weighted_graph import (
    Matching,
    WeightedGraph,
    collapse,
    find_augmenting_cycle,
    is_t_saturating,
    matching_number,
    maximum_matching,
    polarize,
    simple_graph,
)

__all__ = [
    "AssReport",
    "Matching",
    "WeightedGraph",
    "are_isomorphic",
    "ass_primes_4",
    "ass_primes_oracle",
    "canonical_key",
    "classify3",
    "classify4",
    "closed_neighborhood",
    "collapse",
    "core",
    "depth4_positive",
    "derived_table3",
    "derived_table4_patterns",
    "find_augmenting_cycle",
    "in_power",
    "in_saturation",
    "in_saturation_oracle",
    "is_associated_prime",
    "is_sat4_member",
    "is_t_saturating",
    "matching_number",
    "maximum_matching",
    "minimal_covers",
    "polarize",
    "restriction",
    "sample_classification",
    "saturation_gap_witnesses",
    "simple_graph",
    "verify_classification",
]
