"""Coalition partitions of small graphs (order <= 62).

A c-partition splits the vertices into blocks where every block either
dominates the graph on its own (as a singleton) or pairs with another
block so that their union dominates while neither side does alone.
This package computes the minimum and maximum number of blocks, emits
checkable certificates, and recognizes the graph families with known
closed-form answers.
"""

from ._core import (
    MAX_ORDER,
    Graph,
    check_partition,
    cmin,
    cmin_at_least_four,
    cmin_at_least_three,
    coalition_number,
    complete_graph,
    complete_multipartite_graph,
    cycle_graph,
    cycle_value,
    domination_number,
    empty_graph,
    family_f_witness,
    family_m_derivation,
    generate_family_f,
    graph6_decode,
    graph6_encode,
    heawood_graph,
    is_coalition,
    is_dominating_set,
    is_minimal_c_partition,
    join_graphs,
    minimum_dominating_set,
    path_graph,
    petersen_graph,
    star_graph,
    star_property,
    suites,
    tree_value,
    verify,
    witness_cmin_two,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_ORDER",
    "Graph",
    "check_partition",
    "cmin",
    "cmin_at_least_four",
    "cmin_at_least_three",
    "coalition_number",
    "complete_graph",
    "complete_multipartite_graph",
    "cycle_graph",
    "cycle_value",
    "domination_number",
    "empty_graph",
    "family_f_witness",
    "family_m_derivation",
    "generate_family_f",
    "graph6_decode",
    "graph6_encode",
    "heawood_graph",
    "is_coalition",
    "is_dominating_set",
    "is_minimal_c_partition",
    "join_graphs",
    "minimum_dominating_set",
    "path_graph",
    "petersen_graph",
    "star_graph",
    "star_property",
    "suites",
    "tree_value",
    "verify",
    "witness_cmin_two",
]
