"""Exact graphlet counting on five nodes.

Closed-form non-induced and induced counts for every connected graphlet on
three, four and five nodes, a brute-force oracle to verify them against,
generators and analytic counts for special graph families, and a small CLI.
"""

from . import families
from .fivecounts import (
    FIVE_IDS,
    count_chevron_neighborhood,
    count_five,
    count_m1182_six,
    count_m7919_six,
    five_path_formulation1,
    five_path_formulation2,
    five_path_formulation3,
)
from .graph import (
    Graph,
    GraphletId,
    NeighborhoodView,
    WalkTable,
    canonical_id,
    common_neighborhood,
    delete_node,
    edges_from_code,
    format_edge_list,
    from_edge_list,
    neighborhood_subgraph,
    parse_edge_list,
    read_edge_list,
    walk_table,
)
from .induced import (
    inclusion_matrix,
    induced_explicit,
    induced_from_noninduced,
    noninduced_from_induced,
)
from .oracle import (
    CATALOG_IDS,
    GRAPHLET_NAMES,
    automorphism_count,
    oracle_induced,
    oracle_noninduced,
    oracle_noninduced_many,
    reference_graph,
)
from .smallcounts import SMALL_IDS, count_small, count_small_in

__version__ = "0.1.0"

__all__ = [
    "CATALOG_IDS",
    "FIVE_IDS",
    "GRAPHLET_NAMES",
    "Graph",
    "GraphletId",
    "NeighborhoodView",
    "SMALL_IDS",
    "WalkTable",
    "automorphism_count",
    "canonical_id",
    "common_neighborhood",
    "count_chevron_neighborhood",
    "count_five",
    "count_m1182_six",
    "count_m7919_six",
    "count_small",
    "count_small_in",
    "delete_node",
    "edges_from_code",
    "families",
    "five_path_formulation1",
    "five_path_formulation2",
    "five_path_formulation3",
    "format_edge_list",
    "from_edge_list",
    "inclusion_matrix",
    "induced_explicit",
    "induced_from_noninduced",
    "neighborhood_subgraph",
    "noninduced_from_induced",
    "oracle_induced",
    "oracle_noninduced",
    "oracle_noninduced_many",
    "parse_edge_list",
    "read_edge_list",
    "reference_graph",
    "walk_table",
]
