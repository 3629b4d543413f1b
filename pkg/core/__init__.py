"""
Equator Workbench - Core Module
Graphs, isometric cycles, Moore-type bounds and the equatorial structure theory,
independent of any front end
"""

__version__ = "1.0.0"
__author__ = "Equator Workbench Team"

from .graph import (
    Graph,
    GraphError,
    DistanceMatrix,
    build_graph,
    all_pairs_distances,
    girth,
    diameter_and_radius,
    disk,
    edge_disk,
    degree_profile,
    are_isomorphic,
)
from .graph_io import ParseError, read_graph, write_edge_list, write_graph6, to_graph6, from_graph6
from .isometry import IsometricCycle, EquatorResult, is_isometric_cycle, equator, isometric_cycle_through
from .bounds import moore_bound, equatorial_bound_check, c4free_bound_check, verify_k_degree
from .finite_geometry import brown_graph, pg2_incidence_graph, brown_properties
from .catalog import moore_catalog, cage_catalog
from .constructions import (
    ConstructionSpec,
    build_construction,
    splice_chain,
    c4free_chain,
    gadget11_chain,
    multiply_equatorial,
    quotient_to_moore,
)
from .structure import (
    EquatorPartition,
    induced_partition,
    verify_structure,
    partition_uniqueness,
    retraction_check,
    characterize,
    is_equatorial,
)
from .analysis import AnalysisReport, analyze_graph
from .search import SearchSpec, SearchResult, min_order_search

__all__ = [
    "Graph",
    "GraphError",
    "DistanceMatrix",
    "build_graph",
    "all_pairs_distances",
    "girth",
    "diameter_and_radius",
    "disk",
    "edge_disk",
    "degree_profile",
    "are_isomorphic",
    "ParseError",
    "read_graph",
    "write_edge_list",
    "write_graph6",
    "to_graph6",
    "from_graph6",
    "IsometricCycle",
    "EquatorResult",
    "is_isometric_cycle",
    "equator",
    "isometric_cycle_through",
    "moore_bound",
    "equatorial_bound_check",
    "c4free_bound_check",
    "verify_k_degree",
    "brown_graph",
    "pg2_incidence_graph",
    "brown_properties",
    "moore_catalog",
    "cage_catalog",
    "ConstructionSpec",
    "build_construction",
    "splice_chain",
    "c4free_chain",
    "gadget11_chain",
    "multiply_equatorial",
    "quotient_to_moore",
    "EquatorPartition",
    "induced_partition",
    "verify_structure",
    "partition_uniqueness",
    "retraction_check",
    "characterize",
    "is_equatorial",
    "AnalysisReport",
    "analyze_graph",
    "SearchSpec",
    "SearchResult",
    "min_order_search",
]
