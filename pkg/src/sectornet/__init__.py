"""Sector antenna networks: orientation, replacement, and power assignment.

The package models directional antennas as quarter wedges and provides

* symmetric connectivity graphs over wedge configurations,
* plane-coverage and connectivity verification,
* orientation schemes for quadruplets, clusters, and grid-partitioned
  unit-disk instances,
* power assignment along an approximate traveling-salesman tour, and
* deterministic instance generators plus JSON/SVG I/O.
"""

from .geometry import (
    ANGLE_TOL,
    DIST_SQ_TOL,
    QUARTER_TURN,
    TAU,
    CoverageReport,
    HalfPlane,
    Point,
    Wedge,
    containment_matrix,
    convex_hull,
    coverage_sample_check,
    distance,
    halfplane_covered,
    plane_coverage_verify,
    squared_distance,
    weakly_separable,
    wedge_contains,
)
from .orientation import (
    CouplePair,
    OrientationAssignment,
    couple_halfplane,
    couples,
    orient_cluster,
    orient_quadruplet,
    orient_toward,
)
from .power import (
    CostChainReport,
    PowerAssignment,
    Tour,
    beta_edge_weight,
    cost_chain_check,
    mst_cost,
    mst_edges,
    orient_and_assign,
    tour_power_cost,
    tsp_tour_approx,
)
from .replacement import (
    CELL_SIDE,
    FULL_CELL_MIN,
    REPLACEMENT_RANGE,
    GridPartition,
    ReplacementResult,
    SpannerReport,
    build_udg,
    closest_full_cell,
    full_cell_labels,
    grid_partition,
    orient_small_instance,
    path_hits_full_cell,
    replace,
    select_hubs_basic,
    select_hubs_refined,
    verify_hop_spanner,
)
from .rng import SplitMix64
from .scg import (
    AntennaConfig,
    CommGraph,
    build_scg,
    classify_separated_pair,
    configs_from_assignment,
    find_mutual_cover_pair,
    halfplane_cover_number,
    hop_distance,
    is_connected,
    search_nonseparated_counterexample,
)

__version__ = "0.1.0"

__all__ = [
    "ANGLE_TOL",
    "CELL_SIDE",
    "DIST_SQ_TOL",
    "FULL_CELL_MIN",
    "QUARTER_TURN",
    "REPLACEMENT_RANGE",
    "TAU",
    "AntennaConfig",
    "CommGraph",
    "CostChainReport",
    "CouplePair",
    "CoverageReport",
    "GridPartition",
    "HalfPlane",
    "OrientationAssignment",
    "Point",
    "PowerAssignment",
    "ReplacementResult",
    "SpannerReport",
    "SplitMix64",
    "Tour",
    "Wedge",
    "beta_edge_weight",
    "build_scg",
    "build_udg",
    "classify_separated_pair",
    "closest_full_cell",
    "configs_from_assignment",
    "containment_matrix",
    "convex_hull",
    "cost_chain_check",
    "couple_halfplane",
    "couples",
    "coverage_sample_check",
    "distance",
    "find_mutual_cover_pair",
    "full_cell_labels",
    "grid_partition",
    "halfplane_cover_number",
    "halfplane_covered",
    "hop_distance",
    "is_connected",
    "mst_cost",
    "mst_edges",
    "orient_and_assign",
    "orient_cluster",
    "orient_quadruplet",
    "orient_small_instance",
    "orient_toward",
    "path_hits_full_cell",
    "plane_coverage_verify",
    "replace",
    "search_nonseparated_counterexample",
    "select_hubs_basic",
    "select_hubs_refined",
    "squared_distance",
    "tour_power_cost",
    "tsp_tour_approx",
    "verify_hop_spanner",
    "wedge_contains",
    "weakly_separable",
]
