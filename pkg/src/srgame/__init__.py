"""Strong resolving graphs, metric dimensions, and exact Maker-Breaker
resolving game solving on desk-scale graphs."""

from .graphs import (
    DisconnectedGraphError,
    DistanceMatrix,
    Graph,
    GraphFormatError,
    LimitExceededError,
    ShapeDescription,
    UNREACHABLE,
    all_pairs_distances,
    are_isomorphic,
    classify_shape,
    complement,
    connected_components,
    disjoint_union,
    format_graph,
    induced_subgraph,
    is_connected,
    parse_graph,
    parse_graph_json,
    to_dot,
)
from .resolving import (
    SrGraph,
    TwinPartition,
    boundary_vertices,
    is_maximally_distant,
    is_resolving_set,
    is_strong_resolving_set,
    lies_on_geodesic,
    metric_code,
    metric_dimension,
    min_vertex_cover,
    mmd_pairs,
    strong_metric_dimension,
    strong_resolving_graph,
    twin_free_clique_number,
    twin_partition,
)
from .games import (
    MakerBreakerSolver,
    Outcome,
    Player,
    WinSystem,
    compare_outcomes,
    is_pairing_vertex_cover,
    is_quasi_pairing_vertex_cover,
    outcome_rg_exact,
    outcome_srg_classifier,
    outcome_srg_exact,
    resolving_game_system,
    solve_mb,
    srg_cover_system,
    transversal_system,
    vertex_cover_system,
)
from .products import (
    GammaPairSet,
    ModularPreconditionError,
    adjacent_twins_modular,
    cartesian,
    corona,
    direct,
    domination_number,
    gamma_pairs,
    gp_graph,
    join,
    lexicographic,
    modular,
    modular_sr_structural,
    twin_edges,
)
from .families import (
    TreeStats,
    complete,
    complete_multipartite,
    cycle,
    edgeless,
    path,
    petersen,
    spider,
    star,
    tree_from_parents,
    tree_stats,
)
from .analyze import AnalysisReport, analyze, render_report

__version__ = "0.1.0"
