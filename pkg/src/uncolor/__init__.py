"""Measures of edge-uncolorability for loop-free multigraphs."""

from .multigraph import (
    EnumerationBudgetError,
    GraphFormatError,
    MultiGraph,
    NotRegularError,
    VertexBudgetError,
    boundary,
    build,
    components,
    delete,
    edge_set,
    format_mg,
    is_s_graph,
    load_mg,
    max_degree,
    parse_mg,
    save_mg,
    vertex_set,
)
from .coloring import (
    ChromaticIndexResult,
    KempeWalk,
    PartialEdgeColoring,
    ResistanceResult,
    SearchBudget,
    VerifyReport,
    chromatic_index,
    coloring_certificate,
    coloring_from_certificate,
    edge_deletion_certificate,
    kempe_swap,
    kempe_walk,
    max_colorable_subgraph,
    parity_signature,
    resistance,
    try_total_coloring,
    verify,
)
from .factorization import (
    INFINITE,
    Cycle,
    OddnessResult,
    TwoFactor,
    TwoFactorization,
    canonical_coloring,
    classify_factor,
    concentrated_coloring,
    enumerate_one_factors,
    enumerate_two_factors,
    oddness,
    two_factor,
)
from .vertex_measures import (
    RatioReport,
    RebuildResult,
    ReinsertionTrace,
    RuleStep,
    VertexMeasureResult,
    r_v,
    r_v_prime,
    ratio_report,
    rebuild,
    reinsert_vertex,
    replay_trace,
    vertex_deletion_certificate,
)

__version__ = "0.1.0"
