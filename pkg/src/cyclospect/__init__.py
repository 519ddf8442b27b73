"""Spectral complexity and almost-cyclic decomposition of directed graphs.

The pipeline: strip transient sources, row-normalize the surviving adjacency
into a recurrence matrix, read complexity off its eigenvalue spectrum, and
cut the graph into phase sectors around the generating eigenvalue.
"""

from .analysis import (
    SCOPE_FULL,
    SCOPE_LARGEST_SCC,
    AnalysisConfig,
    run_baseline_sweep,
    run_cluster,
    run_complexity,
    run_energy,
    run_fiedler,
)
from .clustering import (
    RATIO_EDGES_PER_INTERNAL_EDGE,
    RATIO_EDGES_PER_NODE,
    SORT_MAGNITUDE_DESC,
    SORT_REAL_ASC,
    Clustering,
    GeneratingSet,
    KminSearchResult,
    RatioTable,
    TrimResult,
    assign_clusters,
    cyclic_pairs,
    find_kmin,
    ratio_table,
    select_generators,
    trim_clusters,
)
from .complexity import (
    EXCLUDE_ZEROS,
    INCLUDE_ZEROS,
    BaselineResult,
    ComplexityReport,
    EnergyReport,
    TotalComplexityReport,
    baseline_sweep,
    estimate_gamma,
    gamma_from_samples,
    graph_energy,
    random_baseline,
    random_digraph,
    spectral_complexity,
    total_complexity,
)
from .errors import (
    AnalysisError,
    CyclospectError,
    DegenerateEigenvectorError,
    DegenerateSpectrumError,
    DisconnectedGraphError,
    EigensolverError,
    EmptyGraphError,
    EmptySpectrumError,
    GraphParseError,
    NoCutFoundError,
    NoCycleError,
    ValidationError,
)
from .fiedler import FiedlerResult, fiedler_partition
from .graphs import (
    DirectedGraph,
    GraphStats,
    graph_stats,
    induced_subgraph,
    parse_node_weights,
    parse_snap_edge_list,
    parse_weighted_csv,
    write_snap_edge_list,
    write_weighted_csv,
)
from .reduction import (
    RecurrenceMatrix,
    ReducedGraph,
    SccDecomposition,
    build_recurrence_matrix,
    scc,
    strip_sources,
)
from .spectra import (
    DEFAULT_TOL,
    PolarClassification,
    PolarEigen,
    Spectrum,
    ToleranceConfig,
    eig,
    polar_classify,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisConfig",
    "AnalysisError",
    "BaselineResult",
    "Clustering",
    "ComplexityReport",
    "CyclospectError",
    "DEFAULT_TOL",
    "DegenerateEigenvectorError",
    "DegenerateSpectrumError",
    "DirectedGraph",
    "DisconnectedGraphError",
    "EXCLUDE_ZEROS",
    "EigensolverError",
    "EmptyGraphError",
    "EmptySpectrumError",
    "EnergyReport",
    "FiedlerResult",
    "GeneratingSet",
    "GraphParseError",
    "GraphStats",
    "INCLUDE_ZEROS",
    "KminSearchResult",
    "NoCutFoundError",
    "NoCycleError",
    "PolarClassification",
    "PolarEigen",
    "RatioTable",
    "RecurrenceMatrix",
    "ReducedGraph",
    "SCOPE_FULL",
    "SCOPE_LARGEST_SCC",
    "SccDecomposition",
    "Spectrum",
    "ToleranceConfig",
    "TotalComplexityReport",
    "TrimResult",
    "ValidationError",
    "assign_clusters",
    "baseline_sweep",
    "build_recurrence_matrix",
    "cyclic_pairs",
    "eig",
    "estimate_gamma",
    "fiedler_partition",
    "find_kmin",
    "gamma_from_samples",
    "graph_energy",
    "graph_stats",
    "induced_subgraph",
    "parse_node_weights",
    "parse_snap_edge_list",
    "parse_weighted_csv",
    "polar_classify",
    "random_baseline",
    "random_digraph",
    "RATIO_EDGES_PER_INTERNAL_EDGE",
    "RATIO_EDGES_PER_NODE",
    "SORT_MAGNITUDE_DESC",
    "SORT_REAL_ASC",
    "ratio_table",
    "run_baseline_sweep",
    "run_cluster",
    "run_complexity",
    "run_energy",
    "run_fiedler",
    "scc",
    "select_generators",
    "spectral_complexity",
    "strip_sources",
    "total_complexity",
    "trim_clusters",
    "write_snap_edge_list",
    "write_weighted_csv",
]
