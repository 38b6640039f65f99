"""Reading-path generation over citation graphs.

Builds a weighted citation subgraph around seed papers, connects the
must-read terminals with a node-edge weighted Steiner tree, and orders the
result into a prerequisite-first reading path. Ships a benchmark harness,
an HTTP service, and a CLI.
"""

from .config import ConfigError, EngineConfig
from .corpus import (
    CitationGraph,
    CorpusError,
    LoadReport,
    PaperRecord,
    VenueTable,
    filter_by_year,
    load_corpus,
    load_papers,
    load_venues,
    neighborhood,
)
from .engine import Engine, EngineError, NoSeedsError, QueryResult
from .evalbench import (
    AblationMode,
    EvalError,
    EvalOptions,
    EvalReport,
    GroundTruth,
    SurveyEntry,
    f1_at_k,
    ground_truth,
    load_benchmark,
    pagerank_baseline,
    precision_at_k,
    recall_at_k,
    run_eval,
    survey_quality_score,
    write_report,
)
from .pathgen import PathError, orient_edges, reading_order, roots_of, top_k_list
from .scoring import (
    NodeScores,
    ScoreParams,
    ScoringError,
    build_weighted_graph,
    compute_node_scores,
    edge_cost,
    node_weight,
    normalize_pgscore,
    pagerank,
)
from .seeding import (
    HttpSeedProvider,
    OfflineSeedProvider,
    QuerySpec,
    SeedingError,
    TerminalMode,
    TerminalSelection,
    cooccurrence_counts,
    provide_seeds,
    query_string,
    reallocate_terminals,
    resolve_seeds,
)
from .steiner import (
    SteinerError,
    SteinerTree,
    WeightedGraph,
    exact_steiner_tree,
    metric_closure,
    minimum_spanning_tree,
    shortest_paths,
    steiner_tree,
)

__version__ = "0.1.0"

__all__ = [
    "AblationMode",
    "CitationGraph",
    "ConfigError",
    "CorpusError",
    "Engine",
    "EngineConfig",
    "EngineError",
    "EvalError",
    "EvalOptions",
    "EvalReport",
    "GroundTruth",
    "HttpSeedProvider",
    "LoadReport",
    "NoSeedsError",
    "NodeScores",
    "OfflineSeedProvider",
    "PaperRecord",
    "PathError",
    "QueryResult",
    "QuerySpec",
    "ScoreParams",
    "ScoringError",
    "SeedingError",
    "SteinerError",
    "SteinerTree",
    "SurveyEntry",
    "TerminalMode",
    "TerminalSelection",
    "VenueTable",
    "WeightedGraph",
    "build_weighted_graph",
    "compute_node_scores",
    "cooccurrence_counts",
    "edge_cost",
    "exact_steiner_tree",
    "f1_at_k",
    "filter_by_year",
    "ground_truth",
    "load_benchmark",
    "load_corpus",
    "load_papers",
    "load_venues",
    "metric_closure",
    "minimum_spanning_tree",
    "neighborhood",
    "node_weight",
    "normalize_pgscore",
    "orient_edges",
    "pagerank",
    "pagerank_baseline",
    "precision_at_k",
    "provide_seeds",
    "query_string",
    "reading_order",
    "reallocate_terminals",
    "recall_at_k",
    "resolve_seeds",
    "roots_of",
    "run_eval",
    "shortest_paths",
    "steiner_tree",
    "survey_quality_score",
    "top_k_list",
    "write_report",
]
