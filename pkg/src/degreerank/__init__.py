"""Degree-centrality rank prediction for scale-free networks.

Predicts where a node ranks by degree using only the node's degree and four
network parameters (size, min/max/average degree) estimated from a random
walk, and validates the prediction against exact ranks on generated
preferential-attachment networks.
"""

from degreerank._kernels import BACKEND
from degreerank.generator import BaConfig, generate_ba
from degreerank.graph_core import (
    DegreeHistogram,
    Graph,
    build_graph,
    degree_histogram,
    load_edge_list,
    save_edge_list,
)
from degreerank.ranking import (
    DegreeRankTable,
    ErrorReport,
    evaluate,
    exact_rank,
    exact_rank_table,
    predict_rank,
)
from degreerank.sampler import (
    NetworkParams,
    WalkConfig,
    WalkSample,
    estimate_all,
    estimate_avg_degree,
    estimate_degree_bounds,
    estimate_size,
    fit_params,
    random_walk,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BaConfig",
    "DegreeHistogram",
    "DegreeRankTable",
    "ErrorReport",
    "Graph",
    "NetworkParams",
    "WalkConfig",
    "WalkSample",
    "build_graph",
    "degree_histogram",
    "estimate_all",
    "estimate_avg_degree",
    "estimate_degree_bounds",
    "estimate_size",
    "evaluate",
    "exact_rank",
    "exact_rank_table",
    "fit_params",
    "generate_ba",
    "load_edge_list",
    "predict_rank",
    "random_walk",
    "save_edge_list",
    "__version__",
]
