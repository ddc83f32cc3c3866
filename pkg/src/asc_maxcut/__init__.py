"""Approximation-set-coding analysis of greedy MaxCut heuristics.

Generate noisy graph pairs, run five greedy engines step by step, count their
approximation sets exactly and estimate stepwise information and information
content.
"""
from .config import EstimatorMode, ExperimentConfig, build_config
from .counting import (count_d2_family, count_ec, count_sg_family, count_state,
                       common_supervertex_count, intersect, intersect_double_greedy,
                       intersect_ec, solution_space_size, trace_pair_counts)
from .estimator import (ExperimentResult, InfoCurve, information_content,
                        run_asc_experiment, stepwise_information)
from .graphs import (NoiseModel, NoiseModelConfig, WeightedGraph, cut_value,
                     equal_edge_fraction, flip_noise, gaussian_noise,
                     gen_bipartite_master, gen_gaussian_master, read_graph, write_graph)
from .greedy import (Algorithm, AlgorithmTrace, DoubleGreedyState, SuperVertexPartition,
                     gains, run_algorithm, run_d2greedy, run_ec, run_rdgreedy, run_sg, run_sg3)

__version__ = "0.1.0"

__all__ = [
    "Algorithm", "AlgorithmTrace", "DoubleGreedyState", "EstimatorMode", "ExperimentConfig",
    "ExperimentResult", "InfoCurve", "NoiseModel", "NoiseModelConfig", "SuperVertexPartition",
    "WeightedGraph", "build_config", "common_supervertex_count", "count_d2_family", "count_ec",
    "count_sg_family", "count_state", "cut_value", "equal_edge_fraction", "flip_noise",
    "gains", "gaussian_noise", "gen_bipartite_master", "gen_gaussian_master",
    "information_content", "intersect", "intersect_double_greedy", "intersect_ec",
    "read_graph", "run_algorithm", "run_asc_experiment", "run_d2greedy", "run_ec",
    "run_rdgreedy", "run_sg", "run_sg3", "solution_space_size", "stepwise_information",
    "trace_pair_counts", "write_graph",
]
