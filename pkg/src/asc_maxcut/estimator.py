"""Stepwise information and information content from approximation-set sizes.

For one noisy pair the per-step term is
``log2(|C| * Delta_t / (|C_t(G')| * |C_t(G'')|))`` in bits. Two estimators of
its expectation are offered:

``meanlog``
    average of the per-pair log terms; pairs with ``Delta_t = 0`` are left out
    and counted separately (a step where every pair has ``Delta_t = 0`` is
    undefined and reported as NaN).
``logmean``
    ``log2(|C| * mean(Delta_t / (|C_t(G')| |C_t(G'')|)))`` over all pairs,
    ``-inf`` when every ``Delta_t`` is zero.
"""
from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .config import (TAG_GRAPH, TAG_MASTER, TAG_RDGREEDY, EstimatorMode,
                     ExperimentConfig, derive_seed)
from .counting import exact_log2, solution_space_size, trace_pair_counts
from .graphs import NoiseModel, equal_edge_fraction, make_instance, make_master
from .greedy import Algorithm, run_algorithm

log = logging.getLogger(__name__)


class EstimatorError(ValueError):
    pass


@dataclass(frozen=True)
class CardinalitySample:
    trial: int
    step: int
    c_prime: int
    c_double: int
    delta: int

    def __post_init__(self):
        if not 0 <= self.delta <= min(self.c_prime, self.c_double):
            raise EstimatorError(f"delta {self.delta} outside [0, min(|C'|, |C''|)]")


def sample_terms(c_prime: int, c_double: int, delta: int, n: int) -> tuple[float, float]:
    """``(log term or nan, ratio)`` for one pair at one step."""
    if delta == 0:
        return math.nan, 0.0
    logterm = exact_log2(solution_space_size(n)) + exact_log2(delta) - exact_log2(c_prime) - exact_log2(c_double)
    return logterm, delta / (c_prime * c_double)


@dataclass(frozen=True)
class StepAggregate:
    meanlog: np.ndarray
    meanlog_std: np.ndarray
    logmean: np.ndarray
    zero_delta: np.ndarray
    samples: int

    def values(self, mode: EstimatorMode) -> np.ndarray:
        return self.meanlog if EstimatorMode(mode) is EstimatorMode.MEAN_LOG else self.logmean


def aggregate_terms(logterms: np.ndarray, ratios: np.ndarray, n: int) -> StepAggregate:
    """Reduce ``(trials, steps)`` term arrays to per-step estimates.

    Rows must be in trial order; the reduction is then independent of how the
    trials were scheduled.
    """
    logterms = np.atleast_2d(logterms)
    ratios = np.atleast_2d(ratios)
    if logterms.shape[0] == 0:
        raise EstimatorError("no samples")
    ok = ~np.isnan(logterms)
    included = ok.sum(axis=0)
    total = np.where(ok, logterms, 0.0).sum(axis=0)
    with np.errstate(invalid="ignore", divide="ignore"):
        meanlog = np.where(included > 0, total / np.maximum(included, 1), np.nan)
        dev = np.where(ok, logterms - meanlog, 0.0)
        std = np.where(included > 1, np.sqrt((dev**2).sum(axis=0) / np.maximum(included - 1, 1)), np.nan)
        mean_ratio = ratios.mean(axis=0)
        logmean = exact_log2(solution_space_size(n)) + np.log2(mean_ratio)
    return StepAggregate(meanlog, std, logmean, logterms.shape[0] - included, logterms.shape[0])


def stepwise_information(samples, n: int, mode=EstimatorMode.MEAN_LOG) -> tuple[float, int]:
    """Estimate ``I_t`` for one step; returns ``(bits, zero-delta count)``."""
    samples = list(samples)
    if not samples:
        raise EstimatorError("no samples")
    if len({s.step for s in samples}) != 1:
        raise EstimatorError("samples mix several steps")
    samples.sort(key=lambda s: s.trial)
    terms = np.array([sample_terms(s.c_prime, s.c_double, s.delta, n) for s in samples])
    agg = aggregate_terms(terms[:, :1], terms[:, 1:], n)
    return float(agg.values(mode)[0]), int(agg.zero_delta[0])


def information_content(values) -> tuple[float, int]:
    """``(max_t I_t, earliest t attaining it)``; steps are numbered from 1 and
    NaN entries (undefined steps) are skipped."""
    values = np.asarray(values, dtype=np.float64)
    defined = ~np.isnan(values)
    if not defined.any():
        raise EstimatorError("no defined step")
    best = values[defined].max()
    return float(best), int(np.flatnonzero(defined & (values == best))[0]) + 1


@dataclass(frozen=True)
class InfoCurve:
    algorithm: Algorithm
    noise: float
    n: int
    mode: EstimatorMode
    info: np.ndarray
    zero_delta: np.ndarray
    samples: int
    info_content: float
    t_star: int

    @property
    def per_node(self) -> np.ndarray:
        return self.info / self.n

    @property
    def steps(self) -> np.ndarray:
        return np.arange(1, self.info.size + 1)


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    aggregates: dict          # (algorithm, noise index) -> StepAggregate
    equal_fraction: dict      # noise index -> mean equal-edge fraction (edge reversal only)

    def curve(self, algorithm, noise_index: int, mode=None) -> InfoCurve:
        algorithm = Algorithm(algorithm)
        mode = EstimatorMode(mode or self.config.estimator)
        agg = self.aggregates[algorithm, noise_index]
        values = agg.values(mode)
        best, t_star = information_content(values)
        return InfoCurve(algorithm, self.config.noise_grid[noise_index], self.config.n, mode,
                         values, agg.zero_delta, agg.samples, best, t_star)

    def content_table(self, mode=None) -> dict:
        """``{algorithm: [I at each noise level]}``."""
        return {a: [self.curve(a, i, mode).info_content for i in range(len(self.config.noise_grid))]
                for a in self.config.algorithms}


_CTX = {}


def _init_worker(cfg: ExperimentConfig, master):
    _CTX["cfg"] = cfg
    _CTX["master"] = master


def _master_for(cfg: ExperimentConfig, trial: int):
    if cfg.resample_master:
        return make_master(cfg.model, cfg.n, derive_seed(cfg.master_seed, 0, trial, 0, TAG_MASTER))
    return make_master(cfg.model, cfg.n, derive_seed(cfg.master_seed, 0, 0, 0, TAG_MASTER))


def run_trial(cfg: ExperimentConfig, master, noise_index: int, trial: int):
    """Draw one noisy pair, run every selected algorithm on both instances and
    return ``(equal-edge fraction, {algorithm: (log terms, ratios)})``."""
    if master is None:
        master = _master_for(cfg, trial)
    noise = cfg.model.with_noise(cfg.noise_grid[noise_index])
    g1 = make_instance(master, noise, derive_seed(cfg.master_seed, noise_index, trial, 0, TAG_GRAPH))
    g2 = make_instance(master, noise, derive_seed(cfg.master_seed, noise_index, trial, 1, TAG_GRAPH))
    fraction = equal_edge_fraction(g1, g2).fraction if cfg.model.model is NoiseModel.EDGE_REVERSAL else math.nan
    out = {}
    for alg in cfg.algorithms:
        seeds = [None, None]
        if alg.randomized:
            second = 0 if cfg.share_rd_seed else 1
            seeds = [derive_seed(cfg.master_seed, noise_index, trial, inst, TAG_RDGREEDY) for inst in (0, second)]
        tr1 = run_algorithm(alg, g1, seeds[0])
        tr2 = run_algorithm(alg, g2, seeds[1])
        terms = np.array([sample_terms(c1, c2, d, cfg.n) for c1, c2, d in trace_pair_counts(tr1, tr2)])
        out[alg] = (terms[:, 0], terms[:, 1])
    return fraction, out


def _worker(item):
    noise_index, trial = item
    master = None if _CTX["cfg"].resample_master else _CTX["master"]
    return item, run_trial(_CTX["cfg"], master, noise_index, trial)


def run_asc_experiment(cfg: ExperimentConfig, progress=None) -> ExperimentResult:
    """Run every (noise level, trial) pair and reduce to per-step estimates.

    Work items may finish in any order; they are sorted by (noise index,
    trial) before reduction so the result does not depend on ``workers``.
    """
    master = None if cfg.resample_master else _master_for(cfg, 0)
    items = [(i, r) for i in range(len(cfg.noise_grid)) for r in range(cfg.trials)]
    results = {}
    if cfg.workers == 1:
        _init_worker(cfg, master)
        for item in items:
            key, value = _worker(item)
            results[key] = value
            if progress:
                progress(len(results), len(items))
    else:
        chunk = max(1, len(items) // (cfg.workers * 8))
        with ProcessPoolExecutor(cfg.workers, initializer=_init_worker, initargs=(cfg, master)) as pool:
            for key, value in pool.map(_worker, items, chunksize=chunk):
                results[key] = value
                if progress:
                    progress(len(results), len(items))
    aggregates = {}
    fractions = {}
    for i in range(len(cfg.noise_grid)):
        rows = [results[i, r] for r in range(cfg.trials)]
        if cfg.model.model is NoiseModel.EDGE_REVERSAL:
            fractions[i] = float(np.mean([row[0] for row in rows]))
        for alg in cfg.algorithms:
            logterms = np.stack([row[1][alg][0] for row in rows])
            ratios = np.stack([row[1][alg][1] for row in rows])
            aggregates[alg, i] = aggregate_terms(logterms, ratios, cfg.n)
    log.info("finished %d work items", len(items))
    return ExperimentResult(cfg, aggregates, fractions)
