import math

import numpy as np
import pytest

from asc_maxcut import oracle
from asc_maxcut.config import EstimatorMode, ExperimentConfig, derive_seed, TAG_GRAPH, TAG_RDGREEDY
from asc_maxcut.counting import trace_pair_counts
from asc_maxcut.estimator import (CardinalitySample, EstimatorError, aggregate_terms,
                                  information_content, run_asc_experiment, run_trial,
                                  sample_terms, stepwise_information)
from asc_maxcut.graphs import NoiseModel, NoiseModelConfig, make_instance, make_master
from asc_maxcut.greedy import Algorithm, run_algorithm

DETERMINISTIC = (Algorithm.D2GREEDY, Algorithm.SG, Algorithm.SG3, Algorithm.EC)


def sg3_closed_form(n):
    return np.array([t + math.log2(2 ** (n - 1) - 1) - (n - 1) for t in range(1, n)])


def test_sample_terms_noise_free_sg3():
    logterm, ratio = sample_terms(4, 4, 4, 4)
    assert logterm == pytest.approx(math.log2(7) - 2, abs=1e-15)
    assert logterm == pytest.approx(1 + math.log2(7) - 3, abs=1e-15)
    assert ratio == 0.25


def test_sample_terms_zero_delta():
    logterm, ratio = sample_terms(8, 8, 0, 5)
    assert math.isnan(logterm) and ratio == 0.0


def test_cardinality_sample_validation():
    with pytest.raises(EstimatorError):
        CardinalitySample(0, 1, 4, 2, 3)


def test_stepwise_information_modes():
    samples = [CardinalitySample(r, 3, 4, 4, d) for r, d in enumerate([4, 2, 0])]
    ml, zeros = stepwise_information(samples, 4, EstimatorMode.MEAN_LOG)
    assert zeros == 1
    assert ml == pytest.approx(np.mean([math.log2(7 * 4 / 16), math.log2(7 * 2 / 16)]))
    lm, _ = stepwise_information(samples, 4, EstimatorMode.LOG_MEAN)
    assert lm == pytest.approx(math.log2(7 * np.mean([4 / 16, 2 / 16, 0.0])))


def test_stepwise_information_degenerate():
    only_zero = [CardinalitySample(0, 1, 4, 4, 0)]
    value, zeros = stepwise_information(only_zero, 4, "meanlog")
    assert math.isnan(value) and zeros == 1
    value, _ = stepwise_information(only_zero, 4, "logmean")
    assert value == -math.inf
    with pytest.raises(EstimatorError):
        stepwise_information([], 4)
    with pytest.raises(EstimatorError):
        stepwise_information([CardinalitySample(0, 1, 4, 4, 4), CardinalitySample(1, 2, 4, 4, 4)], 4)


def test_aggregate_terms_std():
    logterms = np.array([[1.0, np.nan], [3.0, np.nan], [5.0, 2.0]])
    ratios = np.array([[0.5, 0.0], [0.5, 0.0], [0.5, 0.25]])
    agg = aggregate_terms(logterms, ratios, 3)
    assert agg.meanlog.tolist() == [3.0, 2.0]
    assert agg.meanlog_std[0] == pytest.approx(2.0)
    assert math.isnan(agg.meanlog_std[1])
    assert agg.zero_delta.tolist() == [0, 2]
    assert agg.logmean[1] == pytest.approx(math.log2(3 * 0.25 / 3))


def test_information_content():
    assert information_content([1.0, 2.0, 3.0]) == (3.0, 3)
    assert information_content([1.0, 4.0, 2.0, 4.0]) == (4.0, 2)
    assert information_content([np.nan, 1.0, np.nan]) == (1.0, 2)
    assert information_content([-np.inf, 0.5]) == (0.5, 2)
    with pytest.raises(EstimatorError):
        information_content([np.nan, np.nan])


@pytest.mark.parametrize("model,grid", [(NoiseModel.EDGE_REVERSAL, (0.0, 1.0)), (NoiseModel.GAUSSIAN, (0.0,))])
def test_noise_free_reaches_full_content(model, grid):
    n = 12
    cfg = ExperimentConfig(NoiseModelConfig(model), n=n, noise_grid=grid, trials=5)
    res = run_asc_experiment(cfg)
    full = math.log2(2 ** (n - 1) - 1)
    for i in range(len(grid)):
        for alg in DETERMINISTIC:
            for mode in EstimatorMode:
                c = res.curve(alg, i, mode)
                assert c.info_content == pytest.approx(full, abs=1e-12)
                assert c.t_star == alg.num_steps(n)
                assert not c.zero_delta.any()
        for mode in EstimatorMode:
            assert np.allclose(res.curve(Algorithm.SG3, i, mode).info, sg3_closed_form(n), atol=1e-12)
        agg = res.aggregates[Algorithm.SG3, i]
        assert np.all(agg.meanlog_std == 0)


def test_samples_match_oracle():
    cfg = ExperimentConfig(n=10, noise_grid=(0.3,), trials=50, algorithms=DETERMINISTIC)
    master = make_master(cfg.model, cfg.n, 0)
    noise = cfg.model.with_noise(0.3)
    for r in range(cfg.trials):
        g1 = make_instance(master, noise, derive_seed(0, 0, r, 0, TAG_GRAPH))
        g2 = make_instance(master, noise, derive_seed(0, 0, r, 1, TAG_GRAPH))
        for alg in DETERMINISTIC:
            tr1, tr2 = run_algorithm(alg, g1), run_algorithm(alg, g2)
            for (c1, c2, d), s1, s2 in zip(trace_pair_counts(tr1, tr2), tr1.steps, tr2.steps):
                assert d <= min(c1, c2)
                assert d == oracle.oracle_intersection(s1, s2)


def test_run_trial_uses_derived_seeds():
    cfg = ExperimentConfig(n=8, noise_grid=(0.4,), trials=3, algorithms=(Algorithm.RDGREEDY,), master_seed=9)
    master = make_master(cfg.model, 8, derive_seed(9, 0, 0, 0, 2))
    _, out = run_trial(cfg, master, 0, 2)
    g1 = make_instance(master, cfg.model.with_noise(0.4), derive_seed(9, 0, 2, 0, TAG_GRAPH))
    g2 = make_instance(master, cfg.model.with_noise(0.4), derive_seed(9, 0, 2, 1, TAG_GRAPH))
    tr1 = run_algorithm(Algorithm.RDGREEDY, g1, derive_seed(9, 0, 2, 0, TAG_RDGREEDY))
    tr2 = run_algorithm(Algorithm.RDGREEDY, g2, derive_seed(9, 0, 2, 1, TAG_RDGREEDY))
    expected = np.array([sample_terms(*c, 8) for c in trace_pair_counts(tr1, tr2)])
    np.testing.assert_array_equal(out[Algorithm.RDGREEDY][1], expected[:, 1])


def test_resample_master_changes_results():
    base = dict(n=10, noise_grid=(0.3,), trials=6, algorithms=(Algorithm.EC,))
    fixed = run_asc_experiment(ExperimentConfig(**base))
    again = run_asc_experiment(ExperimentConfig(**base))
    resampled = run_asc_experiment(ExperimentConfig(**base, resample_master=True))
    key = (Algorithm.EC, 0)
    np.testing.assert_array_equal(fixed.aggregates[key].logmean, again.aggregates[key].logmean)
    assert not np.array_equal(fixed.aggregates[key].logmean, resampled.aggregates[key].logmean)


def test_content_table_and_curve():
    cfg = ExperimentConfig(n=8, noise_grid=(0.0, 0.5), trials=4, algorithms=(Algorithm.SG, Algorithm.EC))
    res = run_asc_experiment(cfg)
    table = res.content_table()
    assert set(table) == {Algorithm.SG, Algorithm.EC}
    assert len(table[Algorithm.SG]) == 2
    c = res.curve("SG", 1)
    assert c.steps.tolist() == list(range(1, 8))
    np.testing.assert_allclose(c.per_node, c.info / 8)
    assert 0 <= res.equal_fraction[1] <= 1
