"""Oracle-equivalence suites behind ``asc-maxcut verify``."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import counting, oracle
from .graphs import (NoiseModel, NoiseModelConfig, WeightedGraph, flip_noise,
                     gen_bipartite_master, gen_gaussian_master, make_instance)
from .greedy import (Algorithm, DoubleGreedyState, check_sg_d2_equivalence,
                     run_algorithm)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failed: int = 0
    examples: list = field(default_factory=list)  # first few failing cases

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def expect(self, ok: bool, what) -> None:
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.examples) < 10:
                self.examples.append(what)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checked - self.failed}/{self.checked} checks passed"


def random_instance_pair(n: int, rng: np.random.Generator, model: NoiseModel):
    """Master plus two noisy copies with a random noise level.

    Edge reversal uses the planted bipartite master when ``n`` is even and a
    uniform ``[0, 1]`` master otherwise.
    """
    if NoiseModel(model) is NoiseModel.EDGE_REVERSAL:
        if n % 2 == 0 and n >= 4:
            master = gen_bipartite_master(n, 0.2, rng)
        else:
            master = WeightedGraph.from_edge_weights(n, rng.random(n * (n - 1) // 2))
        p = float(rng.random())
        return master, flip_noise(master, p, rng), flip_noise(master, p, rng)
    master = gen_gaussian_master(n, 600.0, 50.0, rng)
    cfg = NoiseModelConfig(NoiseModel.GAUSSIAN, sigma=float(rng.uniform(0, 300)))
    return master, make_instance(master, cfg, rng), make_instance(master, cfg, rng)


def counting_suite(ns, pairs_per_n: int, seed=0) -> SuiteResult:
    """Closed-form |C_t| and Delta_t against enumeration, for every algorithm
    and every step of random instance pairs (half per noise model)."""
    rng = np.random.default_rng(seed)
    res = SuiteResult("counting vs enumeration")
    for n in ns:
        res.expect(counting.solution_space_size(n) == oracle.all_cuts(n).size, ("solution space", n))
        for r in range(pairs_per_n):
            model = NoiseModel.EDGE_REVERSAL if r % 2 == 0 else NoiseModel.GAUSSIAN
            _, g1, g2 = random_instance_pair(n, rng, model)
            for alg in Algorithm:
                tr1 = run_algorithm(alg, g1, rng)
                tr2 = run_algorithm(alg, g2, rng)
                fast = counting.trace_pair_counts(tr1, tr2)
                for t, (s1, s2) in enumerate(zip(tr1.steps, tr2.steps)):
                    c1 = counting.count_state(alg, s1)
                    c2 = counting.count_state(alg, s2)
                    delta = counting.intersect(alg, s1, s2)
                    o1 = int(oracle.feasible_mask(s1).sum())
                    o2 = int(oracle.feasible_mask(s2).sum())
                    od = oracle.oracle_intersection(s1, s2)
                    res.expect((c1, c2, delta) == (o1, o2, od) and fast[t] == (c1, c2, delta),
                               (alg.value, n, t + 1, (c1, c2, delta), (o1, o2, od), fast[t]))
    return res


def random_partition_pair(rng: np.random.Generator, max_h: int = 8):
    """Two distinct partitions (no shared group) of one ground set, h <= max_h."""
    while True:
        h = int(rng.integers(2, max_h + 1))
        size = int(rng.integers(h, h + 9))
        P = _random_partition(rng, size, h)
        Q = _random_partition(rng, size, h)
        common = set(P) & set(Q)
        P = [g for g in P if g not in common]
        Q = [g for g in Q if g not in common]
        if len(P) >= 2:
            return P, Q


def _random_partition(rng, size, h):
    labels = np.concatenate([np.arange(h), rng.integers(0, h, size - h)])
    rng.shuffle(labels)
    return [frozenset(np.flatnonzero(labels == g).tolist()) for g in range(h)]


def supervertex_suite(trials: int, seed=0, max_h: int = 8) -> SuiteResult:
    rng = np.random.default_rng(seed)
    res = SuiteResult("common super vertices vs overlap components")
    for _ in range(trials):
        P, Q = random_partition_pair(rng, max_h)
        c = counting.common_supervertex_count(P, Q)
        comps = oracle.overlap_components(P, Q)
        res.expect(c == comps and 1 <= c <= len(P), (P, Q, c, comps))
    return res


def identity_suite(graphs: int, states_per_graph: int, n: int = 20, seed=0) -> SuiteResult:
    rng = np.random.default_rng(seed)
    res = SuiteResult("SG/D2Greedy labelling identity")
    for _ in range(graphs):
        g = gen_gaussian_master(n, 600.0, 50.0, rng)
        rep = check_sg_d2_equivalence(g, states_per_graph, rng)
        res.expect(rep.passed, (rep.max_deviation, rep.decision_agreements, rep.states))
    return res


def state_suite(n_max: int, trials: int, seed=0) -> SuiteResult:
    """Arbitrary (not engine-produced) double-greedy state pairs, both families."""
    rng = np.random.default_rng(seed)
    res = SuiteResult("arbitrary state pairs vs enumeration")
    for _ in range(trials):
        n = int(rng.integers(2, n_max + 1))
        states = []
        for _ in range(2):
            labels = rng.integers(0, 3, n)
            states.append(DoubleGreedyState.from_sides(n, np.flatnonzero(labels == 1).tolist(),
                                                       np.flatnonzero(labels == 2).tolist()))
        s1, s2 = states
        res.expect(counting.count_d2_family(s1) == len(oracle.oracle_feasible_cuts(s1)), ("count", s1))
        d = counting.intersect_double_greedy(s1, s2, "d2")
        res.expect(d == oracle.oracle_intersection(s1, s2), ("d2", s1, s2))
        if all(s.side_a and s.side_b for s in states):
            res.expect(counting.count_sg_family(s1) == len(oracle.oracle_feasible_cuts(s1)), ("sg count", s1))
            res.expect(counting.intersect_double_greedy(s1, s2, "sg") == d, ("sg", s1, s2))
    return res


def run_all(n_max: int = 10, trials: int = 500, seed: int = 0):
    if n_max > oracle.MAX_ORACLE_N:
        raise ValueError(f"n_max must be <= {oracle.MAX_ORACLE_N}")
    return [
        counting_suite(range(3, n_max + 1), trials, seed),
        supervertex_suite(trials, seed),
        identity_suite(max(1, trials // 100), 100, seed=seed),
        state_suite(n_max, trials, seed),
    ]
