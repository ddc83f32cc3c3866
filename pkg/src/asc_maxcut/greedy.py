"""Step-by-step greedy MaxCut engines.

Each engine returns an :class:`AlgorithmTrace` holding a compact record of the
run (label times and sides, or the contraction sequence) from which the state
after any step can be rebuilt. Vertices are 0-based.

Tie rules: D2Greedy expands ``S`` when both gains are equal; SG and SG3 put a
vertex into ``S1`` when ``w(v, S1) == w(v, S2)``; SG3 score ties and all
max/min edge ties go to the lowest index (lexicographically smallest pair).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .graphs import WeightedGraph, cut_value


class Algorithm(str, enum.Enum):
    D2GREEDY = "D2Greedy"
    RDGREEDY = "RDGreedy"
    SG = "SG"
    SG3 = "SG3"
    EC = "EC"

    @property
    def is_double_greedy(self) -> bool:
        return self is not Algorithm.EC

    @property
    def d2_family(self) -> bool:
        return self in (Algorithm.D2GREEDY, Algorithm.RDGREEDY)

    @property
    def randomized(self) -> bool:
        return self is Algorithm.RDGREEDY

    def num_steps(self, n: int) -> int:
        if self.d2_family:
            return n
        if self is Algorithm.EC:
            return n - 2
        return n - 1


class StateError(ValueError):
    pass


@dataclass(frozen=True)
class DoubleGreedyState:
    """Partial labelling ``(S1, S2)`` after ``step`` steps.

    For D2Greedy/RDGreedy ``side_a`` is ``S`` and ``side_b`` is ``V \\ T``.
    """

    step: int
    side_a: frozenset
    side_b: frozenset
    unlabelled: frozenset

    def __post_init__(self):
        for name in ("side_a", "side_b", "unlabelled"):
            object.__setattr__(self, name, frozenset(int(v) for v in getattr(self, name)))
        if self.side_a & self.side_b or self.unlabelled & (self.side_a | self.side_b):
            raise StateError("state parts must be pairwise disjoint")
        if self.vertices != frozenset(range(self.n)):
            raise StateError("state parts must cover 0..n-1")

    @property
    def vertices(self) -> frozenset:
        return self.side_a | self.side_b | self.unlabelled

    @property
    def n(self) -> int:
        return len(self.side_a) + len(self.side_b) + len(self.unlabelled)

    @classmethod
    def from_sides(cls, n: int, side_a, side_b, step: int = 0) -> "DoubleGreedyState":
        side_a, side_b = frozenset(side_a), frozenset(side_b)
        return cls(step, side_a, side_b, frozenset(range(n)) - side_a - side_b)


@dataclass(frozen=True)
class SuperVertexPartition:
    """Vertex groups after ``step`` contractions, sorted by smallest member."""

    step: int
    groups: tuple

    def __post_init__(self):
        groups = tuple(sorted((frozenset(int(v) for v in g) for g in self.groups), key=min))
        if any(not g for g in groups):
            raise StateError("super vertices must be nonempty")
        union = frozenset().union(*groups)
        if sum(map(len, groups)) != len(union) or union != frozenset(range(len(union))):
            raise StateError("super vertices must partition 0..n-1")
        object.__setattr__(self, "groups", groups)

    @property
    def n(self) -> int:
        return sum(map(len, self.groups))

    @property
    def k(self) -> int:
        return len(self.groups)


def _sorted(s) -> list:
    return sorted(s)


@dataclass(frozen=True, eq=False)
class AlgorithmTrace:
    """Compact run record.

    Double-greedy runs store ``label_time[v]`` (step at which ``v`` got its
    label) and ``side[v]`` (1 or 2); EC stores ``merges[t-1] = (x, y)``, the
    smallest members of the two groups merged at step ``t``.
    """

    algorithm: Algorithm
    n: int
    final_cut: tuple
    final_value: float
    label_time: np.ndarray | None = None
    side: np.ndarray | None = None
    merges: np.ndarray | None = None

    @property
    def num_steps(self) -> int:
        return self.algorithm.num_steps(self.n)

    def state(self, t: int):
        if not 0 <= t <= self.num_steps:
            raise StateError(f"step {t} outside 0..{self.num_steps}")
        if self.algorithm is Algorithm.EC:
            return partition_after(self.n, self.merges[:t], step=t)
        done = self.label_time <= t
        return DoubleGreedyState(
            t,
            frozenset(np.flatnonzero(done & (self.side == 1)).tolist()),
            frozenset(np.flatnonzero(done & (self.side == 2)).tolist()),
            frozenset(np.flatnonzero(~done).tolist()),
        )

    @cached_property
    def steps(self) -> tuple:
        return tuple(self.state(t) for t in range(1, self.num_steps + 1))

    def __eq__(self, other):
        if not isinstance(other, AlgorithmTrace):
            return NotImplemented
        same = self.algorithm == other.algorithm and self.n == other.n
        for name in ("label_time", "side", "merges"):
            a, b = getattr(self, name), getattr(other, name)
            same = same and ((a is None and b is None) or np.array_equal(a, b))
        return same and self.final_cut == other.final_cut

    __hash__ = None

    def dump(self) -> str:
        """One ``t | algorithm | descriptor`` line per step."""
        lines = []
        for st in self.steps:
            if isinstance(st, SuperVertexPartition):
                desc = " ".join(str(_sorted(g)) for g in st.groups)
            else:
                desc = f"A={_sorted(st.side_a)} B={_sorted(st.side_b)} U={_sorted(st.unlabelled)}"
            lines.append(f"{st.step} | {self.algorithm.value} | {desc}")
        return "\n".join(lines)


def partition_after(n: int, merges, step: int | None = None) -> SuperVertexPartition:
    members = {v: {v} for v in range(n)}
    for x, y in merges:
        members[int(x)] |= members.pop(int(y))
    return SuperVertexPartition(len(merges) if step is None else step, tuple(members.values()))


def incident_weight(g: WeightedGraph, v: int, s) -> float:
    idx = list(s)
    return float(g.weights[v, idx].sum()) if idx else 0.0


def gains(g: WeightedGraph, state: DoubleGreedyState, v: int) -> tuple[float, float]:
    """Marginal gains ``a = f(S+v) - f(S)`` and ``b = f(T-v) - f(T)``.

    With ``S = side_a`` and ``T = V \\ side_b`` both reduce to incident sums:
    ``a = deg(v) - 2 w(v, S1)`` and ``b = deg(v) - 2 w(v, S2)``.
    """
    if v not in state.unlabelled:
        raise StateError(f"vertex {v} is already labelled")
    deg = float(g.weights[v].sum())
    return deg - 2.0 * incident_weight(g, v, state.side_a), deg - 2.0 * incident_weight(g, v, state.side_b)


def _double_greedy_trace(alg, g, side) -> AlgorithmTrace:
    side = np.asarray(side, dtype=np.int8)
    s1 = frozenset(np.flatnonzero(side == 1).tolist())
    s2 = frozenset(np.flatnonzero(side == 2).tolist())
    return AlgorithmTrace(alg, g.n, (s1, s2), cut_value(g, s1), side=side,
                          label_time=np.arange(1, g.n + 1, dtype=np.int64))


def run_d2greedy(g: WeightedGraph) -> AlgorithmTrace:
    side = kernels.double_greedy(g.weights, g.weights.sum(axis=1), np.empty(0), False)
    return _double_greedy_trace(Algorithm.D2GREEDY, g, side)


def run_rdgreedy(g: WeightedGraph, seed=None) -> AlgorithmTrace:
    u = np.random.default_rng(seed).random(g.n)
    side = kernels.double_greedy(g.weights, g.weights.sum(axis=1), u, True)
    return _double_greedy_trace(Algorithm.RDGREEDY, g, side)


def _single_greedy(alg, g, by_score) -> AlgorithmTrace:
    order, side = kernels.single_greedy(g.weights, by_score)
    label_time = np.empty(g.n, dtype=np.int64)
    label_time[order] = np.maximum(np.arange(g.n), 1)
    s1 = frozenset(np.flatnonzero(side == 1).tolist())
    s2 = frozenset(np.flatnonzero(side == 2).tolist())
    return AlgorithmTrace(alg, g.n, (s1, s2), cut_value(g, s1),
                          label_time=label_time, side=np.asarray(side, dtype=np.int8))


def run_sg(g: WeightedGraph) -> AlgorithmTrace:
    return _single_greedy(Algorithm.SG, g, False)


def run_sg3(g: WeightedGraph) -> AlgorithmTrace:
    return _single_greedy(Algorithm.SG3, g, True)


def run_ec(g: WeightedGraph) -> AlgorithmTrace:
    if g.n < 3:
        raise ValueError("edge contraction needs n >= 3")
    merges, _ = kernels.edge_contraction(g.weights)
    last = partition_after(g.n, merges)
    s1, s2 = last.groups
    return AlgorithmTrace(Algorithm.EC, g.n, (s1, s2), cut_value(g, s1), merges=np.asarray(merges))


def run_algorithm(alg: Algorithm, g: WeightedGraph, seed=None) -> AlgorithmTrace:
    alg = Algorithm(alg)
    if alg is Algorithm.RDGREEDY:
        return run_rdgreedy(g, seed)
    return {
        Algorithm.D2GREEDY: run_d2greedy,
        Algorithm.SG: run_sg,
        Algorithm.SG3: run_sg3,
        Algorithm.EC: run_ec,
    }[alg](g)


@dataclass(frozen=True)
class EquivalenceReport:
    states: int
    max_deviation: float
    decision_agreements: int

    @property
    def passed(self) -> bool:
        return self.max_deviation <= 1e-9 and self.decision_agreements == self.states


def check_sg_d2_equivalence(g: WeightedGraph, trials: int, seed=None) -> EquivalenceReport:
    """Sample random partial states and compare the two labelling criteria.

    ``a - b`` is evaluated from the cut function itself and compared with
    ``2 [w(v, S2) - w(v, S1)]``; the deviation is reported relative to
    ``1 + |a - b|``. The D2Greedy decision (``a >= b`` from :func:`gains`)
    must coincide with SG's (``not w(v, S1) > w(v, S2)``).
    """
    rng = np.random.default_rng(seed)
    n = g.n
    everything = frozenset(range(n))
    worst = 0.0
    agree = 0
    for _ in range(trials):
        probs = rng.dirichlet(np.ones(3))
        labels = rng.choice(3, size=n, p=probs)
        if not np.any(labels == 0):
            labels[rng.integers(n)] = 0
        state = DoubleGreedyState.from_sides(n, np.flatnonzero(labels == 1).tolist(),
                                             np.flatnonzero(labels == 2).tolist())
        v = int(rng.choice(np.flatnonzero(labels == 0)))
        S, T = state.side_a, everything - state.side_b
        a = cut_value(g, S | {v}) - cut_value(g, S)
        b = cut_value(g, T - {v}) - cut_value(g, T)
        w1 = incident_weight(g, v, state.side_a)
        w2 = incident_weight(g, v, state.side_b)
        worst = max(worst, abs((a - b) - 2.0 * (w2 - w1)) / (1.0 + abs(a - b)))
        ga, gb = gains(g, state, v)
        agree += (ga >= gb) == (not w1 > w2)
    return EquivalenceReport(trials, worst, agree)
