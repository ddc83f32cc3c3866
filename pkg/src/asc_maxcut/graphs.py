"""Dense weighted graphs, master-graph generators and the two noise channels.

Every random draw is taken once per unordered pair ``i < j`` in lexicographic
order (the order of ``np.triu_indices``), so a given seed yields the same graph
on every platform.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable

import numpy as np


class GraphError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class WeightedGraph:
    """Complete undirected graph stored as a symmetric weight matrix."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.array(self.weights, dtype=np.float64, copy=True)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise GraphError(f"weights must be square, got shape {w.shape}")
        if w.shape[0] < 2:
            raise GraphError("a graph needs at least 2 vertices")
        if not np.all(np.isfinite(w)):
            raise GraphError("weights must be finite")
        if np.any(np.diag(w) != 0):
            raise GraphError("diagonal must be zero")
        if not np.array_equal(w, w.T):
            raise GraphError("weights must be symmetric")
        if np.any(w < 0):
            raise GraphError("weights must be nonnegative")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    @property
    def m(self) -> int:
        return self.n * (self.n - 1) // 2

    def edge_weights(self) -> np.ndarray:
        """Upper-triangle weights in lexicographic ``(i, j), i < j`` order."""
        return self.weights[np.triu_indices(self.n, 1)]

    @classmethod
    def from_edge_weights(cls, n: int, values) -> "WeightedGraph":
        values = np.asarray(values, dtype=np.float64)
        if values.shape != (n * (n - 1) // 2,):
            raise GraphError(f"expected {n * (n - 1) // 2} edge weights, got {values.shape}")
        w = np.zeros((n, n))
        iu = np.triu_indices(n, 1)
        w[iu] = values
        w.T[iu] = values
        return cls(w)

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return np.array_equal(self.weights, other.weights)

    __hash__ = None


class NoiseModel(str, enum.Enum):
    EDGE_REVERSAL = "edge-reversal"
    GAUSSIAN = "gaussian"


@dataclass(frozen=True)
class NoiseModelConfig:
    """Parameters of one noise model. Only the fields of ``model`` are used."""

    model: NoiseModel = NoiseModel.EDGE_REVERSAL
    p_m: float = 0.2
    p: float = 0.0
    mu: float = 600.0
    sigma_m: float = 50.0
    sigma: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "model", NoiseModel(self.model))
        for name in ("p_m", "p"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise GraphError(f"{name} must lie in [0, 1], got {v}")
        for name in ("sigma_m", "sigma"):
            if getattr(self, name) < 0:
                raise GraphError(f"{name} must be nonnegative")

    def with_noise(self, level: float) -> "NoiseModelConfig":
        """Copy with the instance noise (``p`` or ``sigma``) set to ``level``."""
        field = "p" if self.model is NoiseModel.EDGE_REVERSAL else "sigma"
        return replace(self, **{field: float(level)})

    @property
    def noise_level(self) -> float:
        return self.p if self.model is NoiseModel.EDGE_REVERSAL else self.sigma


@dataclass(frozen=True)
class ConsistencyStat:
    equal_pairs: int
    total_edges: int

    @property
    def fraction(self) -> float:
        return self.equal_pairs / self.total_edges


def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def cut_value(g: WeightedGraph, s: Iterable[int]) -> float:
    """Total weight of edges with exactly one endpoint in ``s``."""
    idx = np.fromiter(s, dtype=np.int64)
    if idx.size and (idx.min() < 0 or idx.max() >= g.n):
        raise GraphError(f"vertex index out of range for n={g.n}")
    inside = np.zeros(g.n, dtype=bool)
    inside[idx] = True
    return float(g.weights[np.ix_(inside, ~inside)].sum())


def flip_edges(g: WeightedGraph, mask) -> WeightedGraph:
    """Replace ``w`` by ``1 - w`` on the edges selected by ``mask`` (length m)."""
    w = g.edge_weights()
    if np.any(w < 0) or np.any(w > 1):
        raise GraphError("edge reversal needs all weights in [0, 1]")
    mask = np.asarray(mask, dtype=bool)
    return WeightedGraph.from_edge_weights(g.n, np.where(mask, 1.0 - w, w))


def flip_noise(g: WeightedGraph, p: float, seed) -> WeightedGraph:
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"flip probability must lie in [0, 1], got {p}")
    mask = _rng(seed).random(g.m) < p
    return flip_edges(g, mask)


def gen_bipartite_master(n: int, p_m: float = 0.2, seed=None) -> WeightedGraph:
    """Planted balanced bipartition ``{0..n/2-1} | {n/2..n-1}`` with near-0
    weights inside the halves and near-1 weights across, then edge-flipped
    with probability ``p_m``."""
    if n % 2 or n < 4:
        raise GraphError(f"bipartite master needs an even n >= 4, got {n}")
    rng = _rng(seed)
    iu, ju = np.triu_indices(n, 1)
    half = n // 2
    cross = (iu < half) != (ju < half)
    width = 8.0 / n**2
    u = rng.random(iu.size) * width
    base = np.where(cross, 1.0 - width + u, u)
    # the upper endpoint 1 - width + width may round above 1
    base = np.clip(base, 0.0, 1.0)
    flip = rng.random(iu.size) < p_m
    return WeightedGraph.from_edge_weights(n, np.where(flip, 1.0 - base, base))


def gen_gaussian_master(n: int, mu: float = 600.0, sigma_m: float = 50.0, seed=None) -> WeightedGraph:
    if sigma_m < 0:
        raise GraphError("sigma_m must be nonnegative")
    m = n * (n - 1) // 2
    w = _rng(seed).normal(mu, sigma_m, size=m)
    w[w < 0] = mu
    return WeightedGraph.from_edge_weights(n, w)


def gaussian_noise(g: WeightedGraph, sigma: float, seed) -> WeightedGraph:
    if sigma < 0:
        raise GraphError("sigma must be nonnegative")
    w = g.edge_weights() + _rng(seed).normal(0.0, sigma, size=g.m)
    w[w < 0] = 0.0
    return WeightedGraph.from_edge_weights(g.n, w)


def make_master(cfg: NoiseModelConfig, n: int, seed) -> WeightedGraph:
    if cfg.model is NoiseModel.EDGE_REVERSAL:
        return gen_bipartite_master(n, cfg.p_m, seed)
    return gen_gaussian_master(n, cfg.mu, cfg.sigma_m, seed)


def make_instance(master: WeightedGraph, cfg: NoiseModelConfig, seed) -> WeightedGraph:
    """One noisy copy of ``master`` under the instance noise of ``cfg``."""
    if cfg.model is NoiseModel.EDGE_REVERSAL:
        return flip_noise(master, cfg.p, seed)
    return gaussian_noise(master, cfg.sigma, seed)


def equal_edge_fraction(g1: WeightedGraph, g2: WeightedGraph) -> ConsistencyStat:
    if g1.n != g2.n:
        raise GraphError(f"size mismatch: {g1.n} vs {g2.n}")
    equal = int(np.count_nonzero(g1.edge_weights() == g2.edge_weights()))
    return ConsistencyStat(equal, g1.m)


def write_graph(g: WeightedGraph, path) -> None:
    """Text format: a header line ``n`` then one ``i j w`` line per edge, i < j."""
    lines = [str(g.n)]
    iu, ju = np.triu_indices(g.n, 1)
    for i, j, w in zip(iu, ju, g.weights[iu, ju]):
        lines.append(f"{i} {j} {w:.17g}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_graph(path) -> WeightedGraph:
    rows = Path(path).read_text(encoding="utf-8").split("\n")
    rows = [r for r in rows if r.strip()]
    n = int(rows[0])
    if len(rows) - 1 != n * (n - 1) // 2:
        raise GraphError(f"{path}: expected {n * (n - 1) // 2} edge lines, got {len(rows) - 1}")
    w = np.zeros((n, n))
    for line in rows[1:]:
        i, j, val = line.split()
        i, j = int(i), int(j)
        if not 0 <= i < j < n:
            raise GraphError(f"{path}: bad edge {i} {j}")
        w[i, j] = w[j, i] = float(val)
    return WeightedGraph(w)
