"""Brute-force references for the closed-form counts (small n only).

A cut is encoded by the bitmask of the side that does not contain vertex
``n - 1``; the nontrivial cuts are the masks ``1 .. 2**(n-1) - 1``.
"""
from __future__ import annotations

import itertools

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .greedy import DoubleGreedyState, SuperVertexPartition

MAX_ORACLE_N = 16


class OracleError(ValueError):
    pass


def all_cuts(n: int) -> np.ndarray:
    if n > MAX_ORACLE_N:
        raise OracleError(f"oracle enumeration limited to n <= {MAX_ORACLE_N}, got {n}")
    return np.arange(1, 2 ** (n - 1), dtype=np.int64)


def _mask(vertices) -> int:
    return sum(1 << v for v in vertices)


def feasible_mask(state) -> np.ndarray:
    """Boolean vector over :func:`all_cuts` marking cuts consistent with ``state``."""
    if not isinstance(state, (SuperVertexPartition, DoubleGreedyState)):
        raise OracleError(f"unsupported state type {type(state).__name__}")
    A = all_cuts(state.n)
    if isinstance(state, SuperVertexPartition):
        ok = np.ones(A.shape, dtype=bool)
        for g in state.groups:
            m = _mask(g)
            inside = A & m
            ok &= (inside == 0) | (inside == m)
        return ok
    m1, m2 = _mask(state.side_a), _mask(state.side_b)
    direct = ((A & m1) == m1) & ((A & m2) == 0)
    flipped = ((A & m2) == m2) & ((A & m1) == 0)
    return direct | flipped


def oracle_feasible_cuts(state) -> frozenset:
    return frozenset(all_cuts(state.n)[feasible_mask(state)].tolist())


def oracle_intersection(state1, state2) -> int:
    if state1.n != state2.n:
        raise OracleError("states must share n")
    return int(np.count_nonzero(feasible_mask(state1) & feasible_mask(state2)))


def cut_sides(mask: int, n: int) -> tuple[frozenset, frozenset]:
    a = frozenset(v for v in range(n) if mask >> v & 1)
    return a, frozenset(range(n)) - a


def overlap_components(P, Q) -> int:
    """Connected components of the bipartite graph joining groups of ``P``
    and ``Q`` that share a vertex."""
    P, Q = [set(p) for p in P], [set(q) for q in Q]
    h = len(P)
    rows, cols = [], []
    for i, j in itertools.product(range(h), range(len(Q))):
        if P[i] & Q[j]:
            rows.append(i)
            cols.append(h + j)
    size = h + len(Q)
    adj = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(size, size))
    return int(connected_components(adj, directed=False)[0])


def brute_force_maxcut(weights) -> float:
    w = np.asarray(weights, dtype=np.float64)
    n = w.shape[0]
    best = 0.0
    for mask in all_cuts(n).tolist():
        a = np.array([mask >> v & 1 for v in range(n)], dtype=bool)
        best = max(best, float(w[np.ix_(a, ~a)].sum()))
    return best
