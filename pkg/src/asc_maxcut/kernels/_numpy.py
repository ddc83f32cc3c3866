"""Vectorised numpy kernels; same contracts and bit-identical results as the
numba versions."""
import numpy as np


def double_greedy(W, deg, u, randomized):
    n = W.shape[0]
    side = np.zeros(n, dtype=np.int8)
    ws1 = np.zeros(n)
    ws2 = np.zeros(n)
    for i in range(n):
        if randomized:
            a = max(deg[i] - 2.0 * ws1[i], 0.0)
            b = max(deg[i] - 2.0 * ws2[i], 0.0)
            expand = a + b == 0.0 or u[i] < a / (a + b)
        else:
            expand = ws2[i] >= ws1[i]
        if expand:
            side[i] = 1
            ws1 += W[i]
        else:
            side[i] = 2
            ws2 += W[i]
    return side


def single_greedy(W, by_score):
    n = W.shape[0]
    iu, ju = np.triu_indices(n, 1)
    k = int(np.argmax(W[iu, ju]))
    x, y = int(iu[k]), int(ju[k])
    side = np.zeros(n, dtype=np.int8)
    order = np.empty(n, dtype=np.int64)
    side[x], side[y] = 1, 2
    order[0], order[1] = x, y
    ws1 = W[x] + 0.0
    ws2 = W[y] + 0.0
    rest = iter(v for v in range(n) if v != x and v != y)
    for pos in range(2, n):
        if by_score:
            score = np.abs(ws1 - ws2)
            score[side != 0] = -1.0
            v = int(np.argmax(score))
        else:
            v = next(rest)
        order[pos] = v
        if ws1[v] > ws2[v]:
            side[v] = 2
            ws2 += W[v]
        else:
            side[v] = 1
            ws1 += W[v]
    return order, side


def edge_contraction(W):
    n = W.shape[0]
    A = np.array(W, dtype=np.float64, copy=True)
    upper = np.triu(np.ones((n, n), dtype=bool), 1)
    active = np.ones(n, dtype=bool)
    merges = np.empty((n - 2, 2), dtype=np.int64)
    for step in range(n - 2):
        live = upper & active[:, None] & active[None, :]
        k = int(np.argmin(np.where(live, A, np.inf)))
        x, y = divmod(k, n)
        others = active.copy()
        others[[x, y]] = False
        A[x, others] = A[x, others] + A[y, others]
        A[others, x] = A[x, others]
        active[y] = False
        merges[step] = (x, y)
    i, j = np.flatnonzero(active)
    return merges, A[i, j]


def pair_step_stats(time1, side1, time2, side2, steps):
    # columns: |S1'| |S2'| |S1''| |S2''| agree-on-both disagree-on-both |L|
    def cum(times, mask):
        return np.cumsum(np.bincount(times[mask], minlength=steps + 1))[1:]

    time1 = np.asarray(time1, dtype=np.int64)
    time2 = np.asarray(time2, dtype=np.int64)
    both = np.maximum(time1, time2)
    agree = side1 == side2
    first = np.minimum(time1, time2)
    cols = [
        cum(time1, side1 == 1),
        cum(time1, side1 == 2),
        cum(time2, side2 == 1),
        cum(time2, side2 == 2),
        cum(both, agree),
        cum(both, ~agree),
        time1.shape[0] - cum(first, np.ones_like(agree)),
    ]
    return np.stack(cols, axis=1).astype(np.int64)
