"""Loop-style kernels compiled with numba (falls back to plain Python loops
when numba is missing, which is slow but correct)."""
import numpy as np

from .._accel import njit


@njit(cache=True)
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
            for j in range(n):
                ws1[j] += W[i, j]
        else:
            side[i] = 2
            for j in range(n):
                ws2[j] += W[i, j]
    return side


@njit(cache=True)
def single_greedy(W, by_score):
    n = W.shape[0]
    side = np.zeros(n, dtype=np.int8)
    order = np.empty(n, dtype=np.int64)
    x = 0
    y = 1
    best = W[0, 1]
    for i in range(n):
        for j in range(i + 1, n):
            if W[i, j] > best:
                best = W[i, j]
                x = i
                y = j
    side[x] = 1
    side[y] = 2
    order[0] = x
    order[1] = y
    ws1 = np.zeros(n)
    ws2 = np.zeros(n)
    for j in range(n):
        ws1[j] += W[x, j]
        ws2[j] += W[y, j]
    nxt = 0
    for pos in range(2, n):
        v = -1
        if by_score:
            top = -1.0
            for j in range(n):
                if side[j] == 0:
                    s = abs(ws1[j] - ws2[j])
                    if s > top:
                        top = s
                        v = j
        else:
            while side[nxt] != 0:
                nxt += 1
            v = nxt
        order[pos] = v
        if ws1[v] > ws2[v]:
            side[v] = 2
            for j in range(n):
                ws2[j] += W[v, j]
        else:
            side[v] = 1
            for j in range(n):
                ws1[j] += W[v, j]
    return order, side


@njit(cache=True)
def edge_contraction(W):
    n = W.shape[0]
    A = W.copy()
    active = np.ones(n, dtype=np.bool_)
    merges = np.empty((n - 2, 2), dtype=np.int64)
    for step in range(n - 2):
        x = -1
        y = -1
        best = np.inf
        for i in range(n):
            if not active[i]:
                continue
            for j in range(i + 1, n):
                if active[j] and A[i, j] < best:
                    best = A[i, j]
                    x = i
                    y = j
        for j in range(n):
            if active[j] and j != x and j != y:
                A[x, j] = A[x, j] + A[y, j]
                A[j, x] = A[x, j]
        active[y] = False
        merges[step, 0] = x
        merges[step, 1] = y
    last = np.empty(2, dtype=np.int64)
    c = 0
    for i in range(n):
        if active[i]:
            last[c] = i
            c += 1
    return merges, A[last[0], last[1]]


@njit(cache=True)
def pair_step_stats(time1, side1, time2, side2, steps):
    # columns: |S1'| |S2'| |S1''| |S2''| agree-on-both disagree-on-both |L|
    n = time1.shape[0]
    inc = np.zeros((steps + 1, 7), dtype=np.int64)
    for v in range(n):
        inc[time1[v], side1[v] - 1] += 1
        inc[time2[v], 1 + side2[v]] += 1
        both = max(time1[v], time2[v])
        if side1[v] == side2[v]:
            inc[both, 4] += 1
        else:
            inc[both, 5] += 1
        inc[min(time1[v], time2[v]), 6] -= 1
    out = np.empty((steps, 7), dtype=np.int64)
    run = np.zeros(7, dtype=np.int64)
    run[6] = n
    for t in range(1, steps + 1):
        for c in range(7):
            run[c] += inc[t, c]
            out[t - 1, c] = run[c]
    return out
