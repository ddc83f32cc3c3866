"""Exact sizes of approximation sets and of their pairwise intersections.

A cut is an unordered, nontrivial bipartition ``{A, V \\ A}`` so the solution
space has ``2**(n-1) - 1`` elements. Counts are Python ints and stay exact for
any ``n``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .greedy import Algorithm, AlgorithmTrace, DoubleGreedyState, SuperVertexPartition


class CountingError(ValueError):
    pass


def exact_log2(x: int) -> float:
    """``log2`` of a positive int; exact for powers of two."""
    x = int(x)
    if x <= 0:
        raise CountingError(f"log2 of nonpositive count {x}")
    if x & (x - 1) == 0:
        return float(x.bit_length() - 1)
    return math.log2(x)


def solution_space_size(n: int) -> int:
    if n < 2:
        raise CountingError(f"need n >= 2, got {n}")
    return 2 ** (n - 1) - 1


def count_sg_family(state: DoubleGreedyState) -> int:
    if not state.side_a or not state.side_b:
        raise CountingError("SG/SG3 states have both sides nonempty")
    return 2 ** len(state.unlabelled)


def count_d2_family(state: DoubleGreedyState, literal: bool = False) -> int:
    """Completions of a D2Greedy/RDGreedy labelling.

    ``2**k`` when both sides are nonempty, ``2**k - 1`` when exactly one is.
    For the unlabelled start (both empty) the true count is the whole space
    ``2**(n-1) - 1``; ``literal=True`` returns ``2**k - 1`` there instead.
    """
    k = len(state.unlabelled)
    if state.side_a and state.side_b:
        return 2**k
    if state.side_a or state.side_b or literal:
        return 2**k - 1
    return solution_space_size(state.n)


def count_ec(state: SuperVertexPartition) -> int:
    if state.k < 2:
        raise CountingError("need at least two super vertices")
    return 2 ** (state.k - 1) - 1


def count_state(alg: Algorithm, state) -> int:
    alg = Algorithm(alg)
    if alg is Algorithm.EC:
        return count_ec(state)
    if alg.d2_family:
        return count_d2_family(state)
    return count_sg_family(state)


@dataclass(frozen=True)
class IntersectionContext:
    common_unlabelled: frozenset
    m_prime: frozenset
    m_double: frozenset

    @property
    def l(self) -> int:
        return len(self.common_unlabelled)


def intersection_context(s1: DoubleGreedyState, s2: DoubleGreedyState) -> IntersectionContext:
    L = s1.unlabelled & s2.unlabelled
    return IntersectionContext(L, s1.unlabelled - L, s2.unlabelled - L)


def _oriented(l: int, into_a: bool, into_b: bool) -> int:
    # 2**l completions, minus the trivial cuts A = {} or A = V when allowed
    return 2**l - (not into_a) - (not into_b)


def intersect_double_greedy(s1: DoubleGreedyState, s2: DoubleGreedyState,
                            family: str = "sg", literal: bool = False) -> int:
    """Number of cuts consistent with both partial labellings.

    After removing ``M''`` from the first state and ``M'`` from the second the
    remaining labelled pairs must match, directly or with the sides swapped;
    the vertices of ``L`` are then free. When no vertex is labelled in both
    states each orientation contributes its own ``2**l`` completions, which
    ``literal=True`` ignores (it returns a single ``2**l`` term).
    """
    if family not in ("sg", "d2"):
        raise CountingError(f"unknown family {family!r}")
    if s1.n != s2.n or s1.step != s2.step:
        raise CountingError("states must share n and step")
    if family == "sg":
        for s in (s1, s2):
            if not s.side_a or not s.side_b:
                raise CountingError("SG/SG3 states have both sides nonempty")
    lab1 = s1.side_a | s1.side_b
    lab2 = s2.side_a | s2.side_b
    if not lab1 and not lab2:
        return count_d2_family(s1, literal=literal)
    if not lab1:
        s1, s2, lab1, lab2 = s2, s1, lab2, lab1
    ctx = intersection_context(s1, s2)
    a1, b1 = s1.side_a - ctx.m_double, s1.side_b - ctx.m_double
    a2, b2 = s2.side_a - ctx.m_prime, s2.side_b - ctx.m_prime
    same = (a1, b1) == (a2, b2)
    swap = (a1, b1) == (b2, a2)
    l = ctx.l
    if literal:
        if not (same or swap):
            return 0
        if family == "sg":
            return 2**l
        x, y = (s2.side_a, s2.side_b) if same else (s2.side_b, s2.side_a)
        return _oriented(l, bool(s1.side_a | x), bool(s1.side_b | y))
    total = 0
    if same:
        total += _oriented(l, bool(s1.side_a | s2.side_a), bool(s1.side_b | s2.side_b))
    if swap and lab2:
        total += _oriented(l, bool(s1.side_a | s2.side_b), bool(s1.side_b | s2.side_a))
    return total


def _check_groups(groups, name):
    seen = set()
    for g in groups:
        if not g:
            raise CountingError(f"{name} contains an empty super vertex")
        if seen & g:
            raise CountingError(f"super vertices in {name} overlap")
        seen |= g
    return seen


def common_supervertex_count(P, Q) -> int:
    """Maximum number of common super vertices reachable by contracting
    groups inside ``P`` and inside ``Q``.

    Starting from a group of ``P`` and a ``Q`` group it meets, each candidate
    absorbs the group of the other side's leftover vertices until both cover
    the same vertex set; that set is one common super vertex and both
    candidates are removed. Every merge consumes a group, so the loop runs at
    most ``2h`` merges in total.
    """
    P = [frozenset(p) for p in P]
    Q = [frozenset(q) for q in Q]
    if len(P) != len(Q):
        raise CountingError(f"|P| = {len(P)} differs from |Q| = {len(Q)}")
    if _check_groups(P, "P") != _check_groups(Q, "Q"):
        raise CountingError("P and Q must cover the same vertices")
    if set(P) & set(Q):
        raise CountingError("P and Q share a super vertex; strip it first")
    owner_p = {v: i for i, p in enumerate(P) for v in p}
    owner_q = {v: j for j, q in enumerate(Q) for v in q}
    alive = set(range(len(P)))
    c = 0
    while alive:
        i = min(alive)
        cp = set(P[i])
        used = {i}
        cq = set(Q[owner_q[min(cp)]])
        while cp != cq:
            extra = cq - cp
            if extra:
                i2 = owner_p[min(extra)]
                cp |= P[i2]
                used.add(i2)
            extra = cp - cq
            if extra:
                cq |= Q[owner_q[min(extra)]]
        alive -= used
        c += 1
    return c


def _ec_delta(groups1, groups2) -> int:
    common = set(groups1) & set(groups2)
    P = [g for g in groups1 if g not in common]
    Q = [g for g in groups2 if g not in common]
    c = common_supervertex_count(P, Q) if P else 0
    return 2 ** (c + len(common) - 1) - 1


def intersect_ec(s1: SuperVertexPartition, s2: SuperVertexPartition) -> int:
    if s1.n != s2.n or s1.k != s2.k:
        raise CountingError("partitions must share n and the number of super vertices")
    return _ec_delta(s1.groups, s2.groups)


def intersect(alg: Algorithm, s1, s2) -> int:
    alg = Algorithm(alg)
    if alg is Algorithm.EC:
        return intersect_ec(s1, s2)
    return intersect_double_greedy(s1, s2, "d2" if alg.d2_family else "sg")


def trace_pair_counts(tr1: AlgorithmTrace, tr2: AlgorithmTrace) -> list[tuple[int, int, int]]:
    """``(|C_t(G')|, |C_t(G'')|, Delta_t)`` for every step ``t = 1..T``.

    Same results as applying :func:`count_state` and :func:`intersect` to
    ``tr.state(t)``, but computed from running totals rather than sets.
    """
    if tr1.algorithm != tr2.algorithm or tr1.n != tr2.n:
        raise CountingError("traces must come from the same algorithm and n")
    if tr1.algorithm is Algorithm.EC:
        return _ec_pair_counts(tr1, tr2)
    n, steps = tr1.n, tr1.num_steps
    d2 = tr1.algorithm.d2_family
    stats = kernels.pair_step_stats(tr1.label_time, tr1.side, tr2.label_time, tr2.side, steps)
    out = []
    for a1, a2, b1, b2, agree, disagree, l in stats.tolist():
        c1 = 2 ** (n - a1 - a2) - (d2 and not (a1 and a2))
        c2 = 2 ** (n - b1 - b2) - (d2 and not (b1 and b2))
        delta = 0
        if disagree == 0:
            delta += _oriented(l, bool(a1 or b1), bool(a2 or b2))
        if agree == 0:
            delta += _oriented(l, bool(a1 or b2), bool(a2 or b1))
        out.append((c1, c2, delta))
    return out


def _ec_pair_counts(tr1, tr2):
    n = tr1.n
    groups = [{v: frozenset([v]) for v in range(n)} for _ in range(2)]
    out = []
    for m1, m2 in zip(tr1.merges.tolist(), tr2.merges.tolist()):
        for g, (x, y) in zip(groups, (m1, m2)):
            g[x] = g[x] | g.pop(y)
        c = 2 ** (len(groups[0]) - 1) - 1
        out.append((c, c, _ec_delta(list(groups[0].values()), list(groups[1].values()))))
    return out
