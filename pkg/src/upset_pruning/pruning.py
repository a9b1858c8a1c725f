"""Shift-containment digraph and the pruning of upset-decomposable modules.

For ``alpha >= 0`` the digraph ``G(M, alpha)`` has an edge ``i -> j`` when
``M_i ⊆ M_j(2 alpha)``. The ``alpha``-pruning keeps summand ``l`` as the
intersection of every summand reachable from ``l``, shifted by ``-alpha``.
Because shift maps of upset modules are injective, the kernel part of the
pruning pair is always zero, so no quotient is ever taken.
"""
from __future__ import annotations

import bisect
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import inf

from .modules import Module
from .upsets import Upset, intersect_all, minshift, shift_upset, subseteq, upset_equal


@dataclass(frozen=True)
class ShiftGraph:
    r: int
    thresholds: tuple[tuple[Fraction, ...], ...]
    alpha: Fraction
    adjacency: tuple[tuple[bool, ...], ...]
    reach: tuple[frozenset[int], ...]

    def edges(self):
        for i in range(self.r):
            for j in range(self.r):
                if self.adjacency[i][j]:
                    yield i, j


@lru_cache(maxsize=4096)
def threshold_matrix(M: Module) -> tuple[tuple[Fraction, ...], ...]:
    """``t[i][j] = minshift(M_i, M_j)``: edge ``i -> j`` exists iff ``t[i][j] <= 2 alpha``."""
    return tuple(tuple(minshift(U, V) for V in M.summands) for U in M.summands)


def reach_bfs(adjacency) -> tuple[frozenset[int], ...]:
    r = len(adjacency)
    out = []
    for s in range(r):
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in range(r):
                if adjacency[u][v] and v not in seen:
                    seen.add(v)
                    queue.append(v)
        out.append(frozenset(seen))
    return tuple(out)


def reach_warshall(adjacency) -> tuple[frozenset[int], ...]:
    r = len(adjacency)
    c = [[i == j or bool(adjacency[i][j]) for j in range(r)] for i in range(r)]
    for k in range(r):
        for i in range(r):
            if c[i][k]:
                ck = c[k]
                ci = c[i]
                for j in range(r):
                    if ck[j]:
                        ci[j] = True
    return tuple(frozenset(j for j in range(r) if c[i][j]) for i in range(r))


def _check_alpha(alpha) -> Fraction:
    alpha = Fraction(alpha)
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    return alpha


def build_graph(M: Module, alpha, cross_check: bool = __debug__) -> ShiftGraph:
    alpha = _check_alpha(alpha)
    if M.is_zero:
        raise ValueError("the shift graph of the zero module is empty")
    t = threshold_matrix(M)
    adj = tuple(tuple(x <= 2 * alpha for x in row) for row in t)
    reach = reach_bfs(adj)
    if cross_check:
        closure = reach_warshall(adj)
        if closure != reach:
            raise AssertionError(f"reachability disagreement: {reach} vs {closure}")
    return ShiftGraph(len(M), t, alpha, adj, reach)


def graph_distance(adjacency, A, B) -> int | float:
    """``max_{b in B} min_{a in A}`` shortest-path length, ``inf`` if some ``b`` is unreachable.

    ``adjacency`` may be a :class:`ShiftGraph` or a square boolean matrix.
    """
    if isinstance(adjacency, ShiftGraph):
        adjacency = adjacency.adjacency
    A = set(A)
    if not A:
        raise ValueError("source set A must be nonempty")
    r = len(adjacency)
    dist = {a: 0 for a in A}
    queue = deque(A)
    while queue:
        u = queue.popleft()
        for v in range(r):
            if adjacency[u][v] and v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return max((dist.get(b, inf) for b in B), default=0)


def reach_intersections(M: Module, reach) -> tuple[Upset, ...]:
    """Un-shifted pruned summands: ``⋂_{j in reach[l]} M_j`` in increasing ``j``."""
    return tuple(intersect_all(M.summands[j] for j in sorted(J)) for J in reach)


def prune(M: Module, alpha) -> Module:
    alpha = _check_alpha(alpha)
    if M.is_zero:
        return M
    G = build_graph(M, alpha)
    return Module(M.dim, tuple(shift_upset(U, -alpha) for U in reach_intersections(M, G.reach)))


def prune_iterative_trace(M: Module, alpha) -> tuple[Module, int]:
    """Pruning by iterating the one-step preimage map to its fixed point.

    Independent of :func:`prune`: edges are tested by direct containment and
    no reachability set is formed. Summand ``l`` of the next iterate is the
    intersection of the current summands at the out-neighbours of ``l``
    (``l`` included). Returns the pruning and the number of steps that
    changed something.
    """
    alpha = _check_alpha(alpha)
    if M.is_zero:
        return M, 0
    r = len(M)
    nbrs = [
        [j for j in range(r) if j == i or subseteq(M[i], shift_upset(M[j], 2 * alpha))]
        for i in range(r)
    ]
    cur = list(M.summands)
    steps = 0
    while True:
        nxt = [intersect_all(cur[j] for j in nbrs[i]) for i in range(r)]
        if all(upset_equal(a, b) for a, b in zip(cur, nxt)):
            break
        cur = nxt
        steps += 1
    return Module(M.dim, tuple(shift_upset(U, -alpha) for U in cur)), steps


def prune_iterative(M: Module, alpha) -> Module:
    return prune_iterative_trace(M, alpha)[0]


class PruningProfile:
    """Pruning of one module as a piecewise-constant function of ``alpha``.

    The graph ``G(M, alpha)`` only changes when ``2 alpha`` crosses a
    threshold, so the un-shifted pruned summands are constant on each
    ``[breaks[k], breaks[k+1])``. ``Pru_alpha(M)`` is piece ``k`` shifted by
    ``-alpha``.
    """

    def __init__(self, M: Module):
        self.module = M
        t = threshold_matrix(M)
        self.breaks: list[Fraction] = sorted(
            {Fraction(0)} | {x / 2 for row in t for x in row if x > 0}
        )
        self._pieces: dict[int, tuple[Upset, ...]] = {}

    def index(self, alpha) -> int:
        return bisect.bisect_right(self.breaks, Fraction(alpha)) - 1

    def piece(self, k: int) -> tuple[Upset, ...]:
        if k not in self._pieces:
            G = build_graph(self.module, self.breaks[k], cross_check=False)
            self._pieces[k] = reach_intersections(self.module, G.reach)
        return self._pieces[k]

    def unshifted(self, alpha) -> tuple[Upset, ...]:
        return self.piece(self.index(alpha))
