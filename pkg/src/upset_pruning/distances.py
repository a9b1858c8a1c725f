"""Pruning, bottleneck and pairwise interleaving distances.

Evaluating the pruning distance needs the predicate

    phi(eps) = for all delta >= 0:
        Pru_{eps+delta}(M) is an inf-refinement of Pru_delta(N), and
        Pru_{eps+delta}(N) is an inf-refinement of Pru_delta(M).

For upset-decomposable modules an inf-refinement is a summand bijection
with containment. Writing ``Pru_a(M)_l = A_l(-a)`` with ``A_l`` the
intersection over the reach set of ``l`` in ``G(M, a)``, the containment
``A_l(-eps-delta) ⊆ B_s(-delta)`` is equivalent to ``A_l ⊆ B_s(eps)``:
``delta`` cancels. So phi only sees ``delta`` through the four graphs
``G(M, eps+delta)``, ``G(N, delta)``, ``G(N, eps+delta)``, ``G(M, delta)``,
each piecewise constant with breakpoints at half-thresholds. Checking every
breakpoint, every midpoint between consecutive breakpoints and one point
past the last one therefore decides the universal quantifier exactly.

phi is monotone in ``eps`` (prunings shrink as the parameter grows) and
closed (edges use non-strict comparisons), so its minimum exists.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import inf
from typing import Literal, Sequence

from .modules import Module, supdim
from .pruning import PruningProfile
from .upsets import DimensionMismatch, Upset, minshift, subseteq

DEFAULT_TOL = Fraction(1, 10**9)


@dataclass(frozen=True)
class DistanceResult:
    value: Fraction | float
    exact: bool = True
    bracket: tuple[Fraction, Fraction] | None = None

    @property
    def is_infinite(self) -> bool:
        return self.value == inf

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        if self.exact:
            return str(self.value)
        lo, hi = self.bracket
        return f"≈ {self.value} [{lo}, {hi}]"


INFINITE = DistanceResult(inf)


def _check_dims(M: Module, N: Module) -> None:
    if not M.is_zero and not N.is_zero and M.dim != N.dim:
        raise DimensionMismatch(f"dimension {M.dim} != {N.dim}")


def perfect_matching(allowed: Sequence[Sequence[bool]]) -> list[int] | None:
    """Row-to-column perfect matching of a square boolean matrix, or None.

    Kuhn's augmenting paths; ``allowed[i][j]`` permits matching row i to column j.
    """
    n = len(allowed)
    col_owner = [-1] * n

    def augment(i, seen):
        for j in range(n):
            if allowed[i][j] and not seen[j]:
                seen[j] = True
                if col_owner[j] < 0 or augment(col_owner[j], seen):
                    col_owner[j] = i
                    return True
        return False

    for i in range(n):
        if not augment(i, [False] * n):
            return None
    match = [0] * n
    for j, i in enumerate(col_owner):
        match[i] = j
    return match


def bottleneck_assignment(cost: Sequence[Sequence]) -> Fraction:
    """Minimum over permutations of the maximum matched cost (square, nonempty)."""
    values = sorted({c for row in cost for c in row})
    lo, hi = 0, len(values) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if perfect_matching([[c <= values[mid] for c in row] for row in cost]) is not None:
            hi = mid
        else:
            lo = mid + 1
    return values[lo]


def pair_interleaving(U: Upset, V: Upset) -> Fraction:
    """Interleaving distance of two upset modules.

    Morphisms between upset modules are scalars supported on containment, so
    an eps-interleaving exists iff ``U ⊆ V(eps)`` and ``V ⊆ U(eps)``.
    """
    return max(Fraction(0), minshift(U, V), minshift(V, U))


def inf_refinement(P: Module, M: Module) -> bool:
    """Whether ``P`` is an inf-refinement of ``M``."""
    _check_dims(P, M)
    if supdim(P) != supdim(M):
        return False
    if P.is_zero:
        return True
    allowed = [[subseteq(p, m) for m in M] for p in P]
    return perfect_matching(allowed) is not None


@lru_cache(maxsize=65536)
def _refinement_cost(A: tuple[Upset, ...], B: tuple[Upset, ...]) -> Fraction:
    # Least eps with a bijection l -> s satisfying A_l ⊆ B_s(eps).
    return bottleneck_assignment([[minshift(a, b) for b in B] for a in A])


@lru_cache(maxsize=1024)
def profile(M: Module) -> PruningProfile:
    return PruningProfile(M)


def delta_events(M: Module, N: Module, eps) -> list[Fraction]:
    """Sorted points where one of the four graphs in phi(eps) can change."""
    eps = Fraction(eps)
    events = {Fraction(0)}
    for b in profile(M).breaks + profile(N).breaks:
        events.add(b)
        if b - eps >= 0:
            events.add(b - eps)
    return sorted(events)


def _phi_at(PM: PruningProfile, PN: PruningProfile, eps: Fraction, delta: Fraction) -> bool:
    return (
        _refinement_cost(PM.unshifted(eps + delta), PN.unshifted(delta)) <= eps
        and _refinement_cost(PN.unshifted(eps + delta), PM.unshifted(delta)) <= eps
    )


def refinement_all_delta(M: Module, N: Module, eps) -> bool:
    eps = Fraction(eps)
    if eps < 0:
        raise ValueError(f"eps must be >= 0, got {eps}")
    _check_dims(M, N)
    if len(M) != len(N):
        return False
    if M.is_zero:
        return True
    PM, PN = profile(M), profile(N)
    events = delta_events(M, N, eps)
    probes = events + [(a + b) / 2 for a, b in zip(events, events[1:])] + [events[-1] + 1]
    return all(_phi_at(PM, PN, eps, d) for d in probes)


def _candidates(M: Module, N: Module) -> list[Fraction]:
    PM, PN = profile(M), profile(N)
    pieces_M = [PM.piece(k) for k in range(len(PM.breaks))]
    pieces_N = [PN.piece(k) for k in range(len(PN.breaks))]
    uM = {U for piece in pieces_M for U in piece}
    uN = {U for piece in pieces_N for U in piece}
    cands = {Fraction(0)}
    for a in uM:
        for b in uN:
            cands.add(max(Fraction(0), minshift(a, b)))
            cands.add(max(Fraction(0), minshift(b, a)))
    halves = set(PM.breaks) | set(PN.breaks)
    cands.update(abs(s - t) for s in halves for t in halves)
    return sorted(cands)


def pruning_distance(
    M: Module,
    N: Module,
    tol=DEFAULT_TOL,
    mode: Literal["bisect", "exact"] = "bisect",
) -> DistanceResult:
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if mode not in ("bisect", "exact"):
        raise ValueError(f"unknown mode {mode!r}")
    _check_dims(M, N)
    if supdim(M) != supdim(N):
        return INFINITE
    if refinement_all_delta(M, N, 0):
        return DistanceResult(Fraction(0))

    lo, hi = Fraction(0), Fraction(1)
    while not refinement_all_delta(M, N, hi):
        lo, hi = hi, 2 * hi
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if refinement_all_delta(M, N, mid):
            hi = mid
        else:
            lo = mid
    approx = DistanceResult((lo + hi) / 2, exact=False, bracket=(lo, hi))
    if mode == "bisect":
        return approx

    for s in _candidates(M, N):
        if s <= lo or s > hi:
            continue
        if refinement_all_delta(M, N, s):
            if s - tol < 0 or not refinement_all_delta(M, N, s - tol):
                return DistanceResult(s)
            break
    return approx


def bottleneck_distance(M: Module, N: Module) -> DistanceResult:
    _check_dims(M, N)
    if len(M) != len(N):
        return INFINITE
    if M.is_zero:
        return DistanceResult(Fraction(0))
    cost = [[pair_interleaving(U, V) for V in N] for U in M]
    return DistanceResult(bottleneck_assignment(cost))


def bottleneck_bruteforce(M: Module, N: Module, max_r: int = 7):
    if len(M) != len(N):
        raise ValueError("summand counts differ")
    if len(M) > max_r:
        raise ValueError(f"r = {len(M)} exceeds the brute-force cap {max_r}")
    if M.is_zero:
        return Fraction(0)
    cost = [[pair_interleaving(U, V) for V in N] for U in M]
    r = len(M)
    return min(max(cost[i][p[i]] for i in range(r)) for p in itertools.permutations(range(r)))
