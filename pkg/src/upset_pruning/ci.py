"""Brute-force interleaving distance through constrained invertibility.

Between upset-decomposable modules with ``r`` summands each, a morphism
``M -> N(eps)`` is an r x r scalar matrix whose entry ``(l, s)`` may be
nonzero only if ``M_l ⊆ N_s(eps)``. Shift maps are identity matrices, so an
eps-interleaving is a matrix ``X`` on the forward pattern that is invertible
with ``X^-1`` on the backward pattern. For square matrices ``YX = I`` already
gives ``XY = I``, so only one composite needs checking.

Matrices are enumerated exhaustively over F2 or F3. Over F_p the support of
``X^-1`` equals that of ``adj(X) mod p`` whenever ``det X != 0 mod p``, which
lets the whole search run as batched integer determinants.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .distances import DistanceResult, INFINITE, _check_dims
from .modules import Module
from .upsets import minshift

FIELDS = {"f2": 2, "f3": 3}
DEFAULT_MAX_R = 4
_BATCH = 1 << 18


@dataclass(frozen=True)
class Pattern:
    allowed: tuple[tuple[bool, ...], ...]
    eps: Fraction | None = None

    @property
    def rows(self) -> int:
        return len(self.allowed)

    @property
    def cols(self) -> int:
        return len(self.allowed[0]) if self.allowed else 0

    @classmethod
    def of(cls, rows, eps=None) -> "Pattern":
        return cls(tuple(tuple(bool(x) for x in row) for row in rows), eps)


def patterns(M: Module, N: Module, eps) -> tuple[Pattern, Pattern]:
    eps = Fraction(eps)
    if eps < 0:
        raise ValueError("eps must be >= 0")
    _check_dims(M, N)
    if len(M) != len(N) or M.is_zero:
        raise ValueError("patterns need equal, nonzero summand counts")
    fwd = [[minshift(U, V) <= eps for V in N] for U in M]
    bwd = [[minshift(V, U) <= eps for U in M] for V in N]
    return Pattern.of(fwd, eps), Pattern.of(bwd, eps)


def _field_order(field) -> int:
    if isinstance(field, int):
        if field not in FIELDS.values():
            raise ValueError(f"unsupported field order {field}")
        return field
    try:
        return FIELDS[field.lower()]
    except KeyError:
        raise ValueError(f"unsupported field {field!r}; use f2 or f3") from None


def _det(X: np.ndarray) -> np.ndarray:
    # Entries are tiny integers, so rounding the float determinant is exact.
    n = X.shape[-1]
    if n == 0:
        return np.ones(X.shape[0], dtype=np.int64)
    if n == 1:
        return X[:, 0, 0].astype(np.int64)
    return np.rint(np.linalg.det(X.astype(np.float64))).astype(np.int64)


def _adjugate(X: np.ndarray) -> np.ndarray:
    n = X.shape[-1]
    adj = np.empty_like(X, dtype=np.int64)
    idx = list(range(n))
    for i in range(n):
        for j in range(n):
            minor = X[:, [k for k in idx if k != i]][:, :, [k for k in idx if k != j]]
            adj[:, j, i] = (-1) ** (i + j) * _det(minor)
    return adj


def ci_solvable(A: Pattern, B: Pattern, field="f2", max_r: int = DEFAULT_MAX_R) -> bool:
    """Is there ``X`` supported on ``A``, invertible, with ``X^-1`` supported on ``B``?"""
    p = _field_order(field)
    r = A.rows
    if A.cols != r or B.rows != r or B.cols != r:
        raise ValueError("patterns must be square and of equal size")
    if r > max_r:
        raise ValueError(f"r = {r} exceeds the enumeration cap {max_r}")
    if r == 0:
        return True
    if any(not any(row) for row in A.allowed) or any(not any(col) for col in zip(*A.allowed)):
        return False
    cells = [(i, j) for i in range(r) for j in range(r) if A.allowed[i][j]]
    forbidden = ~np.array(B.allowed, dtype=bool)
    values = np.arange(1, p)
    # Enumerate by support: every cell in the support takes a nonzero value.
    for k in range(r, len(cells) + 1):
        for support in itertools.combinations(cells, k):
            rows = {i for i, _ in support}
            cols = {j for _, j in support}
            if len(rows) < r or len(cols) < r:
                continue
            combos = itertools.product(values, repeat=k)
            while True:
                chunk = list(itertools.islice(combos, _BATCH))
                if not chunk:
                    break
                vals = np.array(chunk, dtype=np.int64)
                X = np.zeros((len(vals), r, r), dtype=np.int64)
                for c, (i, j) in enumerate(support):
                    X[:, i, j] = vals[:, c]
                det = _det(X) % p
                ok = det != 0
                if not ok.any():
                    continue
                adj = _adjugate(X[ok]) % p
                if (~((adj != 0) & forbidden).any(axis=(1, 2))).any():
                    return True
    return False


def ci_solvable_2x2(A: Pattern, B: Pattern) -> bool:
    """Closed-form answer for 2 x 2 patterns over any field.

    ``[[a, b], [c, d]]^-1`` is proportional to ``[[d, -b], [-c, a]]``. An
    invertible support contains the diagonal or the anti-diagonal; either one
    alone is realisable, and a larger support only enlarges the inverse.
    """
    (a, b), (c, d) = A.allowed
    (a2, b2), (c2, d2) = B.allowed
    return (a and d and a2 and d2) or (b and c and b2 and c2)


def interleaving_candidates(M: Module, N: Module) -> list[Fraction]:
    cands = {Fraction(0)}
    for U in M:
        for V in N:
            cands.add(max(Fraction(0), minshift(U, V)))
            cands.add(max(Fraction(0), minshift(V, U)))
    return sorted(cands)


def interleaving_distance_bruteforce(M: Module, N: Module, field="f2", max_r: int = DEFAULT_MAX_R) -> DistanceResult:
    _check_dims(M, N)
    if len(M) != len(N):
        return INFINITE
    if M.is_zero:
        return DistanceResult(Fraction(0))
    if len(M) > max_r:
        raise ValueError(f"r = {len(M)} exceeds the enumeration cap {max_r}")
    cands = interleaving_candidates(M, N)
    # Patterns only grow with eps, so solvability is monotone: binary search.
    lo, hi = 0, len(cands) - 1
    if not ci_solvable(*patterns(M, N, cands[hi]), field=field, max_r=max_r):
        return INFINITE
    while lo < hi:
        mid = (lo + hi) // 2
        if ci_solvable(*patterns(M, N, cands[mid]), field=field, max_r=max_r):
            hi = mid
        else:
            lo = mid + 1
    return DistanceResult(cands[lo])
