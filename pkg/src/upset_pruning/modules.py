"""Upset-decomposable persistence modules.

A :class:`Module` is a finite direct sum of upset modules, stored as the
ordered tuple of their supports. Order matters for index-wise operations
(pruning keeps summand ``l`` at position ``l``); isomorphism ignores it.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable

from .upsets import DimensionMismatch, Point, Upset, join, shift_upset


@dataclass(frozen=True)
class Module:
    dim: int
    summands: tuple[Upset, ...] = ()

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        object.__setattr__(self, "summands", tuple(self.summands))
        for U in self.summands:
            if U.dim != self.dim:
                raise DimensionMismatch(f"summand of dim {U.dim} in a dim-{self.dim} module")

    @classmethod
    def of(cls, summands: Iterable[Upset], dim: int | None = None) -> "Module":
        summands = tuple(summands)
        if dim is None:
            if not summands:
                raise ValueError("dim is required for the zero module")
            dim = summands[0].dim
        return cls(dim, summands)

    def __len__(self) -> int:
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def __getitem__(self, i) -> Upset:
        return self.summands[i]

    @property
    def is_zero(self) -> bool:
        return not self.summands

    def canonical(self) -> tuple[Upset, ...]:
        return tuple(sorted(self.summands, key=lambda U: U.generators))

    def permuted(self, order: Iterable[int]) -> "Module":
        return Module(self.dim, tuple(self.summands[i] for i in order))


def supdim(M: Module) -> int:
    """Maximal pointwise dimension.

    Equal to the number of summands, since the join of one generator per
    summand lies in every support (see :func:`supdim_witness`).
    """
    return len(M.summands)


def supdim_witness(M: Module) -> Point | None:
    if M.is_zero:
        return None
    return reduce(join, (U.generators[0] for U in M.summands))


def module_shift(M: Module, eps) -> Module:
    eps = Fraction(eps)
    return Module(M.dim, tuple(shift_upset(U, eps) for U in M.summands))


def iso_check(M: Module, N: Module) -> bool:
    if M.is_zero or N.is_zero:
        return M.is_zero and N.is_zero
    if M.dim != N.dim:
        raise DimensionMismatch(f"dimension {M.dim} != {N.dim}")
    return M.canonical() == N.canonical()


def random_module(seed: int, r: int, d: int, gens_per_summand: int, coord_bound: int) -> Module:
    """Deterministic random module.

    Uses ``random.Random(seed)`` (Mersenne Twister). Coordinates are drawn
    with ``randint(-coord_bound, coord_bound)`` in summand, generator,
    coordinate order; each summand's points are then reduced to an antichain.
    """
    if r < 0 or d < 1 or gens_per_summand < 1 or coord_bound < 1:
        raise ValueError(
            f"invalid bounds r={r} d={d} gens_per_summand={gens_per_summand} coord_bound={coord_bound}"
        )
    rng = random.Random(seed)
    summands = []
    for _ in range(r):
        pts = [
            tuple(rng.randint(-coord_bound, coord_bound) for _ in range(d))
            for _ in range(gens_per_summand)
        ]
        summands.append(Upset.from_points(pts))
    return Module(d, tuple(summands))


def sharpness_pair(r: int, d: int, alpha) -> tuple[Module, Module]:
    """Modules whose bottleneck distance is exactly ``2r - 1`` times their pruning distance.

    ``M_i`` is generated by ``(2 i alpha, ...)`` for ``i = 1..r`` and every
    ``N_i`` by ``((2r + 1) alpha, ...)``.
    """
    alpha = Fraction(alpha)
    M = Module(d, tuple(Upset(d, ((2 * i * alpha,) * d,)) for i in range(1, r + 1)))
    top = (2 * r + 1) * alpha
    N = Module(d, tuple(Upset(d, ((top,) * d,)) for _ in range(r)))
    return M, N
