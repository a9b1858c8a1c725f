"""Exact staircase geometry for finitely generated closed upsets of R^d.

A point is a tuple of :class:`fractions.Fraction`. An :class:`Upset` is the
set of points dominating at least one generator; generators are kept as a
lexicographically sorted antichain so that equal supports compare equal.
Shifting follows the module convention ``U(eps) = U - eps * (1, ..., 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

Point = tuple[Fraction, ...]


class DimensionMismatch(ValueError):
    pass


class EmptyGenerators(ValueError):
    pass


def as_point(coords: Iterable) -> Point:
    return tuple(Fraction(c) for c in coords)


def leq(p: Point, q: Point) -> bool:
    return all(a <= b for a, b in zip(p, q))


def join(p: Point, q: Point) -> Point:
    return tuple(max(a, b) for a, b in zip(p, q))


def _check_dims(points: Sequence[Point]) -> int:
    dims = {len(p) for p in points}
    if len(dims) > 1:
        raise DimensionMismatch(f"points of mixed dimensions {sorted(dims)}")
    (d,) = dims
    if d < 1:
        raise DimensionMismatch("points must have dimension >= 1")
    return d


def antichain_reduce(points: Iterable[Iterable]) -> list[Point]:
    """Minimal elements of ``points``, deduplicated and sorted lexicographically."""
    pts = sorted({as_point(p) for p in points})
    if not pts:
        raise EmptyGenerators("an upset needs at least one generator")
    _check_dims(pts)
    # After a lexicographic sort, anything dominating p comes after p.
    minimal: list[Point] = []
    for p in pts:
        if not any(leq(m, p) for m in minimal):
            minimal.append(p)
    return minimal


@dataclass(frozen=True)
class Upset:
    """Closed upset generated by a finite antichain.

    Build through :meth:`from_points` (or :func:`upset`) so the generator set
    is canonical; the raw constructor trusts its input.
    """

    dim: int
    generators: tuple[Point, ...]

    @classmethod
    def from_points(cls, points: Iterable[Iterable]) -> "Upset":
        gens = antichain_reduce(points)
        return cls(len(gens[0]), tuple(gens))

    def __contains__(self, p) -> bool:
        return member(as_point(p), self)

    def __repr__(self) -> str:
        inner = ", ".join("(" + ",".join(str(c) for c in g) + ")" for g in self.generators)
        return f"<{inner}>"


def upset(*points: Iterable) -> Upset:
    """Shorthand: ``upset((0, 2), (2, 0))``."""
    return Upset.from_points(points)


def _same_dim(d1: int, d2: int) -> None:
    if d1 != d2:
        raise DimensionMismatch(f"dimension {d1} != {d2}")


def member(p: Point, U: Upset) -> bool:
    _same_dim(len(p), U.dim)
    return any(leq(g, p) for g in U.generators)


def shift_upset(U: Upset, eps) -> Upset:
    """Support of ``U(eps)``: every generator moves by ``-eps`` on each axis."""
    eps = Fraction(eps)
    if eps == 0:
        return U
    # Translation preserves both the antichain property and the sort order.
    return Upset(U.dim, tuple(tuple(c - eps for c in g) for g in U.generators))


def subseteq(U: Upset, V: Upset) -> bool:
    _same_dim(U.dim, V.dim)
    return all(member(g, V) for g in U.generators)


def minshift(U: Upset, V: Upset) -> Fraction:
    """Least ``eps`` with ``U ⊆ V(eps)``; attained because upsets are closed.

    ``g`` lies in ``V(eps)`` iff some generator ``h`` has ``h - eps <= g``,
    i.e. ``eps >= max_i (h_i - g_i)``. Every generator of ``U`` must be covered.
    """
    _same_dim(U.dim, V.dim)
    return max(
        min(max(hi - gi for hi, gi in zip(h, g)) for h in V.generators)
        for g in U.generators
    )


def intersect(U: Upset, V: Upset) -> Upset:
    _same_dim(U.dim, V.dim)
    return Upset.from_points(join(g, h) for g in U.generators for h in V.generators)


def intersect_all(upsets: Iterable[Upset]) -> Upset:
    """Left fold of :func:`intersect`; reduces to an antichain after each step."""
    return reduce(intersect, upsets)


def upset_equal(U: Upset, V: Upset) -> bool:
    _same_dim(U.dim, V.dim)
    return U.generators == V.generators
