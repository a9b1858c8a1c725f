from fractions import Fraction

from hypothesis import settings, strategies as st

from upset_pruning.modules import Module
from upset_pruning.upsets import Upset

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_rationals = st.builds(Fraction, st.integers(-12, 12), st.sampled_from([1, 2, 3]))


def points(d, coords=small_rationals):
    return st.tuples(*[coords] * d)


@st.composite
def upsets(draw, d=2, max_gens=4, coords=small_rationals):
    pts = draw(st.lists(points(d, coords), min_size=1, max_size=max_gens))
    return Upset.from_points(pts)


@st.composite
def modules(draw, d=2, min_r=1, max_r=4, max_gens=3):
    r = draw(st.integers(min_r, max_r))
    return Module(d, tuple(draw(upsets(d, max_gens)) for _ in range(r)))


def shift_candidates(U, V):
    """Every value ``h_i - g_i``; the least containment shift is one of them."""
    return sorted({h[i] - g[i] for g in U.generators for h in V.generators for i in range(U.dim)})
