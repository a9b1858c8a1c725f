"""Built-in verification corpus behind ``upset-pruning verify``."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, NamedTuple

from .ci import interleaving_distance_bruteforce
from .distances import (
    DEFAULT_TOL,
    bottleneck_bruteforce,
    bottleneck_distance,
    inf_refinement,
    pruning_distance,
    refinement_all_delta,
)
from .modules import iso_check, random_module, sharpness_pair, supdim
from .pruning import prune


class Check(NamedTuple):
    name: str
    ok: bool
    detail: str


def _sharpness_checks(r: int, d: int, alpha: Fraction) -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
    M, N = sharpness_pair(r, d, alpha)
    tag = f"r={r} d={d} alpha={alpha}"
    target = (2 * r - 1) * alpha

    def dp():
        res = pruning_distance(M, N, mode="exact")
        return res.exact and res.value == alpha, str(res)

    def db():
        res = bottleneck_distance(M, N)
        return res.value == target, str(res)

    def di():
        res = interleaving_distance_bruteforce(M, N)
        return res.value == target, str(res)

    checks = [
        (f"supdim = r [{tag}]", lambda: (supdim(M) == r, str(supdim(M)))),
        (f"Pru_alpha(M) = N [{tag}]", lambda: (iso_check(prune(M, alpha), N), "")),
        (f"Pru_0(M) = M [{tag}]", lambda: (iso_check(prune(M, 0), M), "")),
        (f"Pru_alpha(M) refines N [{tag}]", lambda: (inf_refinement(prune(M, alpha), N), "")),
        (f"N refines M [{tag}]", lambda: (inf_refinement(N, M), "")),
        (f"Pru_alpha/2(M) does not refine N [{tag}]",
         lambda: (not inf_refinement(prune(M, alpha / 2), N), "")),
        (f"phi(alpha) holds [{tag}]", lambda: (refinement_all_delta(M, N, alpha), "")),
        (f"phi(alpha/2) fails [{tag}]", lambda: (not refinement_all_delta(M, N, alpha / 2), "")),
        (f"d_P = alpha [{tag}]", dp),
        (f"d_B = (2r-1) alpha [{tag}]", db),
    ]
    if r <= 3:
        checks.append((f"d_I = (2r-1) alpha [{tag}]", di))
    if r == 3:
        checks.append((f"brute-force d_B = 5 alpha [{tag}]",
                       lambda: (bottleneck_bruteforce(M, N) == 5 * alpha, "")))
    return checks


def _inequality_checks(n_pairs: int = 40, seed: int = 2024):
    def run():
        bad = []
        for k in range(n_pairs):
            r = 1 + k % 3
            M = random_module(seed + 2 * k, r, 2, 3, 8)
            N = random_module(seed + 2 * k + 1, r, 2, 3, 8)
            dp = pruning_distance(M, N)
            lo, hi = dp.bracket if dp.bracket else (dp.value, dp.value)
            db = bottleneck_distance(M, N).value
            if not (lo - DEFAULT_TOL <= db <= (2 * r - 1) * (hi + DEFAULT_TOL)):
                bad.append(k)
        return not bad, f"{n_pairs} pairs, violations at {bad}" if bad else f"{n_pairs} pairs"

    return [("d_P <= d_B <= (2r-1) d_P on random pairs", run)]


def _mismatch_checks():
    M, _ = sharpness_pair(2, 2, 1)
    N, _ = sharpness_pair(3, 2, 1)
    return [
        ("d_P = inf when supdims differ", lambda: (pruning_distance(M, N).is_infinite, "")),
        ("d_B = inf when supdims differ", lambda: (bottleneck_distance(M, N).is_infinite, "")),
    ]


def all_checks():
    checks = []
    for r, d, alpha in [(1, 2, Fraction(1)), (2, 2, Fraction(1)), (3, 1, Fraction(1, 2)),
                        (3, 3, Fraction(3)), (4, 2, Fraction(1))]:
        checks += _sharpness_checks(r, d, alpha)
    checks += _mismatch_checks()
    checks += _inequality_checks()
    return checks


def run_checks() -> list[Check]:
    results = []
    for name, fn in all_checks():
        try:
            ok, detail = fn()
        except Exception as e:  # a crash is a failed check, not an aborted run
            ok, detail = False, f"{type(e).__name__}: {e}"
        results.append(Check(name, bool(ok), detail))
    return results
