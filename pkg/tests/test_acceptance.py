"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""
import random
import time
from fractions import Fraction as F

import pytest

from upset_pruning.ci import interleaving_distance_bruteforce
from upset_pruning.distances import (
    DEFAULT_TOL,
    bottleneck_bruteforce,
    bottleneck_distance,
    inf_refinement,
    pruning_distance,
    refinement_all_delta,
)
from upset_pruning.modules import iso_check, random_module, sharpness_pair
from upset_pruning.pruning import graph_distance, prune, prune_iterative_trace, reach_bfs
from upset_pruning.upsets import minshift, subseteq

TOL = DEFAULT_TOL  # 1/10^9


@pytest.fixture
def report(capsys):
    def emit(n, ok, msg, elapsed):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {n}: {msg} ({elapsed:.2f}s)")

    return emit


def pruning_corpus():
    """200 modules: d = 2, r in 1..5, 1..4 generators per summand, coords in [-16, 16]."""
    return [random_module(10_000 + k, 1 + k % 5, 2, 1 + (k // 5) % 4, 16) for k in range(200)]


def random_pair(seed, max_r, coord_bound=16, r=None):
    rng = random.Random(seed)
    r = r or rng.randint(1, max_r)
    gens = rng.randint(1, 4)
    return r, random_module(2 * seed, r, 2, gens, coord_bound), random_module(2 * seed + 1, r, 2, gens, coord_bound)


def test_criterion_1_sharpness(report):
    t0 = time.perf_counter()
    failures = []
    for r in (1, 2, 3, 4):
        for d in (1, 2, 3):
            for alpha in (F(1, 2), F(1), F(3)):
                M, N = sharpness_pair(r, d, alpha)
                target = (2 * r - 1) * alpha
                dp = pruning_distance(M, N, mode="exact")
                checks = {
                    "prune": iso_check(prune(M, alpha), N),
                    "dP": dp.exact and dp.value == alpha,
                    "dB": bottleneck_distance(M, N).value == target,
                }
                if r <= 3:
                    checks["dI"] = interleaving_distance_bruteforce(M, N).value == target
                failures += [(r, d, alpha, k) for k, ok in checks.items() if not ok]
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 10
    report(1, ok, f"sharpness grid 36 cases, failures={failures}", elapsed)
    assert not failures
    assert elapsed < 10


def test_criterion_2_closed_form_vs_fixed_point(report):
    t0 = time.perf_counter()
    rng = random.Random(2)
    bad = []
    for k, M in enumerate(pruning_corpus()):
        alpha = F(rng.randint(0, 48), rng.choice([1, 2, 4]))
        P, steps = prune_iterative_trace(M, alpha)
        if P != prune(M, alpha) or steps > len(M) - 1:
            bad.append(k)
    elapsed = time.perf_counter() - t0
    report(2, not bad and elapsed < 30, f"200 modules, mismatches={bad}", elapsed)
    assert not bad
    assert elapsed < 30


def test_criterion_3_main_inequalities(report):
    t0 = time.perf_counter()
    lower, upper = [], []
    for seed in range(500):
        r, M, N = random_pair(30_000 + seed, 4)
        dp = pruning_distance(M, N, tol=TOL).value
        db = bottleneck_distance(M, N).value
        if not dp - TOL <= db:
            lower.append(seed)
        if not db <= (2 * r - 1) * (dp + TOL):
            upper.append(seed)
    elapsed = time.perf_counter() - t0
    ok = not lower and not upper and elapsed < 300
    report(3, ok, f"500 pairs, d_P<=d_B violations={lower}, d_B<=(2r-1)d_P violations={upper}", elapsed)
    assert not lower and not upper
    assert elapsed < 300


def test_criterion_4_graph_bound(report):
    t0 = time.perf_counter()
    rng = random.Random(4)
    bad = []
    for k in range(500):
        r = rng.randint(1, 12)
        p = rng.random()
        adj = [[rng.random() < p for _ in range(r)] for _ in range(r)]
        A = set(rng.sample(range(r), rng.randint(1, r)))
        B = set().union(*(reach_bfs(adj)[a] for a in A))
        if graph_distance(adj, A, B) > len(B) - len(A):
            bad.append(k)
    elapsed = time.perf_counter() - t0
    report(4, not bad and elapsed < 5, f"500 digraphs, violations={bad}", elapsed)
    assert not bad
    assert elapsed < 5


def test_criterion_5_identity_and_monotonicity(report):
    t0 = time.perf_counter()
    rng = random.Random(5)
    bad_identity, bad_mono = [], []
    for k, M in enumerate(pruning_corpus()):
        if not iso_check(prune(M, 0), M):
            bad_identity.append(k)
        for _ in range(3):
            a = F(rng.randint(0, 40), 4)
            b = a + F(rng.randint(0, 40), 4)
            if not all(subseteq(U, V) for U, V in zip(prune(M, b), prune(M, a))):
                bad_mono.append(k)
    elapsed = time.perf_counter() - t0
    ok = not bad_identity and not bad_mono
    report(5, ok, f"Pru_0 violations={bad_identity}, monotonicity violations={bad_mono}", elapsed)
    assert ok


def test_criterion_6_pseudometric(report):
    t0 = time.perf_counter()
    asym, tri = [], []
    for seed in range(100):
        rng = random.Random(60_000 + seed)
        r = rng.randint(1, 4)
        M, N, O = (random_module(3 * (60_000 + seed) + i, r, 2, rng.randint(1, 4), 16) for i in range(3))
        mn, nm = pruning_distance(M, N), pruning_distance(N, M)
        if mn != nm:
            asym.append(seed)
        mo, no = pruning_distance(M, O).value, pruning_distance(N, O).value
        if not mo <= mn.value + no + 3 * TOL:
            tri.append(seed)
    elapsed = time.perf_counter() - t0
    ok = not asym and not tri
    report(6, ok, f"100 triples, asymmetric={asym}, triangle violations={tri}", elapsed)
    assert ok


def test_criterion_7_conjecture_evidence(report):
    t0 = time.perf_counter()
    di_le_db_bad, dp_le_di_bad = [], []
    for seed in range(200):
        r, M, N = random_pair(70_000 + seed, 3)
        di = interleaving_distance_bruteforce(M, N).value
        db = bottleneck_distance(M, N).value
        dp = pruning_distance(M, N, tol=TOL).value
        if not di <= db:
            di_le_db_bad.append(seed)
        if not dp <= di + TOL:
            dp_le_di_bad.append(seed)
    elapsed = time.perf_counter() - t0
    report(
        7,
        not di_le_db_bad,
        f"200 pairs: d_I<=d_B holds {200 - len(di_le_db_bad)}/200; "
        f"d_P<=d_I+tol holds {200 - len(dp_le_di_bad)}/200 (reported only; exceptions at {dp_le_di_bad})",
        elapsed,
    )
    assert not di_le_db_bad


def test_criterion_8_bottleneck_oracle(report):
    t0 = time.perf_counter()
    bad = []
    for seed in range(200):
        _, M, N = random_pair(80_000 + seed, 6)
        if bottleneck_distance(M, N).value != bottleneck_bruteforce(M, N):
            bad.append(seed)
    elapsed = time.perf_counter() - t0
    report(8, not bad and elapsed < 30, f"200 pairs, mismatches={bad}", elapsed)
    assert not bad
    assert elapsed < 30


def naive_phi(M, N, eps, samples):
    return all(
        inf_refinement(prune(M, eps + d), prune(N, d)) and inf_refinement(prune(N, eps + d), prune(M, d))
        for d in samples
    )


def test_criterion_9_event_decomposition(report):
    # Integer coordinates in [-4, 4] and eps in (1/2)Z put every graph change on
    # (1/2)Z with max event <= 8, so 41 evenly spaced samples on [0, max + 2]
    # (spacing <= 1/4) land in every structural interval.
    t0 = time.perf_counter()
    rng = random.Random(9)
    bad, n_true = [], 0
    for seed in range(100):
        r, M, N = random_pair(90_000 + seed, 3, coord_bound=4)
        eps = F(rng.randint(0, 16), 2)
        halves = [minshift(U, V) / 2 for P in (M, N) for U in P for V in P]
        top = max([F(0)] + [h for h in halves if h > 0] + [h - eps for h in halves if h - eps > 0])
        samples = [(top + 2) * k / 40 for k in range(41)]
        got = refinement_all_delta(M, N, eps)
        n_true += got
        if got != naive_phi(M, N, eps, samples):
            bad.append(seed)
    elapsed = time.perf_counter() - t0
    report(9, not bad, f"100 pairs ({n_true} true, {100 - n_true} false), disagreements={bad}", elapsed)
    assert not bad
