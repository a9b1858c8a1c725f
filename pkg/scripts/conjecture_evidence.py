"""Random-pair statistics for d_P, d_I and d_B.

Reports how often d_P <= d_I holds, the worst observed d_B / d_P ratio
against the 2r - 1 bound, and whether F2 and F3 give the same d_I.

    python scripts/conjecture_evidence.py --pairs 200 --max-r 3
"""
import argparse
import random
import time
from dataclasses import asdict, dataclass
from fractions import Fraction

from upset_pruning import (
    DEFAULT_TOL,
    bottleneck_distance,
    interleaving_distance_bruteforce,
    pruning_distance,
    random_module,
)


@dataclass
class Config:
    pairs: int = 200
    max_r: int = 3
    coord_bound: int = 16
    max_gens: int = 4
    seed: int = 0
    fields: tuple = ("f2", "f3")


def run(cfg: Config):
    rng = random.Random(cfg.seed)
    stats = {"dp_le_di": 0, "di_le_db": 0, "field_disagreements": [], "worst_ratio": {}}
    for k in range(cfg.pairs):
        r = rng.randint(1, cfg.max_r)
        gens = rng.randint(1, cfg.max_gens)
        M = random_module(rng.getrandbits(32), r, 2, gens, cfg.coord_bound)
        N = random_module(rng.getrandbits(32), r, 2, gens, cfg.coord_bound)
        dp = pruning_distance(M, N, mode="exact").value
        db = bottleneck_distance(M, N).value
        dis = {f: interleaving_distance_bruteforce(M, N, f).value for f in cfg.fields}
        di = dis[cfg.fields[0]]
        if len(set(dis.values())) > 1:
            stats["field_disagreements"].append((k, {f: str(v) for f, v in dis.items()}))
        stats["dp_le_di"] += dp <= di + DEFAULT_TOL
        stats["di_le_db"] += di <= db
        if dp > 0:
            ratio = Fraction(db) / dp
            prev = stats["worst_ratio"].get(r)
            if prev is None or ratio > prev:
                stats["worst_ratio"][r] = ratio
    return stats


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, value in asdict(Config()).items():
        if name != "fields":
            parser.add_argument(f"--{name.replace('_', '-')}", type=type(value), default=value)
    args = parser.parse_args()
    cfg = Config(**{k: v for k, v in vars(args).items()})
    t0 = time.perf_counter()
    stats = run(cfg)
    print(f"config: {cfg}")
    print(f"d_P <= d_I + tol : {stats['dp_le_di']}/{cfg.pairs}")
    print(f"d_I <= d_B       : {stats['di_le_db']}/{cfg.pairs}")
    for r, ratio in sorted(stats["worst_ratio"].items()):
        print(f"r={r}: max d_B/d_P = {ratio} (bound {2 * r - 1})")
    print(f"F2/F3 disagreements: {stats['field_disagreements'] or 'none'}")
    print(f"elapsed {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
