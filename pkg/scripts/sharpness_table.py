"""Table of d_P, d_B and d_I on the staircase family where d_B = (2r - 1) d_P."""
import argparse
from dataclasses import dataclass, field
from fractions import Fraction

from upset_pruning import (
    bottleneck_distance,
    interleaving_distance_bruteforce,
    pruning_distance,
    sharpness_pair,
)


@dataclass
class Config:
    rs: list = field(default_factory=lambda: [1, 2, 3, 4, 5])
    dims: list = field(default_factory=lambda: [1, 2, 3])
    alphas: list = field(default_factory=lambda: [Fraction(1, 2), Fraction(1), Fraction(3)])
    max_r_interleaving: int = 3


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-r", type=int, default=5)
    args = parser.parse_args()
    cfg = Config(rs=list(range(1, args.max_r + 1)))
    print(f"{'r':>2} {'d':>2} {'alpha':>6} {'d_P':>6} {'d_B':>6} {'d_I':>6} {'d_B/d_P':>8}")
    for r in cfg.rs:
        for d in cfg.dims:
            for a in cfg.alphas:
                M, N = sharpness_pair(r, d, a)
                dp = pruning_distance(M, N, mode="exact").value
                db = bottleneck_distance(M, N).value
                di = (interleaving_distance_bruteforce(M, N).value
                      if r <= cfg.max_r_interleaving else "-")
                print(f"{r:>2} {d:>2} {str(a):>6} {str(dp):>6} {str(db):>6} {str(di):>6} {str(db / dp):>8}")


if __name__ == "__main__":
    main()
