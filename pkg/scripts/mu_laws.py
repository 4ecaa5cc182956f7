"""Sweep random preferential structures and count (mu-subset)/(mu-PR) failures.

    python scripts/mu_laws.py --structures 1000 --atoms 2 3
"""

import argparse
import random
import time
from dataclasses import dataclass

from prefmodels.logic import subsets
from prefmodels.representation import random_structure
from prefmodels.structures import mu_of_structure


@dataclass
class Config:
    structures: int = 1000
    atoms: tuple[int, ...] = (2, 3)
    max_copies: int = 2
    seed: int = 0


def run(cfg: Config) -> dict:
    rng = random.Random(cfg.seed)
    pairs = subset_fail = pr_fail = 0
    start = time.perf_counter()
    for i in range(cfg.structures):
        n = cfg.atoms[i % len(cfg.atoms)]
        universe = (1 << (1 << n)) - 1
        s = random_structure(rng, universe, cfg.max_copies)
        mu = {x: mu_of_structure(s, x) for x in subsets(universe)}
        for x, mx in mu.items():
            subset_fail += mx & ~x != 0
            for y in subsets(x):
                pairs += 1
                pr_fail += mx & y & ~mu[y] != 0
    return {
        "pairs": pairs,
        "subset_failures": subset_fail,
        "pr_failures": pr_fail,
        "seconds": round(time.perf_counter() - start, 2),
    }


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--structures", type=int, default=Config.structures)
    ap.add_argument("--atoms", type=int, nargs="+", default=list(Config.atoms))
    ap.add_argument("--max-copies", type=int, default=Config.max_copies)
    ap.add_argument("--seed", type=int, default=Config.seed)
    a = ap.parse_args()
    result = run(Config(a.structures, tuple(a.atoms), a.max_copies, a.seed))
    for k, v in result.items():
        print(f"{k}\t{v}")
