"""Rank-one and rank-two traces of iterated brackets of tripods."""

import argparse
import random
import time
from dataclasses import dataclass

from jtrace.traces import random_tripods, targeted_order6_family, vanishing_check


@dataclass
class Config:
    genus: int = 4
    trials: int = 20
    max_order: int = 5
    targeted: int = 10
    seed: int = 0


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    for k in range(2, cfg.max_order + 1):
        t0 = time.perf_counter()
        ok = nontrivial = 0
        for _ in range(cfg.trials):
            r = vanishing_check(random_tripods(k, cfg.genus, rng))
            ok += r["vanishes"]
            nontrivial += r["rank2_raw_size"] > 0
        print(f"order {k}: {ok}/{cfg.trials} vanish, {nontrivial} with nonzero raw rank-two terms, {time.perf_counter() - t0:.1f}s")
    if cfg.targeted:
        t0 = time.perf_counter()
        fams = targeted_order6_family(cfg.targeted, seed=cfg.seed)
        ok = sum(vanishing_check(f)["vanishes"] for f in fams)
        print(f"targeted order 6 (g=6): {ok}/{len(fams)} vanish, {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--genus", type=int, default=4)
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--max-order", type=int, default=5)
    ap.add_argument("--targeted", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    main(Config(a.genus, a.trials, a.max_order, a.targeted, a.seed))
