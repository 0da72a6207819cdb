"""Dimensions, characters and S_h decompositions of the rank-two quotient."""

import argparse
import time
from dataclasses import dataclass

from jtrace.omega2 import equivariant_decomposition, published_comparison, quotient_dim, relation_rows
from jtrace.symfunc import dim_irr


@dataclass
class Config:
    h_max: int = 5
    seed: int = 0


def fmt(lam):
    return "[" + ",".join(map(str, lam)) + "]"


def main(cfg: Config):
    for h in range(2, cfg.h_max + 1):
        t0 = time.perf_counter()
        rel = relation_rows(h)
        dim = quotient_dim(h, seed=cfg.seed)
        eq = equivariant_decomposition(h)
        dec = sorted(eq.decomposition.items(), reverse=True)
        body = " + ".join(f"{m if m > 1 else ''}{fmt(lam)}" for lam, m in dec) or "0"
        check = sum(m * dim_irr(lam) for lam, m in dec)
        print(f"h={h}: {len(rel.generators)} generators, {len(rel.tags)} relations, dim {dim} (checksum {check}), {time.perf_counter() - t0:.1f}s")
        print(f"  {body}")
        cmp = published_comparison(h, eq.decomposition)
        if cmp.get("printed"):
            print(f"  reference list {cmp['printed']}: matches={cmp['matches']}")
        for flag in cmp["flags"]:
            print(f"  note: {flag}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--h-max", type=int, default=5, help="h=6 takes about two minutes")
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    main(Config(a.h_max, a.seed))
