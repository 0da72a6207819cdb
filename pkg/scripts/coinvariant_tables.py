"""Dihedral coinvariant tables of H^s and the series laws over a range of s."""

import argparse
from dataclasses import dataclass

from jtrace.dihedral import hs_decomposition, series_probe

FAMILIES = ("sign", "trivial", "tworow", "hook2")


@dataclass
class Config:
    s_min: int = 3
    s_max: int = 13
    tables: tuple[int, ...] = (4, 5, 6)


def fmt(lam):
    return "[" + ",".join(map(str, lam)) + "]"


def main(cfg: Config):
    for s in cfg.tables:
        t = hs_decomposition(s)
        body = " + ".join(f"{m if m > 1 else ''}{fmt(lam)}" for lam, m in t.nonzero().items()) or "0"
        print(f"s={s} twisted={t.twist}: {body}")
    print()
    print("s\t" + "\t".join(FAMILIES))
    for s in range(cfg.s_min, cfg.s_max + 1):
        print(f"{s}\t" + "\t".join(str(series_probe(s, f)) for f in FAMILIES))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--s-min", type=int, default=3)
    ap.add_argument("--s-max", type=int, default=13)
    a = ap.parse_args()
    main(Config(a.s_min, a.s_max))
