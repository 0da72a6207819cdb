"""Compare the closed-form two-row character entries on D_4p classes with Murnaghan-Nakayama."""

import argparse
from dataclasses import dataclass

from jtrace.dihedral import character_table_check, two_row_closed_form


@dataclass
class Config:
    primes: tuple[int, ...] = (3, 5, 7, 11)
    show_all: bool = False


def main(cfg: Config):
    for p in cfg.primes:
        rows = character_table_check(p)
        bad = [r for r in rows if not r.matches]
        print(f"p={p}: {len(rows) - len(bad)}/{len(rows)} entries agree")
        for r in rows if cfg.show_all else bad:
            print(f"  k={r.k} {r.column}: closed form {r.printed}, computed {r.computed}")
        for k in range(2, p + 1):
            r = two_row_closed_form(p, k, "2p")
            print(f"  order 2p, k={k}: sum {r.character_sum}, closed form {r.closed_form}, rebuilt {r.extra['rebuilt_from_class_table']}")
        for k in range(2, (p - 1) // 2 + 1):
            r = two_row_closed_form(p, k, "p")
            print(f"  order p, k={k}: sum {r.character_sum}, closed form {r.closed_form}, match {r.matches}")

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("primes", type=int, nargs="*", default=[3, 5, 7, 11])
    ap.add_argument("--all", action="store_true", help="print matching entries too")
    a = ap.parse_args()
    main(Config(tuple(a.primes), a.all))
