"""Acceptance criteria as plain functions returning (passed, detail).

Shared by ``tests/test_acceptance.py`` and ``jtrace selftest``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from . import dihedral, omega2
from .exactlin import modular_rank, random_primes
from .lietrees import bracket_trees, derivation_bracket, eta, eta_sum, random_tree, t_add, tripod
from .symfunc import dim_irr, frobenius_character, mn_character, partitions
from .traces import (
    es_trace,
    es_trace_raw,
    omega1_add,
    random_tripods,
    reflect,
    targeted_order6_family,
    tr_c_rank1,
    vanishing_check,
)


@dataclass(frozen=True)
class Criterion:
    number: int
    module: str
    title: str
    run: Callable[[], tuple[bool, str]]


def _c1():
    t0 = time.perf_counter()
    expected = {
        4: {(2, 1, 1): 1},
        5: {(5,): 1, (3, 2): 1, (2, 2, 1): 1, (1, 1, 1, 1, 1): 1},
        6: {(3, 3): 1, (4, 1, 1): 2, (3, 2, 1): 1, (3, 1, 1, 1): 1, (2, 2, 1, 1): 1},
    }
    bad = [s for s, want in expected.items() if dihedral.hs_decomposition(s).nonzero() != want]
    dt = time.perf_counter() - t0
    return not bad and dt < 5, f"mismatched s={bad} in {dt:.2f}s"


def _c2():
    t0 = time.perf_counter()
    bad = []
    for s in range(3, 14):
        law = {
            "sign": int(s % 4 == 1),
            "trivial": s % 2,
            "tworow": 0,
            "hook2": 0,
        }
        for fam, want in law.items():
            got = dihedral.series_probe(s, fam)
            if got != want:
                bad.append((s, fam, got, want))
    dt = time.perf_counter() - t0
    return not bad and dt < 60, f"violations={bad} in {dt:.2f}s"


def _c3():
    bad = []
    for p in (3, 5, 7):
        bad += [(c.p, c.k, c.column, c.printed, c.computed) for c in dihedral.character_table_check(p) if not c.matches]
    return not bad, f"{len(bad)} printed entries differ (p,k,col,printed,computed): {bad}"


def _c4():
    bad, report = [], []
    for p in (5, 7, 11):
        for k in range(2, (p - 1) // 2 + 1):
            r = dihedral.two_row_closed_form(p, k, "p")
            if k % 2 and not r.matches:
                bad.append((p, k))
            if k % 2 == 0:
                report.append((p, k, str(r.closed_form), r.character_sum))
    return not bad, f"odd-k failures={bad}; even-k printed vs true (reported, not matched) {report}"


def _c5():
    t0 = time.perf_counter()
    bad = 0
    count = 0
    for n in range(1, 8):
        for lam in partitions(n):
            for mu in partitions(n):
                count += 1
                bad += mn_character(lam, mu) != frobenius_character(lam, mu)
    rng = random.Random(8)
    parts8 = list(partitions(8))
    for _ in range(500):
        lam, mu = rng.choice(parts8), rng.choice(parts8)
        count += 1
        bad += mn_character(lam, mu) != frobenius_character(lam, mu)
    dt = time.perf_counter() - t0
    return bad == 0 and dt < 300, f"{count} pairs, {bad} disagreements, {dt:.1f}s"


def _c6():
    bad = []
    for s in range(3, 7):
        for n in range(1, 4):
            for twist in (False, True):
                a = dihedral.brute_force_coinvariants(s, n, twist)
                b = dihedral.predicted_coinvariants(s, n, twist)
                if a != b:
                    bad.append((s, n, twist, a, b))
    return not bad, f"mismatches={bad}"


def _c7():
    t0 = time.perf_counter()
    notes = []
    ok = all(omega2.quotient_dim(h) == 0 for h in range(0, 4))
    notes.append(f"h<=3 vanish: {ok}")
    d4 = omega2.equivariant_decomposition(4).decomposition
    want4 = {(1, 1, 1, 1): 1, (3, 1): 1}
    notes.append(f"h=4 computed {d4} vs published {want4}")
    ok &= d4 == want4
    d5 = omega2.equivariant_decomposition(5).decomposition
    want5 = {(3, 1, 1): 2, (2, 2, 1): 1, (2, 1, 1, 1): 1}
    notes.append(f"h=5 computed {d5}")
    ok &= d5 == want5
    e6 = omega2.equivariant_decomposition(6)
    total = sum(m * dim_irr(lam) for lam, m in e6.decomposition.items())
    pres = omega2.content_presentation(tuple(range(1, 7)))
    r = len(pres.quotient.pivot_columns)
    mods = [modular_rank(pres.relations.rows, q) for q in random_primes(2, seed=6)]
    flags = omega2.published_comparison(6, e6.decomposition)["flags"]
    ok &= total == e6.dim and all(m == r for m in mods) and bool(flags)
    dt = time.perf_counter() - t0
    ok &= dt < 600
    notes.append(f"h=6 dim {e6.dim}, sum {total}, ranks {r}/{mods}, flags {len(flags)}, {dt:.0f}s")
    return ok, "; ".join(notes)


def _c8():
    rng = random.Random(48)
    letters = list(range(8))
    bad_id = bad_b = nonzero = 0
    for _ in range(50):
        t = random_tree(rng.randint(1, 4), letters, rng)
        x = eta(t)
        raw = es_trace_raw(x)
        if t_add(dict(raw), reflect(raw), -1):
            bad_b += 1
        es = es_trace(x)
        nonzero += bool(es)
        if omega1_add(es, tr_c_rank1(t), scales=[1, -2]):
            bad_id += 1
    return bad_id == 0 and bad_b == 0, f"identity failures {bad_id}, reflection failures {bad_b}, nonzero traces {nonzero}/50"


def _c9():
    t0 = time.perf_counter()
    rng = random.Random(59)
    fails = []
    for k in (2, 3, 4):
        for _ in range(5):
            tps = random_tripods(k, 5, rng)
            if not vanishing_check(tps)["vanishes"]:
                fails.append(("random", k))
    nontrivial = 0
    for tps in targeted_order6_family(10, g=6, seed=6):
        r = vanishing_check(tps)
        nontrivial += r["rank2_raw_size"] > 0
        if not r["vanishes"]:
            fails.append(("order6", r["rank2"]))
    dt = time.perf_counter() - t0
    return not fails and nontrivial == 10 and dt < 600, f"failures {fails}; order-6 with nonzero raw rank-2: {nontrivial}/10; {dt:.1f}s"


def _c10():
    rng = random.Random(10)
    letters = list(range(6))
    bad = nonzero = 0
    pairs = [(1, 1)] * 50 + [(1, 2)] * 20
    for s1, s2 in pairs:
        t1 = tripod(*(rng.choice(letters) for _ in range(3)))
        t2 = tripod(*(rng.choice(letters) for _ in range(3))) if s2 == 1 else random_tree(2, letters, rng)
        lhs = eta_sum(bracket_trees(t1, t2), s1 + s2)
        rhs = derivation_bracket(eta(t1), eta(t2))
        nonzero += not lhs.is_zero()
        bad += not (lhs - rhs).is_zero()
    return bad == 0, f"{bad} failures over {len(pairs)} pairs ({nonzero} nonzero brackets)"


CRITERIA = [
    Criterion(1, "dihedral", "coinvariant tables s=4,5,6", _c1),
    Criterion(2, "dihedral", "series laws 3<=s<=13", _c2),
    Criterion(3, "dihedral", "order-2p character table", _c3),
    Criterion(4, "dihedral", "order-p odd-k closed form", _c4),
    Criterion(5, "symfunc", "Murnaghan-Nakayama vs Frobenius", _c5),
    Criterion(6, "dihedral", "brute-force coinvariants", _c6),
    Criterion(7, "omega2", "rank-two quotient tables", _c7),
    Criterion(8, "traces", "rank-one trace identities", _c8),
    Criterion(9, "traces", "vanishing on brackets", _c9),
    Criterion(10, "lietrees", "eta is a Lie map", _c10),
]


def run(only: str | None = None, echo=print) -> bool:
    ok = True
    for c in CRITERIA:
        if only and c.module != only:
            continue
        try:
            passed, detail = c.run()
        except Exception as exc:  # reported, not swallowed
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        ok &= passed
        echo(f"criterion {c.number:>2} [{c.module}] {'PASS' if passed else 'FAIL'}  {c.title}: {detail}")
    return ok

