"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 mathematical consistency failure.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import acceptance, dihedral, omega2
from .lietrees import TreeError, format_tree, letter_name, parse_tree
from .symfunc import FROBENIUS_MAX_N, SizeMismatch, dim_irr, frobenius_character, mn_character, partition
from .traces import random_tripods, tr_c_rank1, tr_c_rank2, vanishing_check

GENUS_ENV = "JTRACE_GENUS"


class UsageError(Exception):
    pass


def default_genus(order: int) -> int:
    env = os.environ.get(GENUS_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{GENUS_ENV} must be an integer, got {env!r}") from None
    return max(4, order)


def _num(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


def _parse_partition(text: str) -> tuple[int, ...]:
    try:
        parts = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"cannot parse partition {text!r}") from None
    if any(p <= 0 for p in parts):
        raise UsageError(f"partition parts must be positive: {text!r}")
    return partition(parts)


def _word(w) -> str:
    return " ".join(letter_name(a) for a in w)


# --- commands ---------------------------------------------------------------------


def cmd_characters(args) -> tuple[int, str]:
    lam, mu = _parse_partition(args.lam), _parse_partition(args.mu)
    try:
        value = mn_character(lam, mu)
    except SizeMismatch as exc:
        raise UsageError(str(exc)) from None
    oracle = frobenius_character(lam, mu) if sum(lam) <= FROBENIUS_MAX_N else None
    agree = oracle is None or oracle == value
    doc = {"command": "characters", "lambda": list(lam), "mu": list(mu), "value": value, "frobenius": oracle, "agree": agree}
    return (0 if agree else 2), _dump(doc)


def cmd_coinvariants(args) -> tuple[int, str]:
    s = args.s
    if not 3 <= s <= 12:
        raise UsageError("coinvariants needs 3 <= s <= 12")
    twist = {"auto": None, "on": True, "off": False}[args.twist]
    try:
        table = dihedral.hs_decomposition(s, twist)
    except dihedral.ConsistencyError as exc:
        return 2, str(exc)
    entries = [{"partition": list(lam), "mult": m} for lam, m in table.nonzero().items()]
    if args.format == "tsv":
        lines = ["partition\tmult"] + [f"{','.join(map(str, e['partition']))}\t{e['mult']}" for e in entries]
        return 0, "\n".join(lines)
    return 0, _dump({"command": "coinvariants", "s": s, "twist": table.twist, "entries": entries})


def cmd_omega2(args) -> tuple[int, str]:
    h = args.h
    if not 0 <= h <= 6:
        raise UsageError("omega2 needs 0 <= h <= 6")
    try:
        dim = omega2.quotient_dim(h, seed=args.seed)
        eq = omega2.equivariant_decomposition(h)
    except omega2.ConsistencyError as exc:
        return 2, str(exc)
    dec = sorted(eq.decomposition.items(), reverse=True)
    checksum = sum(m * dim_irr(lam) for lam, m in dec)
    if checksum != dim:
        return 2, f"decomposition accounts for {checksum} of {dim} dimensions"
    if args.format == "tsv":
        lines = ["partition\tmult"] + [f"{','.join(map(str, lam))}\t{m}" for lam, m in dec]
        return 0, "\n".join(lines)
    doc = {
        "command": "omega2",
        "h": h,
        "dim": dim,
        "character": [{"cycle_type": list(mu), "value": _num(v)} for mu, v in sorted(eq.character.items(), reverse=True)],
        "decomposition": [{"partition": list(lam), "mult": m} for lam, m in dec],
        "checksum": checksum,
        "paper_comparison": omega2.published_comparison(h, eq.decomposition),
    }
    return 0, _dump(doc)


def cmd_trace(args) -> tuple[int, str]:
    try:
        tree = parse_tree(args.tree)
        r1 = tr_c_rank1(tree)
        r2 = tr_c_rank2(tree) if tree.order >= 3 else {}
    except TreeError as exc:
        raise UsageError(str(exc)) from None
    doc = {
        "command": "trace",
        "tree": format_tree(tree),
        "order": tree.order,
        "rank1": [{"word": _word(w), "coef": _num(c)} for w, c in sorted(r1.items())],
        "rank2": [{"left": _word(v), "right": _word(w), "coef": _num(c)} for (v, w), c in sorted(r2.items())],
    }
    return 0, _dump(doc)


def cmd_vanishing(args) -> tuple[int, str]:
    if not 2 <= args.tripods <= 6:
        raise UsageError("vanishing needs 2 <= --tripods <= 6")
    g = args.genus if args.genus is not None else default_genus(args.tripods)
    rng = random.Random(args.seed)
    tps = random_tripods(args.tripods, g, rng)
    r = vanishing_check(tps)
    doc = {
        "command": "vanishing",
        "genus": g,
        "seed": args.seed,
        "tripods": [format_tree(t) for t in tps],
        "terms": r["terms"],
        "rank2_raw_size": r["rank2_raw_size"],
        "vanishes": r["vanishes"],
    }
    return (0 if r["vanishes"] else 2), _dump(doc)


def cmd_selftest(args) -> tuple[int, str]:
    lines: list[str] = []
    ok = acceptance.run(only=args.only, echo=lines.append)
    if not lines:
        raise UsageError(f"no criteria for module {args.only!r}")
    return (0 if ok else 2), "\n".join(lines)


# --- parser ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="jtrace", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("characters", help="chi_lambda(mu), checked against the Frobenius oracle")
    p.add_argument("--lambda", dest="lam", required=True, help="comma-separated parts, e.g. 3,2")
    p.add_argument("--mu", required=True, help="cycle type, e.g. 2,2,1")
    p.set_defaults(fn=cmd_characters)

    p = sub.add_parser("coinvariants", help="multiplicities in the dihedral coinvariants of H^s")
    p.add_argument("s", type=int)
    p.add_argument("--twist", choices=("auto", "on", "off"), default="auto")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(fn=cmd_coinvariants)

    p = sub.add_parser("omega2", help="rank-two quotient with h hairs")
    p.add_argument("h", type=int)
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--seed", type=int, default=0, help="seed for the verification primes")
    p.set_defaults(fn=cmd_omega2)

    p = sub.add_parser("trace", help="rank-one and rank-two traces of a tree literal")
    p.add_argument("tree", help="e.g. '((p1,q1),(p2,(q2,p1)))'")
    p.set_defaults(fn=cmd_trace)

    p = sub.add_parser("vanishing", help="traces of a bracket of random tripods")
    p.add_argument("--tripods", type=int, default=3)
    p.add_argument("--genus", type=int, default=None, help=f"default: ${GENUS_ENV} or max(4, order)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_vanishing)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--only", default=None, help="module name, e.g. dihedral")
    p.set_defaults(fn=cmd_selftest)
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        code, out = args.fn(args)
    except UsageError as exc:
        print(f"jtrace: error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
