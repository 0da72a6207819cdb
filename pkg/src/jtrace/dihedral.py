"""Dihedral coinvariants of tensor powers.

``D_{2s}`` acts on positions ``0..s-1`` of ``H^{(x)s}``: the rotation ``a``
sends ``i -> i+1`` and the reflection ``b`` sends ``i -> -i`` (mod s).  In
the twisted action reflections carry an extra sign -1.  The multiplicity of
``[lambda]_GL`` in the coinvariants is the averaged character sum
``(1/2s) sum_g sign(g) chi_lambda(g)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb, gcd
from typing import Literal

from .symfunc import (
    CycleType,
    Partition,
    dim_gl,
    mn_character,
    partition,
    partitions,
)


class ConsistencyError(ArithmeticError):
    pass


@dataclass(frozen=True)
class DihedralClass:
    kind: Literal["rotation", "reflection"]
    rep: int  # rotation exponent, or for reflections the k in  i -> k - i
    size: int
    cycle_type: CycleType
    twist_sign: int


@dataclass(frozen=True)
class DihedralClassTable:
    s: int
    classes: tuple[DihedralClass, ...]

    def order(self) -> int:
        return sum(c.size for c in self.classes)


def rotation(s: int, r: int) -> tuple[int, ...]:
    return tuple((i + r) % s for i in range(s))


def reflection(s: int, k: int) -> tuple[int, ...]:
    return tuple((k - i) % s for i in range(s))


def dihedral_elements(s: int) -> list[tuple[tuple[int, ...], int]]:
    """All 2s permutations with their twist sign."""
    return [(rotation(s, r), 1) for r in range(s)] + [(reflection(s, k), -1) for k in range(s)]


def dihedral_classes(s: int) -> DihedralClassTable:
    if s < 3:
        raise ValueError(f"dihedral_classes needs s >= 3, got {s}")
    classes = [DihedralClass("rotation", 0, 1, (1,) * s, 1)]
    for r in range(1, s // 2 + 1):
        size = 1 if 2 * r == s else 2
        d = gcd(r, s)
        classes.append(DihedralClass("rotation", r, size, (s // d,) * d, 1))
    if s % 2:
        classes.append(DihedralClass("reflection", 0, s, (2,) * (s // 2) + (1,), -1))
    else:
        # k even: fixes two vertices; k odd: no fixed points
        classes.append(DihedralClass("reflection", 0, s // 2, (2,) * (s // 2 - 1) + (1, 1), -1))
        classes.append(DihedralClass("reflection", 1, s // 2, (2,) * (s // 2), -1))
    table = DihedralClassTable(s, tuple(classes))
    assert table.order() == 2 * s
    return table


def character_sum(s: int, lam: Partition, twist: bool) -> Fraction:
    total = 0
    for c in dihedral_classes(s).classes:
        sign = c.twist_sign if twist else 1
        total += c.size * sign * mn_character(lam, c.cycle_type)
    return Fraction(total, 2 * s)


def coinvariant_multiplicity(s: int, lam, twist: bool) -> int:
    lam = partition(lam)
    if sum(lam) != s:
        raise ValueError(f"partition {list(lam)} is not of size {s}")
    val = character_sum(s, lam, twist)
    if val.denominator != 1 or val < 0:
        raise ConsistencyError(f"multiplicity of {list(lam)} at s={s} is {val}")
    return int(val)


@dataclass
class MultiplicityTable:
    s: int
    twist: bool
    entries: dict[Partition, int]
    group: Literal["GL", "SP", "S"] = "GL"

    def nonzero(self) -> dict[Partition, int]:
        return {lam: m for lam, m in self.entries.items() if m}


def hs_decomposition(s: int, twist: bool | None = None) -> MultiplicityTable:
    """Multiplicities of [H^<s>]_{D_2s}; twisted iff s is even unless overridden."""
    if s < 3:
        raise ValueError(f"s must be >= 3, got {s}")
    if twist is None:
        twist = s % 2 == 0
    return MultiplicityTable(s, twist, {lam: coinvariant_multiplicity(s, lam, twist) for lam in partitions(s)})


def gl_sp_dictionary(table: MultiplicityTable) -> MultiplicityTable:
    """Relabel GL (equivalently S_s) multiplicities as Sp multiplicities.

    Valid in the stable range dim H >> s, where [lambda]_S (x)_S H^<s> = [lambda]_SP.
    """
    return MultiplicityTable(table.s, table.twist, dict(table.entries), "SP")


SERIES = ("sign", "trivial", "hook2", "tworow")


def series_member(s: int, family: str) -> Partition:
    if family == "sign":
        return (1,) * s
    if family == "trivial":
        return (s,)
    if family == "hook2":
        return (2,) + (1,) * (s - 2)
    if family == "tworow":
        return (s - 1, 1)
    raise ValueError(f"unknown family {family!r}; expected one of {SERIES}")


def series_probe(s: int, family: str) -> int:
    if s < 3:
        raise ValueError("s must be >= 3")
    return coinvariant_multiplicity(s, series_member(s, family), twist=s % 2 == 0)


# --- printed closed forms for two-row shapes --------------------------------


@dataclass
class ClosedFormCheck:
    order: str
    p: int
    k: int
    partition: Partition
    closed_form: Fraction
    character_sum: int
    matches: bool
    note: str = ""
    extra: dict = field(default_factory=dict)


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def two_row_closed_form(p: int, k: int, order: Literal["p", "2p"] = "p") -> ClosedFormCheck:
    """Evaluate the printed two-row multiplicity formula and compare it
    with the character sum.  Mismatches are reported in the result."""
    if p < 3 or not _is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if order == "p":
        if not (1 < k <= (p - 1) // 2):
            raise ValueError(f"need 1 < k <= {(p - 1) // 2} for order p={p}")
        lam = (p - k, k)
        alpha = comb(p, k) - comb(p, k - 1)
        if k % 2:
            value = Fraction(alpha, 2 * p)
            note = "odd k: alpha_k / 2p"
            extra = {}
        else:
            m = k // 2
            beta = comb((p - 1) // 2, m) - comb((p - 1) // 2, m - 1)
            value = Fraction(alpha + beta, 2)
            alt = Fraction(alpha + p * beta, 2 * p)
            note = "even k: printed (alpha_2m + beta_m)/2"
            extra = {"alpha_plus_p_beta_over_2p": alt}
        truth = coinvariant_multiplicity(p, lam, twist=False)
    elif order == "2p":
        if not (1 < k <= p):
            raise ValueError(f"need 1 < k <= {p} for order 2p")
        lam = (2 * p - k, k)
        m = k // 2
        num = (
            comb(2 * p, k)
            - comb(2 * p, k - 1)
            + (-1) ** k * (p + 1) * comb(p, m)
            - p * comb(p - 2, m)
            + p * (comb(p - 2, m - 1) if m >= 1 else 0)
            + 2 * (p - 1) * (1 if k == p else 0)
        )
        value = Fraction(num, 4 * p)
        note = "printed order-2p formula"
        # the same sum rebuilt from the class table with ab of type (2^(p-1),1,1)
        rebuilt = (
            comb(2 * p, k)
            - comb(2 * p, k - 1)
            + (-1) ** k * (1 - p) * comb(p, m)
            - p * (comb(p - 1, m) - (comb(p - 1, m - 1) if m >= 1 else 0))
            + 2 * (p - 1) * (1 if k == p else 0)
        )
        extra = {"rebuilt_from_class_table": Fraction(rebuilt, 4 * p)}
        truth = coinvariant_multiplicity(2 * p, lam, twist=True)
    else:
        raise ValueError(f"order must be 'p' or '2p', got {order!r}")
    return ClosedFormCheck(order, p, k, lam, value, truth, value == truth, note, extra)


# --- printed character table for order 2p ----------------------------------

TABLE_COLUMNS = ("1", "a^p", "a^odd", "a^even", "b", "ab")


def order_2p_cycle_types(p: int) -> dict[str, CycleType]:
    """Cycle types in S_2p of the class representatives; ab fixes two points."""
    return {
        "1": (1,) * (2 * p),
        "a^p": (2,) * p,
        "a^odd": (2 * p,),
        "a^even": (p, p),
        "b": (2,) * p,
        "ab": (2,) * (p - 1) + (1, 1),
    }


def _binom_diff(n: int, m: int) -> int:
    return comb(n, m) - (comb(n, m - 1) if m >= 1 else 0)


def printed_table_entry(p: int, k: int, column: str) -> int:
    """Entry of the printed table for [2p-k, k], 1 <= k <= p."""
    if k == 1:
        return {"1": 2 * p - 1, "a^p": -1, "a^odd": -1, "a^even": -1, "b": -1, "ab": 1}[column]
    m = k // 2
    sign = 1 if k % 2 == 0 else -1
    if column == "1":
        return comb(2 * p, k) - comb(2 * p, k - 1)
    if column in ("a^p", "b"):
        return sign * comb(p, m)
    if column == "a^odd":
        return 0
    if column == "a^even":
        return 2 if k == p else 0
    if column == "ab":
        return _binom_diff(p - 2, m)
    raise ValueError(f"unknown column {column!r}")


@dataclass
class TableEntryCheck:
    p: int
    k: int
    column: str
    printed: int
    computed: int

    @property
    def matches(self) -> bool:
        return self.printed == self.computed


def character_table_check(p: int) -> list[TableEntryCheck]:
    if p < 3 or not _is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    types = order_2p_cycle_types(p)
    out = []
    for k in range(1, p + 1):
        lam = (2 * p - k, k)
        for col in TABLE_COLUMNS:
            out.append(TableEntryCheck(p, k, col, printed_table_entry(p, k, col), mn_character(lam, types[col])))
    return out


# --- brute force oracle -----------------------------------------------------

BRUTE_FORCE_LIMIT = 10**7


def brute_force_coinvariants(s: int, n: int, twist: bool) -> int:
    """Dimension of (V^{(x)s})_{D_2s} for dim V = n, by orbit analysis.

    Each orbit of basis words contributes one dimension unless some group
    element fixes a word with total sign -1, in which case it contributes 0.
    """
    if n**s > BRUTE_FORCE_LIMIT:
        raise ValueError(f"{n}^{s} basis words exceed the brute-force limit")
    elems = dihedral_elements(s)
    seen: set[tuple[int, ...]] = set()
    count = 0
    for word in product(range(n), repeat=s):
        if word in seen:
            continue
        killed = False
        for perm, sign in elems:
            # g moves the letter at position i to position perm[i]
            img = [0] * s
            for i in range(s):
                img[perm[i]] = word[i]
            img = tuple(img)
            seen.add(img)
            if img == word and twist and sign < 0:
                killed = True
        if not killed:
            count += 1
    return count


def predicted_coinvariants(s: int, n: int, twist: bool) -> int:
    return sum(coinvariant_multiplicity(s, lam, twist) * dim_gl(lam, n) for lam in partitions(s))


