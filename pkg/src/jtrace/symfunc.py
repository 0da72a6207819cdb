"""Symmetric group characters and related counting.

Partitions are plain tuples of positive integers in weakly decreasing order;
cycle types use the same representation.  Two independent character
algorithms are provided: the Murnaghan-Nakayama rule (fast, memoized) and a
direct coefficient extraction from the Frobenius formula (slow oracle).
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, prod
from typing import Iterable, Iterator, Mapping, Sequence

Partition = tuple[int, ...]
CycleType = Partition


class SizeMismatch(ValueError):
    pass


def partition(parts: Iterable[int]) -> Partition:
    """Canonical form: drop zeros, sort descending, reject negatives."""
    ps = [int(p) for p in parts]
    if any(p < 0 for p in ps):
        raise ValueError(f"negative part in {ps}")
    return tuple(sorted((p for p in ps if p > 0), reverse=True))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order ([n] first)."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def _check_sizes(lam: Partition, mu: CycleType):
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{list(lam)}| = {sum(lam)} but |{list(mu)}| = {sum(mu)}")


# --- Murnaghan-Nakayama -----------------------------------------------------


def _beta_set(lam: Partition, length: int) -> tuple[int, ...]:
    lam = lam + (0,) * (length - len(lam))
    return tuple(lam[i] + length - 1 - i for i in range(length))


def _from_beta(beta: Sequence[int]) -> Partition:
    b = sorted(beta, reverse=True)
    k = len(b)
    return partition(b[i] - (k - 1 - i) for i in range(k))


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    # rim hooks of size r <-> moving a bead from position b to b - r
    k = len(lam)
    beta = _beta_set(lam, k)
    occupied = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in occupied:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new = _from_beta([nb if x == b else x for x in beta])
        val = _mn(new, rest)
        if val:
            total += -val if height % 2 else val
    return total


def mn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """chi_lambda evaluated on the class of cycle type mu (Murnaghan-Nakayama)."""
    lam, mu = partition(lam), partition(mu)
    _check_sizes(lam, mu)
    # removing the longest cycles first keeps the memo table small
    return _mn(lam, mu)


# --- Frobenius formula oracle -----------------------------------------------

FROBENIUS_MAX_N = 8


def _perm_sign(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _power_sum_product(mu: CycleType, nvars: int) -> dict[tuple[int, ...], int]:
    poly: dict[tuple[int, ...], int] = {(0,) * nvars: 1}
    for part in mu:
        nxt: dict[tuple[int, ...], int] = {}
        for exp, c in poly.items():
            for i in range(nvars):
                e = list(exp)
                e[i] += part
                e = tuple(e)
                nxt[e] = nxt.get(e, 0) + c
        poly = nxt
    return poly


def frobenius_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """chi_lambda(mu) as the coefficient of x^(lambda+delta) in a_delta * prod p_mu_i."""
    lam, mu = partition(lam), partition(mu)
    _check_sizes(lam, mu)
    n = sum(lam)
    if n > FROBENIUS_MAX_N:
        raise ValueError(f"frobenius_character is an oracle gated to n <= {FROBENIUS_MAX_N}")
    if n == 0:
        return 1
    k = len(lam)
    delta = tuple(range(k - 1, -1, -1))
    target = tuple(lam[i] + delta[i] for i in range(k))
    poly = _power_sum_product(mu, k)
    total = 0
    for perm in permutations(range(k)):
        exp = tuple(target[i] - delta[perm[i]] for i in range(k))
        c = poly.get(exp)
        if c:
            total += _perm_sign(perm) * c
    return total


# --- dimensions and class sizes ---------------------------------------------


def hooks(lam: Partition) -> list[int]:
    conj = conjugate(lam)
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def dim_irr(lam: Sequence[int]) -> int:
    """Dimension of the Specht module (hook length formula)."""
    lam = partition(lam)
    return factorial(sum(lam)) // prod(hooks(lam))


def dim_gl(lam: Sequence[int], n: int) -> int:
    """Dimension of the GL(n) Schur functor S_lambda (hook content formula)."""
    lam = partition(lam)
    if n < 1:
        raise ValueError("n must be >= 1")
    if len(lam) > n:
        return 0
    num = prod(n + j - i for i in range(len(lam)) for j in range(lam[i]))
    return num // prod(hooks(lam))


def z_mu(mu: Sequence[int]) -> int:
    counts = Counter(partition(mu))
    return prod(k**m * factorial(m) for k, m in counts.items())


def class_size(mu: Sequence[int]) -> int:
    mu = partition(mu)
    return factorial(sum(mu)) // z_mu(mu)


def cycle_type(perm: Sequence[int]) -> CycleType:
    """Cycle type of a permutation given in one-line form on 0..n-1."""
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            out.append(length)
    return partition(out)


def sign_of(mu: Sequence[int]) -> int:
    mu = partition(mu)
    return -1 if (sum(mu) - len(mu)) % 2 else 1


# --- class functions ---------------------------------------------------------


class ClassFunction(dict):
    """Mapping CycleType -> value, total on the partitions of ``n``."""

    def __init__(self, n: int, values: Mapping[Sequence[int], object]):
        super().__init__({partition(k): Fraction(v) for k, v in values.items()})
        self.n = n
        missing = [mu for mu in partitions(n) if mu not in self]
        if missing:
            raise ValueError(f"class function undefined on {missing}")

    @classmethod
    def character(cls, lam: Sequence[int]) -> "ClassFunction":
        lam = partition(lam)
        n = sum(lam)
        return cls(n, {mu: mn_character(lam, mu) for mu in partitions(n)})


def inner_product(f: Mapping[CycleType, object], g: Mapping[CycleType, object], n: int) -> Fraction:
    total = Fraction(0)
    for mu in partitions(n):
        total += class_size(mu) * Fraction(f[mu]) * Fraction(g[mu])
    return total / factorial(n)


def decompose_class_function(f: ClassFunction) -> dict[Partition, Fraction]:
    """Multiplicities <f, chi_lambda> for every lambda |- n (zeros included)."""
    n = f.n
    mus = list(partitions(n))
    out = {}
    for lam in partitions(n):
        out[lam] = sum(
            (class_size(mu) * f[mu] * mn_character(lam, mu) for mu in mus), Fraction(0)
        ) / factorial(n)
    recon = {mu: sum(out[lam] * mn_character(lam, mu) for lam in out) for mu in mus}
    if any(recon[mu] != f[mu] for mu in mus):
        raise ArithmeticError("class function is not in the span of the irreducible characters")
    return out
