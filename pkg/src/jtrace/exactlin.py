"""Exact sparse linear algebra over Q, with prime-field rank checks.

Rows are stored sparsely as ``(column, Fraction)`` pairs.  Elimination is
fraction-free: each row is scaled to a primitive integer vector, combined
with integer multipliers and divided by the content again, so relation
matrices with small integer entries stay small throughout.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

SparseRow = tuple[tuple[int, Fraction], ...]


class DimensionError(ValueError):
    pass


class BadPrimeError(ValueError):
    """A denominator vanishes modulo the requested prime."""


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class ExactSparseMatrix:
    nrows: int
    ncols: int
    rows: tuple[SparseRow, ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise DimensionError(f"expected {self.nrows} rows, got {len(self.rows)}")
        for row in self.rows:
            prev = -1
            for c, v in row:
                if not (prev < c < self.ncols):
                    raise DimensionError(f"bad column index {c} (ncols={self.ncols})")
                if v == 0:
                    raise ValueError("stored zero entry")
                prev = c

    @classmethod
    def from_dicts(cls, rows: Iterable[Mapping[int, object]], ncols: int) -> "ExactSparseMatrix":
        out = []
        for r in rows:
            out.append(tuple((c, _as_fraction(v)) for c, v in sorted(r.items()) if v != 0))
        return cls(len(out), ncols, tuple(out))

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[object]]) -> "ExactSparseMatrix":
        ncols = len(dense[0]) if dense else 0
        return cls.from_dicts(({j: v for j, v in enumerate(r)} for r in dense), ncols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "ExactSparseMatrix":
        return cls(nrows, ncols, tuple(() for _ in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> "ExactSparseMatrix":
        return cls(n, n, tuple(((i, Fraction(1)),) for i in range(n)))

    def transpose(self) -> "ExactSparseMatrix":
        cols: list[list[tuple[int, Fraction]]] = [[] for _ in range(self.ncols)]
        for i, row in enumerate(self.rows):
            for c, v in row:
                cols[c].append((i, v))
        return ExactSparseMatrix(self.ncols, self.nrows, tuple(tuple(c) for c in cols))

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for i, row in enumerate(self.rows):
            for c, v in row:
                out[i][c] = v
        return out

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        for c in row:
            row[c] //= g
    return row


def _integer_row(row: SparseRow) -> dict[int, int]:
    den = 1
    for _, v in row:
        den = lcm(den, v.denominator)
    return _primitive({c: int(v * den) for c, v in row})


class _Echelon:
    """Incremental row echelon form over Z (rows kept primitive).

    ``pivots[c]`` is the row whose leading column is ``c``.  Rows are only
    leading-reduced on insertion; :meth:`reduced` back-substitutes.
    """

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}

    def insert(self, row: dict[int, int]) -> int | None:
        row = dict(row)
        heap = list(row)
        heapq.heapify(heap)
        pivots = self.pivots
        while heap:
            c = heapq.heappop(heap)
            if heap and heap[0] == c:
                continue
            b = row.get(c)
            if b is None:
                continue
            prow = pivots.get(c)
            if prow is None:
                pivots[c] = _primitive(row)
                return c
            a = prow[c]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            if fa != 1:
                for k in row:
                    row[k] *= fa
            for k, v in prow.items():
                nv = row.get(k, 0) - fb * v
                if nv:
                    if k not in row:
                        heapq.heappush(heap, k)
                    row[k] = nv
                else:
                    row.pop(k, None)
            _primitive(row)
        return None

    def reduced(self) -> dict[int, dict[int, Fraction]]:
        """Back-substitute into reduced row echelon form with unit pivots."""
        out: dict[int, dict[int, Fraction]] = {}
        for p in sorted(self.pivots, reverse=True):
            row = dict(self.pivots[p])
            a = row[p]
            acc: dict[int, Fraction] = {}
            for k, v in row.items():
                q = out.get(k) if k != p else None
                if q is None:
                    acc[k] = acc.get(k, 0) + Fraction(v, a)
                    continue
                # q is already reduced: only free columns besides its pivot
                coef = Fraction(v, a)
                for kk, vv in q.items():
                    if kk == k:
                        continue
                    acc[kk] = acc.get(kk, 0) - coef * vv
            out[p] = {k: v for k, v in acc.items() if v != 0}
        return out


def rank(m: ExactSparseMatrix) -> int:
    ech = _Echelon()
    r = 0
    for row in m.rows:
        if row and ech.insert(_integer_row(row)) is not None:
            r += 1
    return r


def modular_rank(m: ExactSparseMatrix, prime: int) -> int:
    """Rank of ``m`` reduced modulo ``prime``."""
    pivots: dict[int, dict[int, int]] = {}
    r = 0
    for srow in m.rows:
        row: dict[int, int] = {}
        for c, v in srow:
            d = v.denominator % prime
            if d == 0:
                raise BadPrimeError(f"denominator {v.denominator} divisible by {prime}")
            x = v.numerator * pow(d, -1, prime) % prime
            if x:
                row[c] = x
        heap = list(row)
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            b = row.get(c)
            if b is None:
                continue
            prow = pivots.get(c)
            if prow is None:
                inv = pow(b, -1, prime)
                pivots[c] = {k: v * inv % prime for k, v in row.items()}
                r += 1
                break
            for k, v in prow.items():
                nv = (row.get(k, 0) - b * v) % prime
                if nv:
                    if k not in row:
                        heapq.heappush(heap, k)
                    row[k] = nv
                else:
                    row.pop(k, None)
    return r


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_primes(count: int, seed: int = 0, bits: int = 31) -> list[int]:
    """Distinct primes in (2^(bits-1), 2^bits), reproducible from ``seed``."""
    rng = random.Random(seed)
    out: list[int] = []
    while len(out) < count:
        n = rng.randrange(2 ** (bits - 1), 2**bits) | 1
        if n not in out and _is_probable_prime(n):
            out.append(n)
    return out


def verify_rank(m: ExactSparseMatrix, exact: int | None = None, seed: int = 0) -> tuple[int, list[tuple[int, int]]]:
    """Exact rank plus the ranks modulo two random primes > 2^20."""
    if exact is None:
        exact = rank(m)
    checks = []
    for p in random_primes(2, seed=seed):
        try:
            checks.append((p, modular_rank(m, p)))
        except BadPrimeError:
            continue
    return exact, checks


@dataclass(frozen=True)
class QuotientModule:
    ambient_dim: int
    pivot_columns: tuple[int, ...]
    reduced_relation_rows: ExactSparseMatrix
    free_columns: tuple[int, ...]
    _rows_by_pivot: dict = field(repr=False, compare=False, default_factory=dict)
    _free_index: dict = field(repr=False, compare=False, default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.free_columns)

    def pivot_row(self, col: int) -> dict[int, Fraction] | None:
        return self._rows_by_pivot.get(col)

    def free_index(self, col: int) -> int:
        return self._free_index[col]


def build_quotient(ambient_dim: int, relations: ExactSparseMatrix) -> QuotientModule:
    if relations.ncols != ambient_dim:
        raise DimensionError(f"relations have {relations.ncols} columns, ambient is {ambient_dim}")
    ech = _Echelon()
    for row in relations.rows:
        if row:
            ech.insert(_integer_row(row))
    red = ech.reduced()
    pivots = tuple(sorted(red))
    pset = set(pivots)
    free = tuple(c for c in range(ambient_dim) if c not in pset)
    rref = ExactSparseMatrix.from_dicts((red[p] for p in pivots), ambient_dim)
    return QuotientModule(
        ambient_dim,
        pivots,
        rref,
        free,
        {p: {c: v for c, v in red[p].items() if c != p} for p in pivots},
        {c: i for i, c in enumerate(free)},
    )


def project(q: QuotientModule, v) -> dict[int, Fraction]:
    """Canonical representative of ``v`` modulo the relations.

    ``v`` is a dense sequence of length ``ambient_dim`` or a sparse mapping
    column -> value.  The result maps free columns to nonzero coefficients.
    """
    if isinstance(v, Mapping):
        items = v.items()
        if any(not (0 <= c < q.ambient_dim) for c in v):
            raise DimensionError("column out of range")
    else:
        if len(v) != q.ambient_dim:
            raise DimensionError(f"vector length {len(v)} != {q.ambient_dim}")
        items = enumerate(v)
    out: dict[int, Fraction] = {}
    for c, x in items:
        if not x:
            continue
        row = q._rows_by_pivot.get(c)
        if row is None:
            out[c] = out.get(c, 0) + x
        else:
            for k, y in row.items():
                out[k] = out.get(k, 0) - x * y
    return {c: _as_fraction(x) for c, x in out.items() if x != 0}


def embed(q: QuotientModule, coords: Mapping[int, object]) -> list[Fraction]:
    """Write free-column coordinates back into the ambient space."""
    out = [Fraction(0)] * q.ambient_dim
    for c, x in coords.items():
        if c not in q._free_index:
            raise DimensionError(f"column {c} is not free")
        out[c] = _as_fraction(x)
    return out
