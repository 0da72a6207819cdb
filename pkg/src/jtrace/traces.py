"""Rank-one and rank-two traces of trees.

Rank one: the target is the space of cyclic words modulo the dihedral
relations ``v1..vs = vs v1..v(s-1)`` and ``v1..vs = (-1)^(s+1) vs..v1``.
Elements are dicts from canonical words to Fractions.

Rank two: the target is spanned by pairs ``[v|w]`` of nonempty words.  A
raw pair combination is reduced to normal form in the quotient for its
letter content (see :mod:`jtrace.omega2`).
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from . import omega2
from .exactlin import project
from .omega2 import splits, bar
from .lietrees import (
    DerivationElement,
    Tensor,
    Tree,
    Word,
    contract,
    iterated_bracket,
    letter_tensor,
    lie_element,
    random_tree,
    rotate_to,
    t_add,
    t_mul,
    tripod,
)

Omega1Element = dict[Word, Fraction]
Omega2Element = dict[tuple[Word, Word], Fraction]


def dihedral_canonical(word: Sequence[int]) -> tuple[Word, int]:
    """(canonical word, sign) with word = sign * canonical in the coinvariants.

    Sign 0 means the word is zero there (it equals minus itself).
    """
    w = tuple(word)
    s = len(w)
    if s == 0:
        return w, 1
    refl = -1 if s % 2 == 0 else 1  # (-1)^(s+1)
    best, signs = None, set()
    for base, sign in ((w, 1), (w[::-1], refl)):
        for r in range(s):
            u = base[r:] + base[:r]
            if best is None or u < best:
                best, signs = u, {sign}
            elif u == best:
                signs.add(sign)
    if len(signs) > 1:
        return best, 0
    return best, signs.pop()


def canonicalize(raw: Mapping[Word, Fraction]) -> Omega1Element:
    out: Omega1Element = {}
    for w, c in raw.items():
        cw, sign = dihedral_canonical(w)
        if sign:
            t_add(out, {cw: c}, sign)
    return out


def reflect(raw: Mapping[Word, Fraction]) -> Tensor:
    """b(w) = (-1)^(s+1) rev(w)."""
    out: Tensor = {}
    for w, c in raw.items():
        t_add(out, {w[::-1]: c}, 1 if len(w) % 2 else -1)
    return out


def es_trace_raw(x: DerivationElement) -> Tensor:
    """Contract the first two tensor slots."""
    out: Tensor = {}
    for key, c in x.terms.items():
        k = contract(key[0], key[1])
        if k:
            t_add(out, {key[2:]: c * k})
    return out


def es_trace(x: DerivationElement) -> Omega1Element:
    return canonicalize(es_trace_raw(x))


# --- graphical rank-one trace --------------------------------------------------


def _path_word(tree: Tree, x: int, y: int, label_tensor=None) -> Tensor:
    """Word read along the path from y to x, one hanging Lie element per vertex.

    A vertex contributes with sign + iff its cyclic order is (prev, hanging, next)
    where prev is toward y.
    """
    path = tree.path(y, x)
    acc: Tensor = {(): Fraction(1)}
    for i in range(1, len(path) - 1):
        prev, v, nxt = path[i - 1], path[i], path[i + 1]
        _, h1, h2 = rotate_to(tree.adj[v], prev)
        if h2 == nxt:
            hang, sign = h1, 1
        else:
            hang, sign = h2, -1
        part = lie_element(tree, hang, v, label_tensor)
        acc = t_mul(acc, part)
        if sign < 0:
            acc = {w: -c for w, c in acc.items()}
    return acc


def tr_c_rank1_raw(tree: Tree) -> Tensor:
    out: Tensor = {}
    leaves = tree.leaves
    for x, y in combinations(leaves, 2):
        c = contract(tree.hlabel(x), tree.hlabel(y))
        if c:
            t_add(out, _path_word(tree, x, y), c)
    return out


def tr_c_rank1(tree: Tree) -> Omega1Element:
    """Sum over chords x -> y of the cycle word, weighted by <l(x), l(y)>."""
    return canonicalize(tr_c_rank1_raw(tree))


def omega1_add(*elems: Mapping[Word, Fraction], scales: Sequence = ()) -> Omega1Element:
    out: Omega1Element = {}
    for i, e in enumerate(elems):
        t_add(out, e, scales[i] if i < len(scales) else 1)
    return out


# --- rank-two trace ----------------------------------------------------------------

_C, _D = -1, -2  # cut-chord endpoints inside rank-one words


class RewriteError(ArithmeticError):
    pass


def _cut_word_pairs(word: Word, c: Fraction, out: Omega2Element):
    """Reduce a cyclic word X C Y D Z (chord C -> D) to pair generators."""
    if word.count(_C) != 1 or word.count(_D) != 1:
        raise RewriteError(f"cut chord endpoints missing from {word}")
    i, j = word.index(_C), word.index(_D)
    if i > j:
        i, j = j, i
        c = -c
    x, y, z = word[:i], word[i + 1 : j], word[j + 1 :]
    for yi, yj in splits(y):
        left, sign = bar(z + x + yi)
        if not left or not yj:
            continue
        t_add(out, {(left, yj): c * sign})


def tr_c_rank2_raw(tree: Tree, cut_first: bool = False) -> Omega2Element:
    """Raw pair combination; ``cut_first`` cuts the other chord of each pair."""
    out: Omega2Element = {}
    leaves = tree.leaves
    for pair1, pair2 in combinations(combinations(leaves, 2), 2):
        if set(pair1) & set(pair2):
            continue
        (a, b), (c, d) = pair1, pair2
        k = contract(tree.hlabel(a), tree.hlabel(b)) * contract(tree.hlabel(c), tree.hlabel(d))
        if not k:
            continue
        if cut_first:
            (a, b), (c, d) = (c, d), (a, b)

        def lab(v, c=c, d=d):
            if v == c:
                return {(_C,): Fraction(1)}
            if v == d:
                return {(_D,): Fraction(1)}
            return letter_tensor(tree.hlabel(v))

        for w, x in _path_word(tree, a, b, lab).items():
            _cut_word_pairs(w, k * x, out)
    return out


def rank2_normal_form(raw: Mapping[tuple[Word, Word], Fraction]) -> Omega2Element:
    """Reduce a pair combination modulo the relations, content by content."""
    by_content: dict[tuple[int, ...], dict] = {}
    for (v, w), c in raw.items():
        by_content.setdefault(tuple(sorted(v + w)), {})[(v, w)] = c
    out: Omega2Element = {}
    for content, part in by_content.items():
        pres = omega2.content_presentation(content)
        vec = {}
        for g, c in part.items():
            col = pres.index[g]
            vec[col] = vec.get(col, 0) + c
        for col, c in project(pres.quotient, vec).items():
            out[pres.generators[col]] = c
    return out


def tr_c_rank2(tree: Tree) -> Omega2Element:
    return rank2_normal_form(tr_c_rank2_raw(tree))


# --- vanishing on brackets -----------------------------------------------------------


def vanishing_check(tripods: Sequence[Tree]) -> dict:
    """Traces of the left-normed bracket of the given tripods.

    Returns the rank-one and rank-two traces (normal forms), the raw rank-two
    combination size and whether both vanish.
    """
    if len(tripods) < 2:
        raise ValueError("vanishing_check needs at least two tripods")
    for t in tripods:
        if t.order != 1:
            raise ValueError("vanishing_check expects order-one trees")
    terms = iterated_bracket(tripods)
    r1_raw: Tensor = {}
    r2_raw: Omega2Element = {}
    for c, t in terms:
        t_add(r1_raw, tr_c_rank1_raw(t), c)
        t_add(r2_raw, tr_c_rank2_raw(t), c)
    r1 = canonicalize(r1_raw)
    r2 = rank2_normal_form(r2_raw)
    return {
        "order": len(tripods),
        "terms": len(terms),
        "rank1": r1,
        "rank2": r2,
        "rank2_raw_size": len(r2_raw),
        "vanishes": not r1 and not r2,
    }


def random_tripods(count: int, g: int, rng: random.Random) -> list[Tree]:
    letters = list(range(2 * g))
    return [tripod(*(rng.choice(letters) for _ in range(3))) for _ in range(count)]


def random_tree_of_order(order: int, g: int, rng: random.Random) -> Tree:
    return random_tree(order, list(range(2 * g)), rng)


def targeted_order6_family(count: int, g: int = 6, seed: int = 0) -> list[list[Tree]]:
    """Six-tripod lists whose bracket has a nonzero raw rank-two trace.

    Each tripod carries a p-letter, a q-letter and a third letter, which
    keeps the iterated bracket from dying by lack of contractions.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        tps = [
            tripod(2 * rng.randrange(g), 2 * rng.randrange(g) + 1, rng.randrange(2 * g))
            for _ in range(6)
        ]
        raw: Omega2Element = {}
        for c, t in iterated_bracket(tps):
            t_add(raw, tr_c_rank2_raw(t), c)
        if raw:
            out.append(tps)
    return out
