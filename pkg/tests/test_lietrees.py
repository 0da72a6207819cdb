import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jtrace.exactlin import ExactSparseMatrix, rank
from jtrace.lietrees import (
    ConsistencyError,
    DerivationElement,
    SymplecticSpace,
    TreeError,
    TreeParseError,
    bracket_trees,
    contract,
    derivation_bracket,
    eta,
    eta_sum,
    expand_lie,
    format_tree,
    ihx_triple,
    is_in_D,
    is_lie,
    lie_degree,
    lyndon_basis,
    lyndon_words,
    p,
    parse_letter,
    parse_tree,
    q,
    random_tree,
    tripod,
)


def witt(n, k):
    def mobius(d):
        out, m, f = 1, d, 2
        while f * f <= m:
            if m % f == 0:
                m //= f
                if m % f == 0:
                    return 0
                out = -out
            f += 1
        return -out if m > 1 else out
    return sum(mobius(d) * k ** (n // d) for d in range(1, n + 1) if n % d == 0) // n


def tensor_rank(tensors):
    keys = sorted({w for t in tensors for w in t})
    col = {w: i for i, w in enumerate(keys)}
    m = ExactSparseMatrix.from_dicts([{col[w]: c for w, c in t.items()} for t in tensors], max(1, len(keys)))
    return rank(m)


trees = st.builds(
    lambda order, seed, g: random_tree(order, list(range(2 * g)), random.Random(seed)),
    st.integers(0, 4),
    st.integers(0, 10**6),
    st.integers(1, 3),
)


def test_letters_and_pairing():
    assert [p(1), q(1), p(2), q(2)] == [0, 1, 2, 3]
    assert parse_letter("q3") == q(3)
    assert contract("p1", "q1") == 1 and contract("q1", "p1") == -1
    assert contract("p1", "p2") == 0
    assert SymplecticSpace(3).dim == 6


@pytest.mark.parametrize("n,k", [(1, 4), (2, 2), (3, 2), (4, 2), (5, 3), (6, 2), (4, 4)])
def test_lyndon_counts_follow_witt(n, k):
    assert len(lyndon_words(n, k)) == witt(n, k)


def test_lyndon_basis_is_independent_lie():
    basis = lyndon_basis(4, 3)
    expansions = [expand_lie(b) for b in basis]
    assert all(is_lie(e) for e in expansions)
    assert all(lie_degree(b) == 4 for b in basis)
    assert tensor_rank(expansions) == len(basis) == witt(4, 3)
    assert lyndon_basis(2, 2) == [(0, 1)]


def test_parse_and_format_roundtrip():
    for text in ["(p1,q1,p2)", "((p1,q2),(p2,q1))", "((p1,(q1,p2)),q2,(p3,q3))", "(p1,q1)"]:
        t = parse_tree(text)
        again = parse_tree(format_tree(t))
        assert eta(t).terms == eta(again).terms


@pytest.mark.parametrize(
    "text,pos",
    [("(p1,q1", 6), ("(p1,x)", 4), ("((p1,q1,p2),q1)", 1), ("(p1,q1,p2) junk", 11), ("(p1)", 0)],
)
def test_parse_errors_carry_positions(text, pos):
    with pytest.raises(TreeParseError) as exc:
        parse_tree(text)
    assert exc.value.pos == pos


def test_tripod_eta_in_D():
    t = tripod("p1", "q1", "p2")
    assert t.order == 1
    assert is_in_D(eta(t))


def test_zero_leaf_gives_zero():
    assert eta(parse_tree("(p1,0,q2)")).is_zero()


def test_flip_negates():
    t = parse_tree("((p1,q2),(p2,q1))")
    for v in t.internal:
        assert (eta(t) + eta(t.flip(v))).is_zero()


def test_flip_rejects_leaves():
    with pytest.raises(TreeError):
        tripod("p1", "q1", "p2").flip(0)


def test_single_tensor_not_in_D():
    x = DerivationElement(1, {(p(1), p(1), p(1)): Fraction(1)})
    assert not is_in_D(x)


def test_zero_in_D():
    assert is_in_D(DerivationElement(2, {}))


@given(trees)
def test_eta_lands_in_D(t):
    assert is_in_D(eta(t))


@given(st.integers(2, 4), st.integers(0, 10**6))
def test_ihx_in_eta_coordinates(order, seed):
    t = random_tree(order, list(range(6)), random.Random(seed))
    for u in t.internal:
        for v in t.adj[u]:
            if len(t.adj[v]) == 3:
                a, b, c = ihx_triple(t, u, v)
                assert (eta(a) + eta(b) + eta(c)).is_zero()


def test_tripods_span_third_exterior_power():
    for g in (1, 2, 3):
        letters = list(range(2 * g))
        images = [eta(tripod(*c)).terms for c in combinations(letters, 3)]
        images += [eta(tripod(a, a, b)).terms for a in letters for b in letters]
        images = [x for x in images if x]
        assert (tensor_rank(images) if images else 0) == len(list(combinations(letters, 3)))


def test_bracket_of_noncontracting_tripods():
    t1, t2 = tripod("p1", "p2", "p3"), tripod("p1", "p2", "p3")
    assert bracket_trees(t1, t2) == []


@given(st.integers(0, 10**6))
def test_eta_is_lie_map(seed):
    rng = random.Random(seed)
    letters = list(range(4))
    t1 = random_tree(rng.randint(1, 2), letters, rng)
    t2 = random_tree(rng.randint(1, 2), letters, rng)
    lhs = eta_sum(bracket_trees(t1, t2), t1.order + t2.order)
    rhs = derivation_bracket(eta(t1), eta(t2))
    assert (lhs - rhs).is_zero()


@given(st.integers(0, 10**6))
def test_derivation_bracket_antisymmetry_and_jacobi(seed):
    rng = random.Random(seed)
    xs = [eta(random_tree(1, list(range(4)), rng)) for _ in range(3)]
    x, y, z = xs
    assert (derivation_bracket(x, y) + derivation_bracket(y, x)).is_zero()
    assert derivation_bracket(x, x).is_zero()
    j = (
        derivation_bracket(derivation_bracket(x, y), z)
        + derivation_bracket(derivation_bracket(y, z), x)
        + derivation_bracket(derivation_bracket(z, x), y)
    )
    assert j.is_zero()


def test_bracket_with_zero():
    x = eta(tripod("p1", "q1", "p2"))
    assert derivation_bracket(x, DerivationElement(1, {})).is_zero()


def test_derivation_bracket_rejects_non_members():
    bad = DerivationElement(1, {(p(1), p(1), p(1)): Fraction(1)})
    with pytest.raises(ValueError):
        derivation_bracket(bad, bad)


def test_consistency_error_is_arithmetic():
    assert issubclass(ConsistencyError, ArithmeticError)
