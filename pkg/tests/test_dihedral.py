from collections import Counter
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jtrace.dihedral import (
    TABLE_COLUMNS,
    ConsistencyError,
    brute_force_coinvariants,
    character_table_check,
    coinvariant_multiplicity,
    dihedral_classes,
    dihedral_elements,
    gl_sp_dictionary,
    hs_decomposition,
    order_2p_cycle_types,
    predicted_coinvariants,
    printed_table_entry,
    series_probe,
    two_row_closed_form,
)
from jtrace.symfunc import cycle_type, mn_character, partitions


def _direct_average(s, lam, twist):
    # sum over all 2s group elements, no class bookkeeping
    total = sum((sign if twist else 1) * mn_character(lam, cycle_type(g)) for g, sign in dihedral_elements(s))
    return Fraction(total, 2 * s)


@pytest.mark.parametrize("s", range(3, 11))
def test_class_table_matches_elements(s):
    table = dihedral_classes(s)
    assert table.order() == 2 * s
    elems = Counter((sign, cycle_type(g)) for g, sign in dihedral_elements(s))
    from_table = Counter()
    for c in table.classes:
        from_table[(c.twist_sign, c.cycle_type)] += c.size
    assert elems == from_table


def test_small_s_rejected():
    with pytest.raises(ValueError):
        dihedral_classes(2)


@given(st.integers(3, 8), st.booleans(), st.data())
def test_multiplicity_equals_direct_average(s, twist, data):
    lam = data.draw(st.sampled_from(list(partitions(s))))
    assert coinvariant_multiplicity(s, lam, twist) == _direct_average(s, lam, twist)


def test_spot_values():
    assert coinvariant_multiplicity(5, (4, 1), twist=False) == 0
    assert coinvariant_multiplicity(5, (5,), twist=False) == 1
    assert coinvariant_multiplicity(4, (1, 1, 1, 1), twist=True) == 0
    with pytest.raises(ValueError):
        coinvariant_multiplicity(4, (3, 2), twist=False)


def test_published_tables():
    assert hs_decomposition(4).nonzero() == {(2, 1, 1): 1}
    assert hs_decomposition(5).nonzero() == {(5,): 1, (3, 2): 1, (2, 2, 1): 1, (1, 1, 1, 1, 1): 1}
    assert hs_decomposition(6).nonzero() == {
        (3, 3): 1,
        (4, 1, 1): 2,
        (3, 2, 1): 1,
        (3, 1, 1, 1): 1,
        (2, 2, 1, 1): 1,
    }
    assert hs_decomposition(4).twist and not hs_decomposition(5).twist


def test_sp_relabelling_keeps_entries():
    t = hs_decomposition(6)
    sp = gl_sp_dictionary(t)
    assert sp.group == "SP" and sp.entries == t.entries


@pytest.mark.parametrize("s", range(3, 14))
def test_series(s):
    assert series_probe(s, "sign") == int(s % 4 == 1)
    assert series_probe(s, "trivial") == s % 2
    assert series_probe(s, "tworow") == 0


@pytest.mark.parametrize("s", range(3, 14))
def test_hook2_vanishes_off_multiples_of_four(s):
    # at s = 0 mod 4 the twisted average is 1; the s=4 table above shows [2,1,1]
    assert series_probe(s, "hook2") == int(s % 4 == 0)


def test_series_errors():
    with pytest.raises(ValueError):
        series_probe(5, "bogus")
    with pytest.raises(ValueError):
        series_probe(2, "sign")


@pytest.mark.parametrize("s,n", [(s, n) for s in range(3, 8) for n in range(1, 4) if n**s <= 3**7])
def test_brute_force_matches_prediction(s, n):
    for twist in (False, True):
        assert brute_force_coinvariants(s, n, twist) == predicted_coinvariants(s, n, twist)


def test_brute_force_edge_cases():
    assert brute_force_coinvariants(4, 1, True) == 0
    assert brute_force_coinvariants(5, 1, False) == 1


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_table_columns_other_than_ab(p):
    for c in character_table_check(p):
        if c.column != "ab":
            assert c.matches, c


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_ab_column_counts_two_cycles(p):
    # ab has p-1 two-cycles and two fixed points
    assert order_2p_cycle_types(p)["ab"] == (2,) * (p - 1) + (1, 1)
    for k in range(2, p + 1):
        m = k // 2
        want = comb(p - 1, m) - comb(p - 1, m - 1)
        assert mn_character((2 * p - k, k), order_2p_cycle_types(p)["ab"]) == want


def test_first_row_ab_entry():
    for p in (3, 5, 7):
        assert printed_table_entry(p, 1, "ab") == mn_character((2 * p - 1, 1), order_2p_cycle_types(p)["ab"])


def test_table_has_six_columns():
    assert len(TABLE_COLUMNS) == 6


@pytest.mark.parametrize("p,k", [(7, 3), (11, 3), (11, 5), (13, 3), (13, 5)])
def test_order_p_odd_k(p, k):
    r = two_row_closed_form(p, k, "p")
    assert r.matches and r.closed_form == Fraction(comb(p, k) - comb(p, k - 1), 2 * p)


@pytest.mark.parametrize("p,k", [(5, 2), (7, 2), (11, 2), (11, 4)])
def test_order_p_even_k_reports_discrepancy(p, k):
    r = two_row_closed_form(p, k, "p")
    assert not r.matches
    assert r.extra["alpha_plus_p_beta_over_2p"] == r.character_sum


@pytest.mark.parametrize("p", [3, 5, 7])
def test_order_2p_rebuilt_sum(p):
    for k in range(2, p + 1):
        r = two_row_closed_form(p, k, "2p")
        assert r.extra["rebuilt_from_class_table"] == r.character_sum


def test_order_2p_printed_form_reported():
    r = two_row_closed_form(3, 3, "2p")
    assert not r.matches and r.closed_form == Fraction(-1, 4)


def test_closed_form_guards():
    with pytest.raises(ValueError):
        two_row_closed_form(9, 3)
    with pytest.raises(ValueError):
        two_row_closed_form(7, 4, "p")
    with pytest.raises(ValueError):
        two_row_closed_form(7, 3, "q")


def test_consistency_error_type():
    assert issubclass(ConsistencyError, ArithmeticError)
