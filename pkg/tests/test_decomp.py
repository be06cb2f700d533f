"""Decomposition numbers: brute force, closed forms, product rule, tables."""

import pytest

from noncross.decomp import (DecompositionTable, all_labels_of_rank,
                             all_tuples_of_rank, canonical_tuple,
                             count_bruteforce, count_product, count_typeA,
                             full_table, make_bruteforce_memo, orderings,
                             special_values, tuple_rank)
from noncross.refdata import reference_table
from noncross.rootsystem import build_root_system
from noncross.typelabel import label


def L(*names):
    return tuple(label(s) for s in names)


def test_canonical_tuple_sorts():
    assert canonical_tuple(L("A2", "A1", "A1")) == L("A1", "A1", "A2")
    assert tuple_rank(L("A1", "D4")) == 5


def test_orderings_multinomial():
    assert orderings(L("A1", "A1", "A2")) == 3      # 3!/2!
    assert orderings(L("A1", "A2", "D4")) == 6
    assert orderings(()) == 1


def test_permutation_invariance():
    a = count_bruteforce("D4", L("A1", "A1", "A2"))
    b = count_bruteforce("D4", L("A2", "A1", "A1"))
    assert a == b


def test_single_factor_counts_elements_of_type():
    # N(T) with rk T = n counts rank-n elements of that type
    assert count_bruteforce("A3", L("A3")) == 1
    assert count_bruteforce("D4", L("D4")) == 1
    # the three rank-3 elements of type A1^3 in NC(D4)
    assert count_bruteforce("D4", L("A1^3")) == 3


def test_empty_tuple_is_one():
    assert count_bruteforce("A3", ()) == 1


def test_typeA_closed_form_small():
    # classical: factorizations of an (n+1)-cycle into n transpositions
    # number (n+1)^(n-1)
    for n in (2, 3, 4):
        assert count_typeA(n, L(*(["A1"] * n))) == (n + 1) ** (n - 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_typeA_closed_form_vs_bruteforce(n):
    name = "A%d" % n
    memo = make_bruteforce_memo()
    for s in range(0, n + 1):
        for key in all_tuples_of_rank(s):
            if any(f != "A" for t in key for f, _ in t.components):
                continue
            assert count_typeA(n, key) == count_bruteforce(name, key,
                                                           _memo=memo)


def test_product_rule_reducible_ambient():
    # N_{A1*A2}(T1,T2) must match direct brute force over the tuple splits
    factors = (full_table("A1"), full_table("A2"))
    assert count_product(factors, L("A1", "A2")) == \
        count_bruteforce("A1", L("A1")) * count_bruteforce("A2", L("A2"))
    # three choices of which tuple slot lands in the A1 component
    value = count_product(factors, L("A1", "A1", "A1"))
    expected = 3 * (count_bruteforce("A1", L("A1"))
                    * count_bruteforce("A2", L("A1", "A1")))
    assert value == expected


def test_all_labels_of_rank():
    assert set(map(str, all_labels_of_rank(1))) == {"A1"}
    assert set(map(str, all_labels_of_rank(2))) == {"A1^2", "A2"}
    assert set(map(str, all_labels_of_rank(3))) == {"A1^3", "A1*A2", "A3"}
    assert label("D4") in all_labels_of_rank(4)


def test_all_tuples_of_rank():
    tuples2 = list(all_tuples_of_rank(2))
    assert canonical_tuple(L("A1", "A1")) in tuples2
    assert canonical_tuple(L("A2")) in tuples2
    assert canonical_tuple(L("A1^2")) in tuples2
    for key in all_tuples_of_rank(3):
        assert tuple_rank(key) == 3
        assert key == canonical_tuple(key)


def test_lookup_deficient_expansion():
    # N(U) for rk U < n must equal the sum over one full-rank completion
    table = full_table("A3")
    direct = count_bruteforce("A3", L("A1",))
    assert table.lookup(L("A1",)) == direct
    assert table.lookup(()) == 1
    assert table.lookup(L("D4",)) == 0


def test_special_values_match_bruteforce():
    for name in ("A3", "D4", "D5"):
        rs = build_root_system(name)
        for key, value in special_values(name).items():
            assert value == count_bruteforce(name, key), (name, key)
        # sanity of the classical anchors
        n, h = rs.n, rs.coxeter_number
        sv = special_values(name)
        assert sv[canonical_tuple(L(name))] == 1
        assert sv[canonical_tuple(L("A1"))] == rs.num_positive_roots


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "D4"])
def test_full_table_matches_reference(name):
    computed = {k: v for k, v in full_table(name).entries.items() if v}
    published = {k: v for k, v in reference_table(name).items() if v}
    assert computed == published


def test_table_rejects_overfull_rank():
    table = full_table("A2")
    assert table.lookup(L("A2", "A1")) == 0
