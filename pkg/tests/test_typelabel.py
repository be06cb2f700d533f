"""Type labels: parsing, canonical form, ordering."""

import pytest

from noncross.typelabel import TypeLabel, label


def test_parse_irreducible():
    t = label("E6")
    assert t.rank == 6
    assert t.is_irreducible
    assert str(t) == "E6"


def test_parse_product_canonical_order():
    assert str(label("A2*A1*A1")) == "A1^2*A2"
    assert str(label("A1^2*A2")) == "A1^2*A2"
    assert label("A2*A1*A1") == label("A1*A2*A1")


def test_empty_label():
    t = label("0")
    assert t.is_empty
    assert t.rank == 0
    assert str(t) == "0"


def test_rank_additive():
    assert label("A1^3*D4").rank == 7


def test_components_roundtrip():
    t = label("A1^2*A3*D5")
    rebuilt = TypeLabel(t.components)
    assert rebuilt == t
    irr = t.irreducibles()
    assert [str(c) for c in irr] == ["A1", "A1", "A3", "D5"]


def test_product_operator():
    assert label("A1") * label("D4") == label("A1*D4")


def test_ordering_by_rank_first():
    assert label("A1") < label("A2")
    assert label("A2") < label("A1^3")
    assert sorted([label("D4"), label("A1"), label("A2^2")])[0] == label("A1")


def test_low_rank_d_synonyms_collapse():
    assert label("D3") == label("A3")
    assert label("D2") == label("A1^2")


def test_bad_labels_rejected():
    for bad in ("X9", "A", "A0", "E9", "A1**2"):
        with pytest.raises((ValueError, KeyError)):
            label(bad)


def test_hashable_and_dict_key():
    d = {label("A1*A2"): 5}
    assert d[label("A2*A1")] == 5
