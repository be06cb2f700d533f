"""Linear-system derivation of the decomposition tables."""

import pytest

from noncross.decomp import (DecompositionTable, canonical_tuple, full_table,
                             tuple_rank)
from noncross.linsys import (EXPECTED_DIMENSION, check_system_against_table,
                             generate_equations, lower_count, production_table,
                             replay)
from noncross.refdata import reference_table
from noncross.typelabel import label


def L(*names):
    return tuple(label(s) for s in names)


@pytest.mark.parametrize("name", ["A2", "A3", "D4", "D5"])
def test_small_ambients_fully_determined(name):
    report = replay(name)
    assert report.dimension == 0
    assert report.pinned_values == {}
    expected = {k: v for k, v in full_table(name).entries.items() if v}
    assert report.final_table.entries == expected


def test_equations_satisfied_by_bruteforce_table():
    for name in ("A3", "D4", "D5", "E6"):
        system = generate_equations(name)
        failures = check_system_against_table(system, full_table(name))
        assert failures == [], (name, failures[:5])


def test_equations_satisfied_by_published_tables():
    for name in ("D6", "D7"):
        table = DecompositionTable(label(name), reference_table(name),
                                   provenance="published")
        failures = check_system_against_table(generate_equations(name), table)
        assert failures == [], (name, failures[:5])


def test_E6_replay():
    report = replay("E6")
    assert report.dimension == 1
    assert report.all_assertions_pass
    expected = {k: v for k, v in reference_table("E6").items() if v}
    assert report.final_table.entries == expected


def test_D6_replay():
    report = replay("D6")
    assert report.dimension == 2
    assert report.all_assertions_pass
    expected = {k: v for k, v in reference_table("D6").items() if v}
    assert report.final_table.entries == expected


def test_D7_replay_dimension_relaxation():
    # the equation families here determine one more unknown than the
    # published account kept free; anything <= the reported freedom is fine
    report = replay("D7")
    assert report.dimension <= EXPECTED_DIMENSION["D7"]
    if report.dimension < EXPECTED_DIMENSION["D7"]:
        assert any("below" in f for f in report.flags)
    assert report.all_assertions_pass
    expected = {k: v for k, v in reference_table("D7").items() if v}
    assert report.final_table.entries == expected


def test_lower_count_matches_bruteforce():
    from noncross.decomp import count_bruteforce
    assert lower_count(label("A2"), L("A1", "A1")) == \
        count_bruteforce("A2", L("A1", "A1"))
    assert lower_count(label("A1*A2"), L("A1", "A2")) > 0
    assert lower_count(label("0"), ()) == 1


def test_production_table_routes():
    assert production_table("A3").provenance != "linear-system"
    assert production_table("E6").provenance != "linear-system"


def test_variables_are_full_rank_tuples():
    system = generate_equations("E6")
    for key in system.variables:
        assert tuple_rank(key) == 6
        assert key == canonical_tuple(key)


def test_equation_budget_loose():
    system = generate_equations("E6")
    assert system.num_vars < 200
    assert system.num_rows > system.num_vars
