"""Acceptance gate: one test per acceptance criterion, exact tolerances.

The heavyweight E7/E8 objects are computed once per session through the
module-level caches in the library.
"""

import time
from math import comb

import pytest

from conftest import extended
from noncross import exact
from noncross.decomp import (all_tuples_of_rank, canonical_tuple,
                             count_bruteforce, count_typeA, full_table,
                             make_bruteforce_memo)
from noncross.linsys import EXPECTED_DIMENSION, production_table, replay
from noncross.ncposet import (build_ncm, characteristic_direct,
                              characteristic_polynomial, enumerate_nc,
                              zeta_closed, zeta_direct)
from noncross.refdata import (CHI_STAR_COEFFS, chi_star_reference,
                              golden_dual, reference_table)
from noncross.rootsystem import build_root_system
from noncross.triangles import (assemble_dual, fm_transform, mtriangle_direct,
                                reciprocity_check, zeta_identity_check)
from noncross.typelabel import label
from noncross.weyl import absolute_length, reflection_matrices, reflection_orbits

import numpy as np


def L(*names):
    return tuple(label(s) for s in names)


def nonzero(table_dict):
    return {k: v for k, v in table_dict.items() if v}


# 1. golden corpus: brute force reproduces every tabulated value ------------

def test_01_golden_tables_core():
    start = time.time()
    for name in ("A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6"):
        computed = nonzero(full_table(name).entries)
        published = nonzero(reference_table(name))
        assert computed == published, name
    assert time.time() - start < 120


@extended
def test_01_golden_tables_extended():
    start = time.time()
    for name in ("A6", "A7", "D6", "D7"):
        computed = nonzero(full_table(name).entries)
        published = nonzero(reference_table(name))
        assert computed == published, name
    assert time.time() - start < 1800


# 2. type-A closed form equals brute force on every tuple, n <= 5 -----------

def test_02_typeA_closed_form():
    for n in range(1, 6):
        name = "A%d" % n
        memo = make_bruteforce_memo()
        for s in range(0, n + 1):
            for key in all_tuples_of_rank(s):
                if any(f != "A" for t in key for f, _ in t.components):
                    continue
                assert count_typeA(n, key) == \
                    count_bruteforce(name, key, _memo=memo), (name, key)


# 3. characteristic polynomials, both routes, all 14 ambients ---------------

def test_03_characteristic_polynomials():
    start = time.time()
    for name in CHI_STAR_COEFFS:
        published = chi_star_reference(name)
        assert characteristic_polynomial(label(name)) == published, name
        if label(name).rank <= 6:
            assert characteristic_direct(enumerate_nc(name)) == \
                published, name
    assert time.time() - start < 900


# 4. zeta polynomials: multichain counts equal the closed forms -------------

def test_04_zeta_polynomials():
    for name in ("A1", "A2", "A3", "A4", "D4"):
        poset = enumerate_nc(name)
        closed = zeta_closed(label(name))
        for z in range(1, 6):
            assert zeta_direct(poset, z) == closed.evaluate(z=z), (name, z)
    for name, mmax in (("A2", 3), ("A3", 2)):
        for m in range(1, mmax + 1):
            ncm = build_ncm(name, m)
            closed = zeta_closed(label(name), m=m)
            for z in range(1, 5):
                assert zeta_direct(ncm, z) == closed.evaluate(z=z)


# 5. the zeta / decomposition-number identity, symbolically in z and m ------

def test_05_zeta_identity():
    for name in ("A2", "A3", "D4"):
        diff = zeta_identity_check(name, full_table(name))
        assert not diff.terms, name


# 6. assembled M-triangle equals the direct Moebius M-triangle --------------

def test_06_mtriangle_oracle():
    start = time.time()
    for name, mmax in (("A3", 3), ("D4", 2)):
        mt = assemble_dual(name, full_table(name))
        for m in range(1, mmax + 1):
            assert mt.at(m) == mtriangle_direct(build_ncm(name, m)), (name, m)
    assert time.time() - start < 60


# 7/8. exceptional headline polynomials ------------------------------------

def test_07_E7_headline():
    start = time.time()
    mt = assemble_dual("E7", production_table("E7"))
    assert mt.dual - golden_dual("E7") == exact.ZERO
    assert time.time() - start < 300


def test_08_E8_headline():
    start = time.time()
    table = production_table("E8")
    mt = assemble_dual("E8", table)
    assert mt.dual - golden_dual("E8") == exact.ZERO
    # the spot values that replace the long direct computation
    assert table.lookup(L("D4")) == 325
    assert table.lookup(L("D4", "A4")) == 15
    assert table.lookup(L("A4", "A1*A3")) == 390
    assert table.lookup(L("A5", "A1*A2")) == 390
    assert table.lookup(L("D5", "A1*A2")) == 195
    assert time.time() - start < 3600


# 9. E7 pin values by brute force -------------------------------------------

def test_09_E7_pins_bruteforce():
    memo = make_bruteforce_memo()
    assert count_bruteforce("E7", L("A1^4", "A1^3"), _memo=memo) == 9
    assert count_bruteforce("E7", L("A1^2*A2", "A1^3"), _memo=memo) == 54


# 10. linear-system replay ---------------------------------------------------

def test_10_linear_system_replay():
    for name in ("E6", "D6", "D7", "E7", "E8"):
        report = replay(name)
        expected_dim = EXPECTED_DIMENSION[name]
        assert report.dimension <= expected_dim, name
        if report.dimension < expected_dim:
            # extra independent relations are acceptable, but flagged
            assert report.flags, name
        else:
            assert report.dimension == expected_dim
        assert report.all_assertions_pass, \
            (name, [d for d, ok in report.congruence_assertions if not ok])
        published = nonzero(reference_table(name))
        assert report.final_table.entries == published, name


# 11. reflection-orbit sizes under Coxeter conjugation -----------------------

def expected_orbit_size(name, product_type, h):
    family, n = label(name).components[0]
    pt = str(product_type)
    if family == "A":
        half = "0" if n == 1 else "A%d^2" % ((n - 1) // 2)
        full = not (n % 2 == 1 and pt == half)
    elif family == "D":
        full = (n % 2 == 1 and pt == "A%d" % (n - 1))
    elif name == "E6":
        full = pt in ("D5", "A1*A4")
    else:
        full = False
    return h if full else h // 2


def test_11_orbit_case_table():
    multisets = {"E6": [6, 6, 12, 12], "E7": [9] * 7,
                 "E8": [15] * 8, "D6": [5] * 6}
    for name, sizes in multisets.items():
        orbits = reflection_orbits(build_root_system(name))
        assert sorted(o["size"] for o in orbits) == sizes, name
    for name in ("A1", "A2", "A3", "A4", "A5", "A6", "A7",
                 "D4", "D5", "D6", "D7", "E6", "E7", "E8"):
        rs = build_root_system(name)
        for o in reflection_orbits(rs):
            assert o["size"] == expected_orbit_size(
                name, o["product_type"], rs.coxeter_number), name


# 12. reciprocity of the symbolic M-triangles --------------------------------

def test_12_reciprocity():
    for name in ("A1", "A2", "A3", "A4", "A5", "D4", "D5",
                 "E6", "E7", "E8"):
        mt = assemble_dual(name, production_table(name))
        assert not reciprocity_check(mt).terms, name


# 13. F=M transform gives valid F-triangles for E7, E8 ------------------------

def test_13_fm_transform_exceptional():
    for name in ("E7", "E8"):
        mt = assemble_dual(name, production_table(name))
        for m in (1, 2, 3):
            cand = fm_transform(mt, m)
            assert cand.problems() == [], (name, m)


# 14. absolute length equals Cayley-graph distance ----------------------------

def test_14_absolute_length_oracle():
    start = time.time()
    for name in ("A3", "D4"):
        rs = build_root_system(name)
        mats = reflection_matrices(rs)
        eye = np.eye(rs.n, dtype=np.int64)
        dist = {eye.tobytes(): 0}
        frontier = [eye]
        d = 0
        while frontier:
            d += 1
            new = []
            for w in frontier:
                for t in mats:
                    v = t @ w
                    k = v.tobytes()
                    if k not in dist:
                        dist[k] = d
                        new.append(v)
                        assert absolute_length(rs, v) == d
            frontier = new
        assert len(dist) == rs.group_order
    assert time.time() - start < 60
