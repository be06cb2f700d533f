"""Weyl group elements, absolute length, Coxeter conjugation orbits."""

import numpy as np
import pytest

from noncross.rootsystem import build_root_system
from noncross.typelabel import label
from noncross.weyl import (GroupElement, absolute_length, bipartite_coxeter,
                           classify_parabolic_type, enumerate_group, identity,
                           le_absolute, reflection, reflection_matrices,
                           reflection_orbits)


def bfs_with_matrices(rs):
    """Independent Cayley-graph BFS keeping the group matrices."""
    mats = reflection_matrices(rs)
    eye = np.eye(rs.n, dtype=np.int64)
    dist = {eye.tobytes(): (0, eye)}
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
                    dist[k] = (d, v)
                    new.append(v)
        frontier = new
    return dist


@pytest.mark.parametrize("name", ["A2", "A3", "D4"])
def test_absolute_length_equals_cayley_distance(name):
    rs = build_root_system(name)
    dist = bfs_with_matrices(rs)
    assert len(dist) == rs.group_order
    for d, mat in dist.values():
        assert absolute_length(rs, mat) == d


def test_enumerate_group_matches_group_order():
    rs = build_root_system("A3")
    assert len(enumerate_group(rs)) == 24


def test_reflections_are_involutions():
    rs = build_root_system("D4")
    for i in range(rs.num_positive_roots):
        t = reflection(rs, i)
        assert t * t == identity(rs)
        assert absolute_length(rs, t) == 1


def test_bipartite_coxeter_order_and_length():
    for name in ("A3", "D4", "E6"):
        rs = build_root_system(name)
        c = bipartite_coxeter(rs)
        assert absolute_length(rs, c) == rs.n
        power = identity(rs)
        order = 0
        while True:
            power = power * c
            order += 1
            if power == identity(rs):
                break
        assert order == rs.coxeter_number


def test_classify_identity_and_coxeter():
    rs = build_root_system("D5")
    c = bipartite_coxeter(rs)
    assert classify_parabolic_type(rs, identity(rs), coxeter=c).is_empty
    assert classify_parabolic_type(rs, c, coxeter=c) == label("D5")
    assert classify_parabolic_type(rs, reflection(rs, 0), coxeter=c) == label("A1")


def test_le_absolute_reflections_below_coxeter():
    rs = build_root_system("A3")
    c = bipartite_coxeter(rs)
    for i in range(rs.num_positive_roots):
        assert le_absolute(rs, reflection(rs, i), c)


def test_classify_rejects_non_noncrossing():
    rs = build_root_system("A2")
    c = bipartite_coxeter(rs)
    cinv = GroupElement(rs, c.inverse().mat)
    if not le_absolute(rs, cinv, c):
        with pytest.raises(ValueError):
            classify_parabolic_type(rs, cinv, coxeter=c)


# ---------------------------------------------------------------------------
# orbit sizes of reflections under conjugation by the Coxeter element


def expected_orbit_size(name, product_type, h):
    """Published case rule for |orbit(t)| in terms of type(t*c)."""
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


ORBIT_AMBIENTS = ["A1", "A2", "A3", "A4", "A5", "A6", "A7",
                  "D4", "D5", "D6", "D7", "E6", "E7", "E8"]


@pytest.mark.parametrize("name", ORBIT_AMBIENTS)
def test_orbit_case_table(name):
    rs = build_root_system(name)
    h = rs.coxeter_number
    orbits = reflection_orbits(rs)
    assert sum(o["size"] for o in orbits) == rs.num_positive_roots
    for o in orbits:
        assert o["size"] == expected_orbit_size(name, o["product_type"], h)


def test_orbit_size_multisets():
    expected = {"E6": [6, 6, 12, 12], "E7": [9] * 7,
                "E8": [15] * 8, "D6": [5] * 6}
    for name, sizes in expected.items():
        orbits = reflection_orbits(build_root_system(name))
        assert sorted(o["size"] for o in orbits) == sizes
