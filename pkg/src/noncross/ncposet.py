"""Posets of non-crossing partitions NC(W) and their m-divisible versions.

``NC`` is the interval below a (bipartite) Coxeter element c in the
absolute order, graded by reflection length.  Enumeration walks down
from c: the elements covered by w are exactly ``t_alpha * w`` for the
positive roots alpha in the moved space of w, so each BFS level is
produced without any filtering, and the moved root sets double as

* the order test:  u <=_T w  iff  moved(u) is a subset of moved(w)
  (the subspace map is injective and order-preserving on the interval;
  this is cross-checked against the definitional test in the test
  suite), and
* the parabolic type of the element (classification of the sub-root
  system spanned by the moved roots).

The m-divisible poset NC^m consists of minimal-length factorizations
c = w0 * w1 * ... * wm ordered componentwise (opposite order in the
coordinates 1..m); it is graded by the length of w0.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import exact
from .exact import SparsePolynomial, Z as _Z, M as _M
from .rootsystem import build_root_system
from .typelabel import TypeLabel, label, EMPTY_TYPE
from .weyl import (
    GroupElement, _reflection_data, _classify_moved_set,
    bipartite_coxeter, int_kernel,
)

CACHE_SCHEMA_VERSION = 1


class NcElement:
    """One element of NC: matrices, rank, moved roots and type."""

    __slots__ = ("key", "mat", "inv", "rank", "moved", "typ")

    def __init__(self, key, mat, inv, rank, moved, typ):
        self.key = key
        self.mat = mat
        self.inv = inv
        self.rank = rank
        self.moved = moved
        self.typ = typ

    def __repr__(self):
        return "<NcElement rank=%d type=%s>" % (self.rank, self.typ)


@dataclass
class NcPoset:
    """The full typed poset NC for one ambient type."""

    rs: object
    elements: dict               # key -> NcElement
    levels: list                 # levels[k] = list of NcElements of rank k
    by_type: dict                # TypeLabel -> list of NcElements
    identity: NcElement
    top: NcElement

    def __len__(self):
        return len(self.elements)

    def le(self, u, w):
        """u <=_T w via moved-root containment."""
        return u.moved <= w.moved

    def complement(self, u, w=None):
        """The complement u^{-1} w (default w = top), as a poset element."""
        wmat = self.top.mat if w is None else w.mat
        key = np.ascontiguousarray(u.inv @ wmat).tobytes()
        return self.elements[key]

    def rank_sizes(self):
        return [len(level) for level in self.levels]

    def pair_census(self):
        """Counts of (type(w), type(w^{-1} c)) over all elements.

        These are exactly the full-rank two-factor decomposition counts.
        """
        census = {}
        for el in self.elements.values():
            comp = self.complement(el)
            key = (el.typ, comp.typ)
            census[key] = census.get(key, 0) + 1
        return census


def _moved_root_indices(rs, mat, roots_arr, cartan_arr):
    """Positive-root indices inside im(w - I), exactly."""
    delta = (mat - np.eye(rs.n, dtype=np.int64)).tolist()
    kernel = int_kernel(delta)
    if not kernel:
        return frozenset(range(len(roots_arr)))
    bound = max(abs(x) for row in kernel for x in row)
    if bound < (1 << 40):
        karr = np.array(kernel, dtype=np.int64)
        proj = karr @ cartan_arr @ roots_arr.T
    else:  # exact fallback for outsized kernel entries
        karr = np.array(kernel, dtype=object)
        proj = karr @ np.array(cartan_arr, dtype=object) @ roots_arr.T.astype(object)
    mask = ~np.any(proj != 0, axis=0)
    return frozenset(int(i) for i in np.nonzero(mask)[0])


@lru_cache(maxsize=None)
def enumerate_nc(name):
    """Enumerate and type the poset NC for the named ambient.

    Walks down from the bipartite Coxeter element; each element stores
    its matrix, exact inverse, rank, moved positive roots and type.
    Every moved-root set is checked to belong to a single element.
    """
    rs = build_root_system(name)
    n = rs.n
    roots_arr, mats = _reflection_data(name)
    cartan_arr = rs.cartan
    c = bipartite_coxeter(rs)
    cinv = c.inverse()

    def make(mat, inv, rank):
        mat = np.ascontiguousarray(mat)
        inv = np.ascontiguousarray(inv)
        moved = _moved_root_indices(rs, mat, roots_arr, cartan_arr)
        typ, _ = _classify_moved_set(name, moved)
        if typ.rank != rank:
            raise AssertionError("type rank %d != BFS level %d" % (typ.rank, rank))
        return NcElement(mat.tobytes(), mat, inv, rank, moved, typ)

    top = make(c.mat, cinv.mat, n)
    elements = {top.key: top}
    levels = [[] for _ in range(n + 1)]
    levels[n].append(top)
    seen_moved = {top.moved: top.key}

    for k in range(n, 0, -1):
        for el in levels[k]:
            idx = sorted(el.moved)
            child_mats = mats[idx] @ el.mat
            child_invs = el.inv @ mats[idx]
            for cm, ci in zip(child_mats, child_invs):
                key = np.ascontiguousarray(cm).tobytes()
                if key in elements:
                    continue
                child = make(cm, ci, k - 1)
                if child.moved in seen_moved:
                    raise AssertionError("moved-root set shared by two elements")
                seen_moved[child.moved] = key
                elements[key] = child
                levels[k - 1].append(child)

    by_type = {}
    for el in elements.values():
        by_type.setdefault(el.typ, []).append(el)
    ident = levels[0][0]
    return NcPoset(rs=rs, elements=elements, levels=levels,
                   by_type=by_type, identity=ident, top=top)


# ---------------------------------------------------------------------------
# Moebius functions and characteristic polynomials


def mobius(poset, max_size=10_000):
    """Full Moebius function of a small poset: map (u_key, w_key) -> int.

    Works for any object exposing ``elements`` (iterable of items with a
    ``key`` and ``rank``) and ``le``.  Guarded by ``max_size``.
    """
    items = _sorted_items(poset)
    if len(items) > max_size:
        raise ResourceGuardError("poset size %d exceeds mobius guard %d"
                                 % (len(items), max_size))
    result = {}
    for i, u in enumerate(items):
        above = [w for w in items[i:] if poset.le(u, w)]
        mu = {u.key: 1}
        for w in above[1:]:
            total = 0
            for v in above:
                if v.key == w.key:
                    break
                if poset.le(v, w):
                    total += mu[v.key]
            mu[w.key] = -total
        for w_key, value in mu.items():
            result[(u.key, w_key)] = value
    return result


def _sorted_items(poset):
    items = list(poset.elements.values()) if isinstance(poset.elements, dict) \
        else list(poset.elements)
    items.sort(key=lambda e: e.rank)
    return items


class ResourceGuardError(RuntimeError):
    """A computation was refused because it exceeds a size guard."""


def mobius_from_top(poset):
    """mu(u, top) for every u, by downward recursion."""
    items = _sorted_items(poset)
    items.reverse()                       # descending rank
    mu = {items[0].key: 1}
    for i, u in enumerate(items[1:], start=1):
        total = 0
        for v in items[:i]:
            if poset.le(u, v):
                total += mu[v.key]
        mu[u.key] = -total
    return mu


def characteristic_direct(poset):
    """chi*(y) = sum_u mu(u, c) y^{rank u}, by direct Moebius values."""
    mu = mobius_from_top(poset)
    result = exact.ZERO
    for el in poset.elements.values():
        result = result + SparsePolynomial.variable("y", el.rank) * mu[el.key]
    return result


@lru_cache(maxsize=None)
def _chi_star_irreducible(name):
    """chi* of NC for an irreducible ambient, by the two-factor recursion.

    chi*(y) = sum over factorizations c = u (u^{-1} c) of
    N(type u, type u^{-1}c) * mu(type of complement) * y^{rank u},
    with the ambient's own Moebius value solved from chi*(1) = 0.
    """
    poset = enumerate_nc(name)
    census = poset.pair_census()
    result = exact.ZERO
    ambient = label(name)
    for (t_low, t_comp), count in census.items():
        if t_comp == ambient:             # u = identity: the mu(ambient) term
            continue
        term = count * _mobius_number(t_comp)
        result = result + SparsePolynomial.variable("y", t_low.rank) * term
    mu_ambient = -result.evaluate(y=1)
    return result + exact.poly(mu_ambient)


@lru_cache(maxsize=None)
def _mobius_number(t):
    """mu(0,1) of NC of the given type; multiplicative over components."""
    if t.is_empty:
        return Fraction(1)
    value = Fraction(1)
    for comp in t.irreducibles():
        chi = _chi_star_irreducible(str(comp))
        value *= chi.coefficient(y=0).evaluate()
    return value


def characteristic_polynomial(t):
    """chi* of NC of any (possibly reducible) type, recursion route."""
    if isinstance(t, str):
        t = label(t)
    if t.is_empty:
        return exact.ONE
    result = exact.ONE
    for comp in t.irreducibles():
        result = result * _chi_star_irreducible(str(comp))
    return result


# ---------------------------------------------------------------------------
# zeta polynomials


def zeta_direct(poset, z):
    """Number of multichains x_1 <= ... <= x_{z-1}, counted exactly."""
    if z < 1:
        raise ValueError("z must be >= 1")
    if z == 1:
        return 1
    items = _sorted_items(poset)
    counts = [1] * len(items)
    for _ in range(z - 2):
        new = []
        for i, w in enumerate(items):
            total = 0
            for j, u in enumerate(items[:i + 1]):
                if poset.le(u, w):
                    total += counts[j]
            new.append(total)
        counts = new
    return sum(counts)


def zeta_closed(t, m=1):
    """Closed-form zeta polynomial of NC^m of the given type, in z.

    ``m`` may be an integer or the symbol ``"m"`` for the fully symbolic
    two-variable version.  For each irreducible component with Coxeter
    number h and degrees d_i the factor is prod_i ((z-1) m h + d_i)/d_i;
    components multiply.
    """
    if isinstance(t, str):
        t = label(t)
    m_poly = _M if m == "m" else exact.poly(m)
    result = exact.ONE
    for comp in t.irreducibles():
        rs = build_root_system(str(comp))
        h = rs.coxeter_number
        for d in rs.degrees:
            result = result * ((_Z - 1) * m_poly * h + d) * Fraction(1, d)
    return result


def ncm_cardinality(t, m):
    """|NC^m| for the given type: the closed-form zeta at z = 2."""
    value = zeta_closed(t, m).evaluate(z=2)
    if value.denominator != 1:
        raise AssertionError("non-integral NC^m cardinality")
    return int(value)


# ---------------------------------------------------------------------------
# m-divisible non-crossing partitions


class NcmElement:
    """Element of NC^m: the tuple (w1,...,wm); w0 is implied."""

    __slots__ = ("key", "parts", "rank")

    def __init__(self, parts, rank):
        self.parts = parts
        self.rank = rank
        self.key = tuple(p.key for p in parts)

    def __repr__(self):
        return "<NcmElement rank=%d>" % self.rank


@dataclass
class NcmPoset:
    """NC^m with componentwise-opposite order in coordinates 1..m."""

    nc: NcPoset
    m: int
    elements: list

    def __len__(self):
        return len(self.elements)

    def le(self, u, w):
        """u <= w  iff  w_i <=_T u_i for every coordinate i >= 1."""
        return all(wp.moved <= up.moved
                   for up, wp in zip(u.parts, w.parts))


def build_ncm(name, m, guard=100_000):
    """Enumerate NC^m: minimal factorizations c = w0 w1 ... wm.

    A tuple is produced by choosing w1 below c, then w2 below the
    complement w1^{-1} c, and so on; minimality of the total length is
    automatic.  The rank of a tuple is the length of w0.  Refuses
    (ResourceGuardError) when the closed-form cardinality exceeds
    ``guard``.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    poset = enumerate_nc(name)
    expected = ncm_cardinality(label(name), m)
    if expected > guard:
        raise ResourceGuardError("|NC^m| = %d exceeds guard %d"
                                 % (expected, guard))
    n = poset.rs.n
    elements = []
    prefix = []

    def descend(rest, depth):
        if depth == m:
            rank = n - sum(p.rank for p in prefix)
            elements.append(NcmElement(tuple(prefix), rank))
            return
        for u in poset.elements.values():
            if u.moved <= rest.moved:
                prefix.append(u)
                descend(poset.complement(u, rest), depth + 1)
                prefix.pop()

    descend(poset.top, 0)
    if len(elements) != expected:
        raise AssertionError("NC^m size %d != closed form %d"
                             % (len(elements), expected))
    return NcmPoset(nc=poset, m=m, elements=elements)


# ---------------------------------------------------------------------------
# poset cache files


def write_cache(poset, path):
    """Write an enumerated poset to a versioned record stream.

    One JSON object per line: a header with the schema version, ambient
    label and Coxeter matrix, then one record per element with the
    row-major matrix, rank and type.  The write is atomic (temp file +
    rename).
    """
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            header = {
                "schema_version": CACHE_SCHEMA_VERSION,
                "ambient": str(poset.rs.typ),
                "coxeter": poset.top.mat.reshape(-1).tolist(),
            }
            handle.write(json.dumps(header) + "\n")
            for level in poset.levels:
                for el in level:
                    record = {
                        "mat": el.mat.reshape(-1).tolist(),
                        "rank": el.rank,
                        "type": str(el.typ),
                    }
                    handle.write(json.dumps(record) + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


class CacheFormatError(ValueError):
    """The cache file is missing, malformed, or has a wrong version."""


def read_cache(path, expected_ambient=None):
    """Rebuild a typed poset from a cache file written by write_cache.

    Matrices are taken from the file; ranks/types are revalidated while
    the moved-root sets (needed for the order relation) are recomputed.
    """
    with open(path) as handle:
        try:
            header = json.loads(handle.readline())
        except json.JSONDecodeError as err:
            raise CacheFormatError("bad cache header: %s" % err) from None
        if header.get("schema_version") != CACHE_SCHEMA_VERSION:
            raise CacheFormatError("unsupported cache schema %r"
                                   % header.get("schema_version"))
        name = header.get("ambient")
        if expected_ambient is not None and name != str(expected_ambient):
            raise CacheFormatError("cache is for ambient %r, expected %r"
                                   % (name, str(expected_ambient)))
        rs = build_root_system(name)
        n = rs.n
        roots_arr, _ = _reflection_data(name)
        elements = {}
        levels = [[] for _ in range(n + 1)]
        for line in handle:
            record = json.loads(line)
            mat = np.array(record["mat"], dtype=np.int64).reshape(n, n)
            inv = GroupElement(rs, mat).inverse().mat
            moved = _moved_root_indices(rs, mat, roots_arr, rs.cartan)
            typ, _ = _classify_moved_set(name, moved)
            if str(typ) != record["type"] or typ.rank != record["rank"]:
                raise CacheFormatError("cache record does not revalidate")
            el = NcElement(mat.tobytes(), mat, inv, record["rank"], moved, typ)
            elements[el.key] = el
            levels[el.rank].append(el)
    by_type = {}
    for el in elements.values():
        by_type.setdefault(el.typ, []).append(el)
    poset = NcPoset(rs=rs, elements=elements, levels=levels, by_type=by_type,
                    identity=levels[0][0], top=levels[n][0])
    if len(poset) != ncm_cardinality(label(name), 1):
        raise CacheFormatError("cache element count does not match")
    return poset


def load_or_enumerate(name, cache_dir=None):
    """Enumerate NC, using a cache directory when one is given."""
    if cache_dir is None:
        return enumerate_nc(name)
    path = os.path.join(cache_dir, "nc_%s.jsonl" % name)
    if os.path.exists(path):
        try:
            return read_cache(path, expected_ambient=name)
        except CacheFormatError:
            pass  # fall through and regenerate
    poset = enumerate_nc(name)
    write_cache(poset, path)
    return poset
