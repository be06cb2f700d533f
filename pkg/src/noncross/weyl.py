"""Weyl group elements as exact integer matrices in the simple-root basis.

The reflection length (absolute length) of an element is the codimension
of its fixed space, computed as the exact integer rank of ``w - I``.
The absolute order ``u <=_T w`` holds when lengths add up along the
factorization ``w = u * (u^{-1} w)``.

All linear algebra here is exact: ranks and kernels via fraction-free /
rational elimination over Python integers, never floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

from .rootsystem import build_root_system, classify_diagram, DynkinDiagram
from .typelabel import TypeLabel


# ---------------------------------------------------------------------------
# exact small-matrix linear algebra


def int_rank(rows):
    """Exact rank of a small integer matrix (list of row lists).

    Fraction-free (Bareiss-style cross multiplication); destructive on
    its argument copy only.
    """
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    if m == 0:
        return 0
    n = len(a[0])
    rank = 0
    row = 0
    for col in range(n):
        pivot = None
        for r in range(row, m):
            if a[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        pv = a[row][col]
        for r in range(row + 1, m):
            f = a[r][col]
            if f:
                ar, ap = a[r], a[row]
                for c in range(col, n):
                    ar[c] = ar[c] * pv - f * ap[c]
        rank += 1
        row += 1
        if row == m:
            break
    return rank


def int_kernel(rows):
    """Integer basis of the right kernel of an integer matrix.

    Returns a list of integer vectors (each cleared of denominators and
    divided by content) spanning ``ker`` over the rationals.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    row = 0
    for col in range(n):
        pivot = None
        for r in range(row, m):
            if a[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        inv = 1 / a[row][col]
        a[row] = [x * inv for x in a[row]]
        for r in range(m):
            if r != row and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -a[r][fc]
        denom = 1
        for x in vec:
            denom = denom * x.denominator // _gcd(denom, x.denominator)
        ivec = [int(x * denom) for x in vec]
        g = 0
        for x in ivec:
            g = _gcd(g, abs(x))
        if g > 1:
            ivec = [x // g for x in ivec]
        basis.append(ivec)
    return basis


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# group elements


class GroupElement:
    """An element of the Weyl group: an integer matrix, hashable.

    ``mat`` acts on root coordinates (columns are images of the simple
    roots).  The matrix is stored as a read-only int64 numpy array.
    """

    __slots__ = ("mat", "_key", "_inv", "_rs")

    def __init__(self, rs, mat):
        mat = np.asarray(mat, dtype=np.int64)
        mat.flags.writeable = False
        object.__setattr__(self, "mat", mat)
        object.__setattr__(self, "_key", mat.tobytes())
        object.__setattr__(self, "_inv", None)
        object.__setattr__(self, "_rs", rs)

    def __setattr__(self, name, value):
        if name == "_inv":
            object.__setattr__(self, name, value)
            return
        raise AttributeError("GroupElement is immutable")

    @property
    def key(self):
        return self._key

    def __mul__(self, other):
        return GroupElement(self._rs, self.mat @ other.mat)

    def inverse(self):
        """Exact inverse, using invariance of the Cartan form.

        ``w`` preserves the Cartan matrix C, so ``w^{-1} = C^{-1} w^T C``;
        the result is integral and is computed with the exact adjugate.
        """
        if self._inv is None:
            rs = self._rs
            raw = rs.cartan_adjugate @ self.mat.T @ rs.cartan
            q, r = np.divmod(raw, rs.cartan_det)
            if r.any():
                raise AssertionError("inverse is not integral")
            object.__setattr__(self, "_inv", GroupElement(rs, q))
        return self._inv

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "GroupElement(%s, %s)" % (self._rs.typ, self.mat.tolist())


def identity(rs):
    return GroupElement(rs, np.eye(rs.n, dtype=np.int64))


@lru_cache(maxsize=None)
def _reflection_data(name):
    """Stacked reflection matrices and root matrix for an ambient."""
    rs = build_root_system(name)
    n = rs.n
    roots = np.array(rs.positive_roots, dtype=np.int64)          # (K, n)
    pairings = roots @ rs.cartan                                  # (K, n): <., alpha>
    mats = np.stack([np.eye(n, dtype=np.int64) - np.outer(r, p)
                     for r, p in zip(roots, pairings)])
    for m in mats:
        m.flags.writeable = False
    roots.flags.writeable = False
    return roots, mats


def reflection_matrices(rs):
    """Stack of reflection matrices, one per positive root, shape (K,n,n)."""
    return _reflection_data(str(rs.typ))[1]


def reflection(rs, root_index):
    """Reflection in the ``root_index``-th positive root."""
    return GroupElement(rs, reflection_matrices(rs)[root_index])


def absolute_length(rs, w):
    """Reflection length = rank(w - I), exactly."""
    mat = w.mat if isinstance(w, GroupElement) else np.asarray(w)
    delta = mat - np.eye(rs.n, dtype=np.int64)
    return int_rank(delta.tolist())


def le_absolute(rs, u, w):
    """Absolute order:  u <=_T w  iff  l(u) + l(u^{-1} w) = l(w)."""
    lu = absolute_length(rs, u)
    lw = absolute_length(rs, w)
    if lu > lw:
        return False
    return absolute_length(rs, u.inverse() * w) == lw - lu


def bipartite_coxeter(rs):
    """The bipartite Coxeter element: all simple reflections of the first
    color block, then all of the second, ascending node index in each."""
    n = rs.n
    result = np.eye(n, dtype=np.int64)
    _, mats = _reflection_data(str(rs.typ))
    for block in rs.bipartition:
        for i in block:
            result = result @ mats[i]
    return GroupElement(rs, result)


def moved_space_kernel(rs, w):
    """Integer basis of the fixed space ker(w - I)."""
    mat = w.mat if isinstance(w, GroupElement) else np.asarray(w)
    delta = (mat - np.eye(rs.n, dtype=np.int64)).tolist()
    return int_kernel(delta)


def moved_positive_roots(rs, w):
    """Indices of positive roots lying in the moved space im(w - I).

    Since w is orthogonal for the Cartan form, the moved space is the
    orthogonal complement of the fixed space, so membership is the exact
    integer test  K^T C alpha = 0  with K a fixed-space basis.
    """
    kernel = moved_space_kernel(rs, w)
    roots, _ = _reflection_data(str(rs.typ))
    if not kernel:
        return frozenset(range(len(roots)))
    karr = np.array(kernel, dtype=object)            # exact big-int arithmetic
    proj = karr @ np.array(rs.cartan, dtype=object) @ np.array(roots, dtype=object).T
    mask = ~np.any(proj != 0, axis=0)
    return frozenset(int(i) for i in np.nonzero(mask)[0])


def _simple_system(rs, root_indices):
    """Simple roots of the sub-root-system spanned by the given positive
    roots: the positive members not expressible as a sum of two members."""
    roots = [rs.positive_roots[i] for i in root_indices]
    rootset = set(roots)
    simples = []
    for alpha in roots:
        decomposable = False
        for beta in roots:
            if beta != alpha:
                diff = tuple(a - b for a, b in zip(alpha, beta))
                if diff in rootset:
                    decomposable = True
                    break
        if not decomposable:
            simples.append(alpha)
    return simples


@lru_cache(maxsize=None)
def _classify_moved_set(name, root_indices):
    rs = build_root_system(name)
    simples = _simple_system(rs, sorted(root_indices))
    k = len(simples)
    cartan = rs.cartan
    edges = []
    for i in range(k):
        for j in range(i + 1, k):
            pairing = int(np.dot(np.array(simples[i]) @ cartan, simples[j]))
            if pairing != 0:
                edges.append((i, j))
    return classify_diagram(DynkinDiagram.from_edges(k, edges)), tuple(simples)


def classify_parabolic_type(rs, w, coxeter=None, check=True):
    """Cartan-Killing type of the parabolic fixing Fix(w), for w <=_T c.

    The moved space of w intersects the roots in a sub-root-system whose
    simple system is extracted by ambient positivity; the induced diagram
    is classified.  The label's rank always equals the reflection length.

    Raises ``ValueError`` when ``check`` is set and w is not below the
    (bipartite) Coxeter element.
    """
    if check:
        c = coxeter if coxeter is not None else bipartite_coxeter(rs)
        if not le_absolute(rs, w, c):
            raise ValueError("element is not below the Coxeter element")
    moved = moved_positive_roots(rs, w)
    typ, _ = _classify_moved_set(str(rs.typ), frozenset(moved))
    length = absolute_length(rs, w)
    if typ.rank != length:
        raise AssertionError("classified rank %d != reflection length %d"
                             % (typ.rank, length))
    return typ


def reflection_orbits(rs):
    """Orbits of the reflections under conjugation by the bipartite
    Coxeter element.

    Returns a list of dicts with keys ``size``, ``representative`` (a
    positive-root index), and ``product_type`` (the type of t*c).  Orbit
    sizes are checked to be h or h/2.
    """
    c = bipartite_coxeter(rs)
    cinv = c.inverse()
    roots, mats = _reflection_data(str(rs.typ))
    key_to_index = {m.tobytes(): i for i, m in enumerate(mats)}
    h = rs.coxeter_number
    seen = set()
    orbits = []
    for start in range(len(mats)):
        if start in seen:
            continue
        orbit = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            orbit.append(cur)
            conj = c.mat @ mats[cur] @ cinv.mat
            cur = key_to_index[np.ascontiguousarray(conj).tobytes()]
        if len(orbit) not in (h, h // 2):
            raise AssertionError("orbit size %d not in {h, h/2}" % len(orbit))
        tc = GroupElement(rs, mats[start] @ c.mat)
        orbits.append({
            "size": len(orbit),
            "representative": start,
            "product_type": classify_parabolic_type(rs, tc, coxeter=c, check=False),
        })
    return orbits


def enumerate_group(rs, max_order=200_000):
    """BFS enumeration of the whole Weyl group by all reflections.

    Returns ``{element_key: distance}`` where distance is the reflection
    length in the Cayley graph (the oracle for ``absolute_length``).
    Guarded by ``max_order``.
    """
    if rs.group_order > max_order:
        raise ValueError("group order %d exceeds guard %d"
                         % (rs.group_order, max_order))
    _, mats = _reflection_data(str(rs.typ))
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
        frontier = new
    return dist
