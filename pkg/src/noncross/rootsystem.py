"""Construction of the finite simply-laced (ADE) root systems.

Everything downstream works in the basis of simple roots: a root is an
integer coordinate vector, the invariant bilinear form is given by the
Cartan matrix (all roots have squared length 2), and Weyl group elements
are integer matrices acting on these coordinates.

Supported ambient types: A_n (1 <= n <= 8), D_n (4 <= n <= 8), E6, E7, E8.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import prod

import numpy as np

from .typelabel import TypeLabel, label

SUPPORTED_AMBIENTS = (
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8",
    "D4", "D5", "D6", "D7", "D8",
    "E6", "E7", "E8",
)

_DEGREES = {
    "A": lambda n: tuple(range(2, n + 2)),
    "D": lambda n: tuple(range(2, 2 * n - 1, 2)) + (n,),
    "E": lambda n: {6: (2, 5, 6, 8, 9, 12),
                    7: (2, 6, 8, 10, 12, 14, 18),
                    8: (2, 8, 12, 14, 18, 20, 24, 30)}[n],
}


def _edges(family, n):
    """Edge list of the Dynkin diagram, nodes 0..n-1.

    A_n is a path; D_n is a path 0..n-3 with both n-2 and n-1 attached
    to node n-3; E_n is a path 0,2,3,..,n-1 with node 1 attached to
    node 3 (the standard exceptional shape).
    """
    if family == "A":
        return [(i, i + 1) for i in range(n - 1)]
    if family == "D":
        return [(i, i + 1) for i in range(n - 3)] + [(n - 3, n - 2), (n - 3, n - 1)]
    if family == "E":
        path = [(0, 2)] + [(i, i + 1) for i in range(2, n - 1)]
        return path + [(1, 3)]
    raise ValueError(family)


@dataclass(frozen=True)
class DynkinDiagram:
    """A simply-laced diagram on nodes 0..n-1 given by its edge set."""

    n: int
    edges: frozenset

    @classmethod
    def from_edges(cls, n, edges):
        return cls(n, frozenset(frozenset(e) for e in edges))

    def adjacent(self, i, j):
        return frozenset((i, j)) in self.edges

    def neighbors(self, i):
        return [j for j in range(self.n) if j != i and self.adjacent(i, j)]

    def components(self):
        """Connected components as sorted node tuples."""
        seen = set()
        comps = []
        for start in range(self.n):
            if start in seen:
                continue
            stack, comp = [start], []
            while stack:
                v = stack.pop()
                if v in seen:
                    continue
                seen.add(v)
                comp.append(v)
                stack.extend(w for w in self.neighbors(v) if w not in seen)
            comps.append(tuple(sorted(comp)))
        return comps

    def induced(self, nodes):
        nodes = sorted(nodes)
        index = {v: i for i, v in enumerate(nodes)}
        edges = [(index[a], index[b]) for a, b in
                 ((min(e), max(e)) for e in map(sorted, self.edges))
                 if a in index and b in index]
        return DynkinDiagram.from_edges(len(nodes), edges)


def classify_diagram(diagram):
    """Cartan-Killing type of a simply-laced diagram.

    Raises ``ValueError`` when some component is not of A/D/E shape
    (a cycle, a vertex of degree >= 4, two branch vertices, or an
    exceptional-shape branch profile outside E6/E7/E8).
    """
    components = []
    for comp in diagram.components():
        sub = diagram.induced(comp)
        components.append(_classify_connected(sub))
    return TypeLabel(components)


def _classify_connected(diagram):
    n = diagram.n
    degrees = [len(diagram.neighbors(i)) for i in range(n)]
    if len(diagram.edges) != n - 1:
        raise ValueError("diagram component contains a cycle")
    branch = [i for i in range(n) if degrees[i] >= 3]
    if not branch:
        return ("A", n)
    if len(branch) > 1 or degrees[branch[0]] > 3:
        raise ValueError("diagram component is not of ADE shape")
    b = branch[0]
    arms = []
    for start in diagram.neighbors(b):
        length, prev, cur = 1, b, start
        while True:
            nxt = [v for v in diagram.neighbors(cur) if v != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", arms[2] + 3)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return ("E", arms[2] + 4)
    raise ValueError("diagram component is not of ADE shape: arms %r" % (arms,))


@dataclass(frozen=True)
class RootSystem:
    """An ADE root system in the simple-root basis.

    Attributes
    ----------
    typ : TypeLabel            irreducible ambient type
    n : int                    rank
    cartan : np.ndarray        n x n Cartan matrix (= Gram matrix of simples)
    positive_roots : tuple     coordinate tuples, simple roots first
    diagram : DynkinDiagram
    bipartition : tuple        (block_a, block_b) node 2-coloring
    degrees : tuple            fundamental degrees, ascending
    """

    typ: TypeLabel
    n: int
    cartan: np.ndarray = field(repr=False)
    positive_roots: tuple = field(repr=False)
    diagram: DynkinDiagram = field(repr=False)
    bipartition: tuple
    degrees: tuple
    cartan_adjugate: np.ndarray = field(repr=False)
    cartan_det: int

    @property
    def coxeter_number(self):
        return max(self.degrees)

    @property
    def group_order(self):
        return prod(self.degrees)

    @property
    def num_positive_roots(self):
        return len(self.positive_roots)

    def root_index(self, coords):
        return self._root_lookup[tuple(coords)]

    @property
    def _root_lookup(self):
        try:
            return self.__dict__["_lookup"]
        except KeyError:
            lookup = {tuple(r): i for i, r in enumerate(self.positive_roots)}
            self.__dict__["_lookup"] = lookup
            return lookup

    def __hash__(self):
        return hash(self.typ)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.typ == other.typ


def _positive_roots(cartan, n):
    """Close the simple roots under simple reflections, keep positives."""
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        new = []
        for v in frontier:
            pair = [sum(v[k] * cartan[k][i] for k in range(n)) for i in range(n)]
            for i in range(n):
                w = list(v)
                w[i] -= pair[i]
                w = tuple(w)
                if all(c >= 0 for c in w) and w not in roots:
                    roots.add(w)
                    new.append(w)
        frontier = new
    # simple roots first, the rest sorted by height then lexicographically
    rest = sorted(roots - set(simples), key=lambda r: (sum(r), r))
    return tuple(simples + rest)


def _bipartition(diagram):
    """2-color the diagram by BFS from node 0 (ties by ascending index)."""
    color = {}
    for start in range(diagram.n):
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop(0)
            for w in sorted(diagram.neighbors(v)):
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
    block_a = tuple(i for i in range(diagram.n) if color[i] == 0)
    block_b = tuple(i for i in range(diagram.n) if color[i] == 1)
    return (block_a, block_b)


def _exact_adjugate(mat):
    """Adjugate and determinant of a small integer matrix, exactly."""
    n = len(mat)
    a = [[Fraction(mat[i][j]) for j in range(n)] +
         [Fraction(1 if j == i else 0) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != 0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    det_int = int(det)
    adj = np.array([[int(a[i][n + j] * det) for j in range(n)]
                    for i in range(n)], dtype=np.int64)
    return adj, det_int


@lru_cache(maxsize=None)
def build_root_system(name):
    """Build the root system for an ambient label such as ``"E8"``.

    Raises ``ValueError`` for labels outside the supported ambient set.
    """
    if isinstance(name, TypeLabel):
        name = str(name)
    if name not in SUPPORTED_AMBIENTS:
        raise ValueError("unsupported ambient type %r (supported: %s)"
                         % (name, ", ".join(SUPPORTED_AMBIENTS)))
    family, n = name[0], int(name[1:])
    diagram = DynkinDiagram.from_edges(n, _edges(family, n))
    cartan = np.full((n, n), 0, dtype=np.int64)
    for i in range(n):
        cartan[i, i] = 2
    for e in diagram.edges:
        a, b = sorted(e)
        cartan[a, b] = cartan[b, a] = -1
    cartan_list = cartan.tolist()
    positives = _positive_roots(cartan_list, n)
    degrees = tuple(sorted(_DEGREES[family](n)))
    adj, det = _exact_adjugate(cartan_list)
    rs = RootSystem(
        typ=label(name), n=n, cartan=cartan, positive_roots=positives,
        diagram=diagram, bipartition=_bipartition(diagram), degrees=degrees,
        cartan_adjugate=adj, cartan_det=det,
    )
    h = rs.coxeter_number
    if len(positives) != n * h // 2:
        raise AssertionError("positive root count %d != n*h/2 for %s"
                             % (len(positives), name))
    return rs


@lru_cache(maxsize=None)
def subdiagram_types(name):
    """All type labels realized by induced subdiagrams of the ambient.

    Includes the empty label and the full label; computed over all
    2^n node subsets.
    """
    rs = build_root_system(name)
    found = set()
    nodes = range(rs.n)
    for size in range(rs.n + 1):
        for subset in combinations(nodes, size):
            found.add(classify_diagram(rs.diagram.induced(subset)))
    return frozenset(found)


def single_node_deletion_count(name, t):
    """How many single-node deletions of the ambient diagram have type t."""
    rs = build_root_system(name)
    if isinstance(t, str):
        t = label(t)
    count = 0
    for drop in range(rs.n):
        nodes = [i for i in range(rs.n) if i != drop]
        if classify_diagram(rs.diagram.induced(nodes)) == t:
            count += 1
    return count
