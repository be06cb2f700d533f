"""Decomposition numbers: counts of minimal factorizations of a Coxeter
element into elements of prescribed parabolic types.

``N(T_1, ..., T_d)`` counts tuples (c_1, ..., c_d) with c_1 c_2 ... c_d
lying below the Coxeter element c in absolute order, lengths adding up,
and type(c_i) = T_i.  The count is invariant under permuting the T_i, so
tables are keyed by the canonical sorted tuple.

Three independent routes are implemented:

* ``count_bruteforce`` -- recursive descent over the enumerated poset
  (the oracle everything else is checked against);
* ``count_typeA`` -- closed product formula for type A;
* ``count_product`` -- reduction of a reducible ambient to its factors.

``full_table`` builds the complete table for one ambient (all full-rank
tuples by brute force; rank-deficient tuples by summing one extra factor
over all types of the complementary rank).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, factorial, prod

from .ncposet import enumerate_nc, ResourceGuardError
from .rootsystem import build_root_system, subdiagram_types, \
    single_node_deletion_count
from .typelabel import TypeLabel, label, EMPTY_TYPE


def canonical_tuple(types):
    """Canonical (sorted) key for an unordered tuple of type labels."""
    out = []
    for t in types:
        if isinstance(t, str):
            t = label(t)
        if t.is_empty:
            continue                      # empty factors are dropped
        out.append(t)
    return tuple(sorted(out))


def tuple_rank(types):
    return sum(t.rank for t in types)


def orderings(types):
    """Number of distinct orderings of a canonical tuple (multinomial)."""
    counts = {}
    for t in types:
        counts[t] = counts.get(t, 0) + 1
    return factorial(len(types)) // prod(factorial(k) for k in counts.values())


# ---------------------------------------------------------------------------
# brute force over the enumerated poset


def count_bruteforce(name, types, _memo=None):
    """Count factorizations by recursive descent over NC.

    Works for any rank sum up to the ambient rank (rank-deficient tuples
    simply leave part of the Coxeter element unused).  Tuples with rank
    sum above the ambient rank return 0.  Memoized on (complement
    element, remaining suffix).
    """
    poset = enumerate_nc(name)
    types = tuple(label(t) if isinstance(t, str) else t for t in types)
    if any(t.is_empty for t in types):
        types = tuple(t for t in types if not t.is_empty)
    if tuple_rank(types) > poset.rs.n:
        return 0
    memo = {} if _memo is None else _memo

    def descend(el, suffix):
        if not suffix:
            return 1
        state = (el.key, suffix)
        cached = memo.get(state)
        if cached is not None:
            return cached
        head, rest = suffix[0], suffix[1:]
        total = 0
        if not rest and head.rank == el.rank:
            # full-rank last factor is forced
            total = 1 if el.typ == head else 0
        else:
            for u in poset.by_type.get(head, ()):
                if u.moved <= el.moved:
                    total += descend(poset.complement(u, el), rest)
        memo[state] = total
        return total

    return descend(poset.top, types)


def make_bruteforce_memo():
    """A shared memo dict for repeated count_bruteforce calls."""
    return {}


# ---------------------------------------------------------------------------
# closed form in type A


def count_typeA(n, types):
    """Decomposition number for ambient A_n by the closed product formula.

    Every entry must be a type-A label A1^{m_1} A2^{m_2} ...; the value is

        (n+1)^(d-1) * C(n+1, rank_sum + 1)
        * prod_i  (n - rank(T_i))! / (n - rank(T_i) + 1 - sum_j m_j^(i))!
                  / prod_j m_j^(i)!

    i.e. each factor contributes a multinomial coefficient divided by
    n - rank(T_i) + 1.
    """
    types = canonical_tuple(types)
    if any(family != "A" for t in types for family, _ in t.components):
        raise ValueError("count_typeA needs all-A entries, got %r"
                         % (tuple(str(t) for t in types),))
    s = tuple_rank(types)
    if s > n:
        return 0
    d = len(types)
    if d == 0:
        return 1
    value = Fraction((n + 1) ** (d - 1)) * comb(n + 1, s + 1)
    for t in types:
        m_total = len(t.components)
        slots = n - t.rank + 1
        if m_total > slots:
            return 0
        # multinomial: slots! / ((slots - m_total)! * prod multiplicity!)
        counts = {}
        for comp in t.components:
            counts[comp] = counts.get(comp, 0) + 1
        mult = Fraction(factorial(slots),
                        factorial(slots - m_total)
                        * prod(factorial(k) for k in counts.values()))
        value *= mult / slots
    if value.denominator != 1:
        raise AssertionError("non-integral type-A count")
    return int(value)


# ---------------------------------------------------------------------------
# products of ambients


def count_product(factors, types):
    """Decomposition number for a reducible ambient from factor tables.

    ``factors`` is a sequence of DecompositionTable objects, one per
    irreducible factor of the ambient.  Each entry type T_i is split as
    a disjoint union T_i = U_i * V_i over the first factor and the rest;
    only splittings that are full-rank in each part contribute (the
    others vanish), and the two parts are counted independently.
    """
    factors = list(factors)
    if not factors:
        return 1 if not canonical_tuple(types) else 0
    if len(factors) == 1:
        return factors[0].lookup(types)
    head, rest = factors[0], factors[1:]
    rest_rank = sum(t.ambient.rank for t in rest)
    types = [t if isinstance(t, TypeLabel) else label(t) for t in types]

    total = 0
    for split in _component_splits([t.components for t in types],
                                   head.ambient.rank, rest_rank):
        left, right = split
        left_tuple = [TypeLabel(c) for c in left if c]
        right_tuple = [TypeLabel(c) for c in right if c]
        total += head.lookup(left_tuple) * count_product(rest, right_tuple)
    return total


def _component_splits(component_lists, left_rank, right_rank):
    """All ways to split each entry's component multiset into two parts
    with prescribed total ranks on each side."""
    results = []

    def rank_of(comps):
        return sum(r for _, r in comps)

    def recurse(i, left_acc, right_acc, left_sum):
        if left_sum > left_rank:
            return
        if i == len(component_lists):
            if left_sum == left_rank:
                results.append((list(left_acc), list(right_acc)))
            return
        comps = component_lists[i]
        seen = set()
        for mask in range(1 << len(comps)):
            left = tuple(sorted(comps[j] for j in range(len(comps))
                                if mask >> j & 1))
            if left in seen:
                continue
            seen.add(left)
            right = list(comps)
            for item in left:
                right.remove(item)
            left_acc.append(left)
            right_acc.append(tuple(right))
            recurse(i + 1, left_acc, right_acc, left_sum + rank_of(left))
            left_acc.pop()
            right_acc.pop()

    recurse(0, [], [], 0)
    return results


# ---------------------------------------------------------------------------
# tables


class DecompositionTable:
    """Full-rank decomposition numbers for one ambient type.

    ``entries`` maps canonical full-rank tuples to integers; lookups of
    tuples with rank sum above the ambient rank return 0, and
    rank-deficient lookups are resolved through the one-extra-factor
    identity (sum over all types of the complementary rank).
    """

    def __init__(self, ambient, entries, provenance="bruteforce"):
        self.ambient = ambient if isinstance(ambient, TypeLabel) else label(ambient)
        self.entries = dict(entries)
        self.provenance = provenance

    def lookup(self, types):
        key = canonical_tuple(types)
        s = tuple_rank(key)
        n = self.ambient.rank
        if s > n:
            return 0
        if not key:
            return 1
        if s == n:
            return self.entries.get(key, 0)
        total = 0
        for extra in all_labels_of_rank(n - s):
            total += self.entries.get(canonical_tuple(key + (extra,)), 0)
        return total

    def full_rank_items(self):
        return sorted(self.entries.items(),
                      key=lambda kv: (len(kv[0]), tuple(map(str, kv[0]))))


@lru_cache(maxsize=None)
def all_labels_of_rank(r):
    """Every ADE type label of the given rank (any component mix)."""
    if r == 0:
        return (EMPTY_TYPE,)
    irreducibles = []
    for k in range(1, r + 1):
        irreducibles.append(("A", k))
        if 4 <= k:
            irreducibles.append(("D", k))
        if k in (6, 7, 8):
            irreducibles.append(("E", k))
    irreducibles = [c for c in irreducibles if c[1] <= r]
    found = set()

    def build(start, remaining, acc):
        if remaining == 0:
            found.add(TypeLabel(list(acc)))
            return
        for i in range(start, len(irreducibles)):
            fam, k = irreducibles[i]
            if k <= remaining:
                acc.append((fam, k))
                build(i, remaining - k, acc)
                acc.pop()

    build(0, r, [])
    return tuple(sorted(found))


def all_tuples_of_rank(total, max_ranks=None):
    """All canonical tuples (multisets of nonempty labels) with the given
    rank sum.  ``max_ranks`` optionally caps entry ranks."""
    labels_by_rank = {r: all_labels_of_rank(r) for r in range(1, total + 1)}
    if max_ranks is not None:
        labels_by_rank = {r: v for r, v in labels_by_rank.items()
                          if r <= max_ranks}
    pool = sorted(t for ls in labels_by_rank.values() for t in ls)
    results = []

    def build(start, remaining, acc):
        if remaining == 0:
            results.append(tuple(acc))
            return
        for i in range(start, len(pool)):
            t = pool[i]
            if t.rank <= remaining:
                acc.append(t)
                build(i, remaining - t.rank, acc)
                acc.pop()

    build(0, total, [])
    return [canonical_tuple(t) for t in results]


def full_table(name, max_elements=30_000):
    """Complete full-rank table for one irreducible ambient, brute force.

    For type-A ambients the closed formula is used (it is itself checked
    against brute force in the tests).  Guarded by the poset size.
    """
    ambient = label(name)
    n = ambient.rank
    if ambient.components[0][0] == "A":
        entries = {}
        for key in all_tuples_of_rank(n):
            if any(f != "A" for t in key for f, _ in t.components):
                continue
            value = count_typeA(n, key)
            if value:
                entries[key] = value
        return DecompositionTable(ambient, entries, provenance="typeA-closed-form")
    poset = enumerate_nc(name)
    if len(poset) > max_elements:
        raise ResourceGuardError(
            "brute-force table for %s needs a %d-element poset (guard %d); "
            "use the linear-system route instead" % (name, len(poset), max_elements))
    allowed = subdiagram_types(name)
    memo = make_bruteforce_memo()
    entries = {}
    for key in all_tuples_of_rank(n):
        if any(t not in allowed for t in key):
            continue                      # contains a forbidden type: 0
        value = count_bruteforce(name, key, _memo=memo)
        if value:
            entries[key] = value
    return DecompositionTable(ambient, entries, provenance="bruteforce")


# ---------------------------------------------------------------------------
# special values


def special_values(name):
    """The directly-known decomposition values for an ambient:

    * N() = 1 and N(ambient) = 1;
    * N(A1) = number of positive roots;
    * N(A1, A1, ..., A1) (n factors) = n! h^n / |W|;
    * N(T, A1) for every corank-1 type T: (h/2) times the number of
      single-node deletions of the diagram of type T (0 when T is not a
      deletion type).
    """
    rs = build_root_system(name)
    ambient = label(name)
    n, h = rs.n, rs.coxeter_number
    values = {
        canonical_tuple(()): 1,
        canonical_tuple((ambient,)): 1,
        canonical_tuple(("A1",)): rs.num_positive_roots,
    }
    all_a1 = canonical_tuple(("A1",) * n)
    chains = Fraction(factorial(n) * h ** n, rs.group_order)
    if chains.denominator != 1:
        raise AssertionError("non-integral reflection factorization count")
    values[all_a1] = int(chains)
    for t in all_labels_of_rank(n - 1):
        count = single_node_deletion_count(name, t)
        values[canonical_tuple((t, label("A1")))] = h * count // 2
    return values
