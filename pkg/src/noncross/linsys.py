"""Linear-system derivation of full-rank decomposition tables.

For a target irreducible ambient, the full-rank decomposition numbers
are treated as unknowns and constrained by several exactly-known
equation families:

* splitting relations that express a mixed tuple through the tables of
  lower-rank ambients;
* coefficient comparison, in both m and z, between the closed-form zeta
  polynomial of NC^m and its decomposition-number expansion;
* the directly-known special values (the ambient itself, the reflection
  count, the maximal-chain count, and the corank-1 two-factor values);
* zero equations for tuples containing a type that is not realizable as
  a sub-diagram of the ambient's Dynkin diagram.

The resulting system is solved exactly.  For the large ambients it is
underdetermined by a small dimension; the remaining freedom is pinned
with a handful of brute-force counts, and classical arithmetic
consistency relations are then asserted on the pinned solution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import decomp
from .decomp import (DecompositionTable, all_labels_of_rank,
                     all_tuples_of_rank, canonical_tuple, count_bruteforce,
                     count_product, full_table, orderings, special_values,
                     tuple_rank)
from .exact import LinearSystem, SparsePolynomial, binomial_poly, poly, solve
from . import exact
from .ncposet import zeta_closed
from .rootsystem import build_root_system, subdiagram_types
from .typelabel import TypeLabel, label

# solution-space dimensions expected for the under-determined ambients,
# and the tuples whose brute-force values pin the remaining freedom
EXPECTED_DIMENSION = {"E6": 1, "D6": 2, "D7": 2, "E7": 2, "E8": 4}

PIN_TUPLES = {
    "E6": (("A1^3", "A1^3"),),
    "D6": (("A1^3", "A1^3"), ("A1^4", "A1^2")),
    "D7": (("A1^4", "A1^3"), ("A1^2*A2", "A1^3")),
    "E7": (("A1^4", "A1^3"), ("A1^2*A2", "A1^3")),
    "E8": (("A5", "A1*A2"), ("D5", "A1*A2"), ("A4", "A1*A3"), ("D4", "A4")),
}


class ReplayError(RuntimeError):
    """A replay step produced something other than the expected shape."""


@dataclass
class ReplayReport:
    """Outcome of one linear-system replay."""

    ambient: TypeLabel
    equation_count: int
    variable_count: int
    dimension: int
    pinned_values: dict                  # canonical tuple -> int
    congruence_assertions: list          # (description, bool)
    final_table: DecompositionTable
    flags: list = field(default_factory=list)

    @property
    def all_assertions_pass(self):
        return all(ok for _, ok in self.congruence_assertions)


@lru_cache(maxsize=None)
def production_table(name):
    """The full-rank table of an irreducible ambient by its cheapest
    exact route: closed form for type A, brute force for the D types and
    E6, linear-system replay for E7 and E8."""
    fam = label(name).components[0][0]
    if fam == "A" or name in ("D4", "D5", "D6", "D7", "E6"):
        return full_table(name)
    if name in ("E7", "E8"):
        return replay(name).final_table
    raise ValueError("no production route for ambient %r" % name)


@lru_cache(maxsize=None)
def _component_tables(t):
    return tuple(production_table("%s%d" % comp) for comp in t.components)


def lower_count(t, types):
    """N_T(types) for an ambient type of lower rank, reducible allowed."""
    types = canonical_tuple(types)
    if t.is_empty:
        return 1 if not types else 0
    if t.is_irreducible:
        return production_table(str(t)).lookup(types)
    return count_product(_component_tables(t), types)


def _coeff_mz(p, i, j):
    """The rational coefficient of m^i z^j in a polynomial in m, z."""
    c = p.coefficient(m=i, z=j)
    if not c.terms:
        return Fraction(0)
    (exp, value), = c.terms.items()
    if any(exp):
        raise ValueError("coefficient is not constant")
    return value


def generate_equations(name):
    """The full equation system for one irreducible ambient.

    Unknowns are all canonical full-rank tuples over arbitrary labels;
    tuples containing non-sub-diagram types get explicit zero rows, so
    the variable universe is uniform across equation families.
    """
    ambient = label(name)
    n = ambient.rank
    rs = build_root_system(name)
    variables = all_tuples_of_rank(n)
    system = LinearSystem(variables=variables)
    allowed = subdiagram_types(name)

    # tuples containing a type that is not a sub-diagram type vanish
    for var in variables:
        if any(t not in allowed for t in var):
            system.add_row({var: 1}, 0, "forbidden:%s" % (",".join(map(str, var))))

    # special values; rank-deficient ones are expanded by one extra factor
    for key, value in special_values(name).items():
        s = tuple_rank(key)
        if not key:
            continue
        if s == n:
            system.add_row({key: 1}, value, "special:%s" % ",".join(map(str, key)))
        else:
            coeffs = {}
            for extra in all_labels_of_rank(n - s):
                var = canonical_tuple(key + (extra,))
                coeffs[var] = coeffs.get(var, 0) + 1
            system.add_row(coeffs, value,
                           "special-deficient:%s" % ",".join(map(str, key)))

    # splitting relations: a suffix of the tuple is contracted through
    # the tables of all lower-rank ambients of matching rank
    for split_rank in range(1, n):
        for primed in all_tuples_of_rank(split_rank):
            contractions = [(t, lower_count(t, primed))
                            for t in all_labels_of_rank(split_rank)]
            for unprimed in all_tuples_of_rank(n - split_rank):
                coeffs = {canonical_tuple(unprimed + primed): Fraction(1)}
                for t, count in contractions:
                    if count:
                        var = canonical_tuple(unprimed + (t,))
                        coeffs[var] = coeffs.get(var, Fraction(0)) - count
                if len(coeffs) == 1 and not next(iter(coeffs.values())):
                    continue
                system.add_row(coeffs, 0, "split:%s|%s"
                               % (",".join(map(str, unprimed)),
                                  ",".join(map(str, primed))))

    # zeta-polynomial coefficient comparison in m and z
    shifted = lru_cache(maxsize=None)(
        lambda t: zeta_closed(t, m=1).substitute(z=exact.Z - 1))
    forms = {}
    for s in range(1, n + 1):
        for tup in all_tuples_of_rank(s):
            weight = poly(orderings(tup)) * binomial_poly(len(tup))
            for t in tup:
                weight = weight * shifted(t)
            if s == n:
                targets = (tup,)
            else:
                targets = tuple(canonical_tuple(tup + (extra,))
                                for extra in all_labels_of_rank(n - s))
            for var in targets:
                forms[var] = forms.get(var, exact.ZERO) + weight
    lhs = zeta_closed(ambient, m="m") - poly(1)
    for i in range(n + 1):
        for j in range(n + 1):
            coeffs = {}
            for var, form in forms.items():
                c = _coeff_mz(form, i, j)
                if c:
                    coeffs[var] = c
            rhs = _coeff_mz(lhs, i, j)
            if coeffs or rhs:
                system.add_row(coeffs, rhs, "zeta:m^%d z^%d" % (i, j))
    return system


def check_system_against_table(system, table):
    """Provenances of all equations violated by a complete table; the
    exact-oracle table must satisfy every generated equation."""
    failures = []
    for row, rhs, provenance in system.rows:
        total = sum(c * table.entries.get(system.variables[i], 0)
                    for i, c in row.items())
        if total != rhs:
            failures.append(provenance)
    return failures


@lru_cache(maxsize=None)
def replay(name):
    """Solve the equation system for one ambient, pin the remaining
    freedom with brute-force oracle values, and assert the classical
    arithmetic consistency relations on the result."""
    ambient = label(name)
    n = ambient.rank
    flags = []
    system = generate_equations(name)
    space = solve(system)
    dimension = space.dimension

    expected = EXPECTED_DIMENSION.get(name, 0)
    if dimension > expected:
        free = [system.variables[c] for c in space.free_columns]
        raise ReplayError(
            "%s solution space has dimension %d, expected %d; free: %s"
            % (name, dimension, expected,
               ["*".join(map(str, v)) for v in free]))
    if dimension < expected:
        flags.append("dimension %d below the reported %d "
                     "(extra independent relations)" % (dimension, expected))

    pins = {}
    pin_keys = [canonical_tuple(tuple(label(x) for x in tup))
                for tup in PIN_TUPLES.get(name, ())]
    for key in pin_keys[:dimension]:
        pins[key] = count_bruteforce(name, key)
    if pins:
        pinned_system = LinearSystem(variables=system.variables,
                                     rows=list(system.rows))
        for key, value in pins.items():
            pinned_system.add_row({key: 1}, value,
                                  "oracle-pin:%s" % ",".join(map(str, key)))
        space = solve(pinned_system)       # inconsistency -> pins outside
        if space.dimension != 0:
            raise ReplayError("%s: oracle pins leave dimension %d"
                              % (name, space.dimension))

    values = space.as_dict()
    entries = {}
    for key, value in values.items():
        if value.denominator != 1 or value < 0:
            raise ReplayError("%s: entry %s = %s is not a nonnegative "
                              "integer" % (name, ",".join(map(str, key)), value))
        if value:
            entries[key] = int(value)
    table = DecompositionTable(ambient, entries, provenance="linear-system")
    assertions = _consistency_assertions(name, table)
    return ReplayReport(
        ambient=ambient,
        equation_count=system.num_rows,
        variable_count=system.num_vars,
        dimension=dimension,
        pinned_values=pins,
        congruence_assertions=assertions,
        final_table=table,
        flags=flags,
    )


def _consistency_assertions(name, table):
    """The published arithmetic cross-checks on a solved table."""

    def v(*labels):
        return table.lookup(tuple(label(x) for x in labels))

    checks = []

    def rel(desc, lhs, rhs):
        checks.append((desc, Fraction(lhs) == Fraction(rhs)))

    if name == "E6":
        x = v("A1^3", "A1^3")
        rel("100 N(A3,A3) = 2592 + 9X", 100 * v("A3", "A3"), 2592 + 9 * x)
        rel("5 N(A1*A2,A1^3) = 192 - 6X",
            5 * v("A1*A2", "A1^3"), 192 - 6 * x)
    elif name == "D6":
        x = v("A1^3", "A1^3")
        y = v("A1^4", "A1^2")
        rel("N(A1^2*A2,A1^2) = 25 - 27X/40 - 3Y",
            v("A1^2*A2", "A1^2"), 25 - Fraction(27, 40) * x - 3 * y)
        rel("N(A3,A3) = 20 + 9X/100",
            v("A3", "A3"), 20 + Fraction(9, 100) * x)
        checks.append(("5 divides N(A1^4,A1^2)", y % 5 == 0))
    elif name == "D7":
        x = v("A1^4", "A1^3")
        y = v("A1^2*A2", "A1^3")
        rel("N(A1^4,A1*A2) = 6(36-X)/5",
            v("A1^4", "A1*A2"), Fraction(6, 5) * (36 - x))
        rel("N(A1^2*A2,A3) = 3(Y+162)/10",
            v("A1^2*A2", "A3"), Fraction(3, 10) * (y + 162))
        rel("N(A1*A3,A1^3) = 84 - Y/3",
            v("A1*A3", "A1^3"), 84 - Fraction(y, 3))
        rel("N(A1*A2^2,A2) = 14(36-3X-Y)/15",
            v("A1*A2^2", "A2"), Fraction(14, 15) * (36 - 3 * x - y))
        rel("N(A1*A2^2,A1^2) = 7(3X+Y-36)/5",
            v("A1*A2^2", "A1^2"), Fraction(7, 5) * (3 * x + y - 36))
    elif name == "E7":
        x = v("A1^4", "A1^3")
        y = v("A1^2*A2", "A1^3")
        rel("N(A5,A2) = 1272/25 - 58X/75 - 58Y/225",
            v("A5", "A2"),
            Fraction(1272, 25) - Fraction(58, 75) * x - Fraction(58, 225) * y)
        rel("N(A4,A3) = 594/25 + 18X/25 + 11Y/25",
            v("A4", "A3"),
            Fraction(594, 25) + Fraction(18, 25) * x + Fraction(11, 25) * y)
        rel("N(D4,A3) = 126/5 - 2X/5 - 7Y/30",
            v("D4", "A3"),
            Fraction(126, 5) - Fraction(2, 5) * x - Fraction(7, 30) * y)
        rel("N(A1^3*A2,A1^2) = 423/5 - 14X/5 - 14Y/15",
            v("A1^3*A2", "A1^2"),
            Fraction(423, 5) - Fraction(14, 5) * x - Fraction(14, 15) * y)
        rel("N(A1^3*A2,A2) = -192/5 + 28X/15 + 28Y/45",
            v("A1^3*A2", "A2"),
            Fraction(-192, 5) + Fraction(28, 15) * x + Fraction(28, 45) * y)
        checks.append(("X - 8Y = 2 (mod 25)", (x - 8 * y) % 25 == 2))
        checks.append(("18X + 11Y = 6 (mod 25)", (18 * x + 11 * y) % 25 == 6))
        checks.append(("Y = 0 (mod 6)", y % 6 == 0))
        checks.append(("3 divides X", x % 3 == 0))
        checks.append(("X = 29 - 10k, Y = 30k - 6 with k = 2",
                       x == 29 - 10 * 2 and y == 30 * 2 - 6))
    elif name == "E8":
        x = v("A5", "A1*A2")
        y = v("D5", "A1*A2")
        a = v("A4", "A1*A3")
        b = v("D4", "A4")
        rel("N(A5,A3) = (750-X)/4", v("A5", "A3"), Fraction(750 - x, 4))
        rel("N(D5,A3) = (375-Y)/4", v("D5", "A3"), Fraction(375 - y, 4))
        rel("N(A5,A1^3) = 5(750-X)/6",
            v("A5", "A1^3"), Fraction(5, 6) * (750 - x))
        rel("N(D5,A1^3) = 5(375-Y)/6",
            v("D5", "A1^3"), Fraction(5, 6) * (375 - y))
        rel("N(A2*A3,A1*A2) = 3(4125-8X+16Y)/25",
            v("A2*A3", "A1*A2"), Fraction(3, 25) * (4125 - 8 * x + 16 * y))
        rel("N(A2*A3,A1^3) = (1125+4X-8Y)/5",
            v("A2*A3", "A1^3"), Fraction(1125 + 4 * x - 8 * y, 5))
        rel("N(A1*D4,A3) = Y - 150", v("A1*D4", "A3"), y - 150)
        rel("N(A1^2*A3,A1^3) = (49875-56X-138Y)/5",
            v("A1^2*A3", "A1^3"), Fraction(49875 - 56 * x - 138 * y, 5))
        rel("N(A1*A4,A1*A2) = 2(2295-3X-4Y)",
            v("A1*A4", "A1*A2"), 2 * (2295 - 3 * x - 4 * y))
        rel("N(A1^3*A2,A1^3) = (112X+226Y-86625)/15",
            v("A1^3*A2", "A1^3"),
            Fraction(112 * x + 226 * y - 86625, 15))
        total_d4 = sum(table.lookup((label("D4"), extra))
                       for extra in all_labels_of_rank(4))
        rel("N(D4) = 27263/168 - A/40 + B/40 + 283X/1500 + 7957Y/15750",
            total_d4,
            Fraction(27263, 168) - Fraction(a, 40) + Fraction(b, 40)
            + Fraction(283, 1500) * x + Fraction(7957, 15750) * y)
        rel("N(D4) = 325", total_d4, 325)
        checks.append(("X = 6 (mod 12)", x % 12 == 6))
        checks.append(("Y = 3 (mod 12)", y % 12 == 3))
        checks.append(("X = 2Y (mod 25)", (x - 2 * y) % 25 == 0))
        k = (y - 3) // 12
        checks.append(("Y = 12k + 3, X = 300j + 24k + 6 with j = 0, k = 16",
                       y == 12 * k + 3 and k == 16 and x == 24 * k + 6))
    return checks
