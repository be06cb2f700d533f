"""Exact sparse multivariate polynomials and exact linear solving.

Polynomials live in Q[x, y, z, m] with arbitrary-precision rational
coefficients (``fractions.Fraction``); terms are held sparsely as a map
from exponent 4-tuples to coefficients.  This is deliberately small and
dependency-free: every identity checked in this package is an *exact*
polynomial identity, so floating point is never used.

The linear solver performs fraction-free (integer) Gaussian elimination
with content reduction and returns the full affine solution space
(a particular solution plus a nullspace basis).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, factorial

VARS = ("x", "y", "z", "m")
_VAR_INDEX = {v: i for i, v in enumerate(VARS)}
_ZERO_EXP = (0, 0, 0, 0)


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


class SparsePolynomial:
    """Sparse exact polynomial in the variables x, y, z, m."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        if terms:
            for exp, coeff in terms.items():
                coeff = _as_fraction(coeff)
                if coeff:
                    cleaned[tuple(exp)] = coeff
        self.terms = cleaned

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, value):
        value = _as_fraction(value)
        return cls({_ZERO_EXP: value} if value else {})

    @classmethod
    def variable(cls, name, power=1):
        exp = [0, 0, 0, 0]
        exp[_VAR_INDEX[name]] = power
        return cls({tuple(exp): Fraction(1)})

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        result = dict(self.terms)
        for exp, coeff in other.terms.items():
            new = result.get(exp, Fraction(0)) + coeff
            if new:
                result[exp] = new
            else:
                result.pop(exp, None)
        out = SparsePolynomial.__new__(SparsePolynomial)
        out.terms = result
        return out

    __radd__ = __add__

    def __neg__(self):
        out = SparsePolynomial.__new__(SparsePolynomial)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        result = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                new = result.get(exp, Fraction(0)) + c1 * c2
                if new:
                    result[exp] = new
                else:
                    result.pop(exp, None)
        out = SparsePolynomial.__new__(SparsePolynomial)
        out.terms = result
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = SparsePolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return self.terms == _coerce(other).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- queries ----------------------------------------------------------

    def degree(self, var):
        idx = _VAR_INDEX[var]
        return max((e[idx] for e in self.terms), default=0)

    def coefficient(self, **powers):
        """Coefficient polynomial of a monomial in the named variables.

        ``p.coefficient(x=2, y=1)`` collects all terms with x^2 y^1 and
        returns the remaining polynomial in the other variables.
        """
        idxs = {(_VAR_INDEX[v]): k for v, k in powers.items()}
        result = {}
        for exp, coeff in self.terms.items():
            if all(exp[i] == k for i, k in idxs.items()):
                new = tuple(0 if i in idxs else exp[i] for i in range(4))
                result[new] = result.get(new, Fraction(0)) + coeff
        return SparsePolynomial(result)

    def substitute(self, **assignments):
        """Substitute polynomials/constants for variables, exactly."""
        subs = {}
        for var, value in assignments.items():
            subs[_VAR_INDEX[var]] = _coerce(value)
        result = SparsePolynomial.constant(0)
        pow_cache = {}
        for exp, coeff in self.terms.items():
            term = SparsePolynomial.constant(coeff)
            for i in range(4):
                if exp[i] == 0:
                    continue
                if i in subs:
                    key = (i, exp[i])
                    if key not in pow_cache:
                        pow_cache[key] = subs[i] ** exp[i]
                    term = term * pow_cache[key]
                else:
                    keep = [0, 0, 0, 0]
                    keep[i] = exp[i]
                    term = term * SparsePolynomial({tuple(keep): Fraction(1)})
            result = result + term
        return result

    def evaluate(self, **assignments):
        """Fully evaluate; all variables present in the polynomial must
        be assigned.  Returns a Fraction."""
        total = Fraction(0)
        vals = {_VAR_INDEX[v]: _as_fraction(k) for v, k in assignments.items()}
        for exp, coeff in self.terms.items():
            term = coeff
            for i in range(4):
                if exp[i]:
                    if i not in vals:
                        raise ValueError("unassigned variable %s" % VARS[i])
                    term *= vals[i] ** exp[i]
            total += term
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, reverse=True):
            coeff = self.terms[exp]
            monos = ["%s^%d" % (VARS[i], exp[i]) if exp[i] > 1 else VARS[i]
                     for i in range(4) if exp[i]]
            body = "*".join(monos)
            if not body:
                text = str(abs(coeff))
            elif abs(coeff) == 1:
                text = body
            else:
                text = "%s*%s" % (abs(coeff), body)
            parts.append(("- " if coeff < 0 else "+ ") + text)
        joined = " ".join(parts)
        return joined[2:] if joined.startswith("+ ") else "-" + joined[2:]

    def __repr__(self):
        return "<SparsePolynomial %s>" % self


def _coerce(value):
    if isinstance(value, SparsePolynomial):
        return value
    return SparsePolynomial.constant(value)


ZERO = SparsePolynomial.constant(0)
ONE = SparsePolynomial.constant(1)
X = SparsePolynomial.variable("x")
Y = SparsePolynomial.variable("y")
Z = SparsePolynomial.variable("z")
M = SparsePolynomial.variable("m")


def poly(value):
    """Coerce a number to a SparsePolynomial."""
    return _coerce(value)


def binomial_poly(d):
    """The polynomial binom(m, d) = m(m-1)...(m-d+1)/d! in m."""
    result = SparsePolynomial.constant(Fraction(1, factorial(d)))
    for i in range(d):
        result = result * (M - i)
    return result


def exact_divide(numerator, divisor):
    """Exact multivariate division; raises ValueError on a remainder.

    Division proceeds by cancelling the lexicographically leading term of
    the running remainder against the leading term of the divisor, which
    succeeds precisely when the divisor divides exactly.
    """
    if not divisor.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    div_lead = max(divisor.terms)
    div_coeff = divisor.terms[div_lead]
    remainder = SparsePolynomial(dict(numerator.terms))
    quotient = {}
    while remainder.terms:
        lead = max(remainder.terms)
        exp = tuple(l - d for l, d in zip(lead, div_lead))
        if any(e < 0 for e in exp):
            raise ValueError("nonzero remainder in exact division")
        coeff = remainder.terms[lead] / div_coeff
        quotient[exp] = quotient.get(exp, Fraction(0)) + coeff
        remainder = remainder - SparsePolynomial({exp: coeff}) * divisor
    return SparsePolynomial(quotient)


def substitute_rational(p, substitutions, clearing_power):
    """Substitute rational functions for variables, returning the cleared
    numerator.

    ``substitutions`` maps a variable name to a pair ``(num, den)`` of
    polynomials; ``clearing_power`` maps the same names to the power of
    the corresponding denominator that is multiplied through (it must be
    at least the degree of ``p`` in that variable).  The true value of
    the substituted expression is the returned numerator divided by
    ``prod(den_v ** clearing_power[v])``.
    """
    for var in substitutions:
        if clearing_power[var] < p.degree(var):
            raise ValueError("clearing power for %s below degree" % var)
    result = ZERO
    cache = {}

    def cached_pow(tag, base, k):
        key = (tag, k)
        if key not in cache:
            cache[key] = base ** k
        return cache[key]

    for exp, coeff in p.terms.items():
        term = SparsePolynomial.constant(coeff)
        for i in range(4):
            var = VARS[i]
            if var in substitutions:
                num, den = substitutions[var]
                term = term * cached_pow(("n", var), num, exp[i])
                term = term * cached_pow(("d", var), den,
                                         clearing_power[var] - exp[i])
            elif exp[i]:
                keep = [0, 0, 0, 0]
                keep[i] = exp[i]
                term = term * SparsePolynomial({tuple(keep): Fraction(1)})
        result = result + term
    return result


# ---------------------------------------------------------------------------
# exact linear systems


@dataclass
class LinearSystem:
    """A linear system over the rationals with named variables.

    Rows are (coefficient dict var->Fraction, rhs, provenance-string).
    """

    variables: list
    rows: list = field(default_factory=list)

    def __post_init__(self):
        self._index = {v: i for i, v in enumerate(self.variables)}

    def add_row(self, coeffs, rhs, provenance=""):
        row = {}
        for var, c in coeffs.items():
            c = _as_fraction(c)
            if c:
                row[self._index[var]] = c
        self.rows.append((row, _as_fraction(rhs), provenance))

    @property
    def num_rows(self):
        return len(self.rows)

    @property
    def num_vars(self):
        return len(self.variables)


@dataclass
class SolutionSpace:
    """Affine solution space: particular + span(nullspace basis)."""

    variables: list
    particular: list            # Fractions, free variables set to 0
    nullspace: list             # list of Fraction vectors
    pivot_columns: list
    free_columns: list

    @property
    def dimension(self):
        return len(self.nullspace)

    def as_dict(self, coeffs=()):
        """The solution with the given nullspace coefficients, as a map
        variable -> value."""
        vec = list(self.particular)
        for c, basis in zip(coeffs, self.nullspace):
            vec = [v + _as_fraction(c) * b for v, b in zip(vec, basis)]
        return dict(zip(self.variables, vec))


class InconsistentSystemError(ValueError):
    """Raised when elimination reaches 0 = nonzero; carries provenance."""

    def __init__(self, provenance):
        super().__init__("inconsistent linear system (row: %s)" % provenance)
        self.provenance = provenance


def solve(system):
    """Fraction-free Gaussian elimination with content reduction.

    Rows are scaled to integers, inserted one at a time into an echelon
    basis (pivot = leading variable in the fixed variable order), with
    each combination divided by its integer content.  Deterministic for
    a fixed row ordering.
    """
    nvars = system.num_vars
    pivots = {}          # column -> integer row (list of n+1 ints, rhs last)

    def to_int_row(row, rhs):
        denom = rhs.denominator
        for c in row.values():
            denom = denom * c.denominator // gcd(denom, c.denominator)
        vec = [0] * (nvars + 1)
        for col, c in row.items():
            vec[col] = int(c * denom)
        vec[nvars] = int(rhs * denom)
        return vec

    def reduce_content(vec):
        g = 0
        for v in vec:
            if v:
                g = gcd(g, abs(v))
                if g == 1:
                    return vec
        if g > 1:
            vec = [v // g for v in vec]
        return vec

    for row, rhs, provenance in system.rows:
        vec = to_int_row(row, rhs)
        col = 0
        while col < nvars:
            if vec[col] and col in pivots:
                pivot = pivots[col]
                f, pv = vec[col], pivot[col]
                vec = [a * pv - f * b for a, b in zip(vec, pivot)]
                vec = reduce_content(vec)
            if vec[col]:
                break
            col += 1
        if col < nvars:
            pivots[col] = reduce_content(vec)
        elif vec[nvars] != 0:
            raise InconsistentSystemError(provenance)

    pivot_cols = sorted(pivots)
    free_cols = [c for c in range(nvars) if c not in pivots]

    # back substitution on the echelon rows, exact rationals
    reduced = {}
    for col in reversed(pivot_cols):
        vec = [Fraction(v) for v in pivots[col]]
        for col2 in pivot_cols:
            if col2 > col and vec[col2]:
                f = vec[col2]
                vec = [a - f * b for a, b in zip(vec, reduced[col2])]
        lead = vec[col]
        reduced[col] = [a / lead for a in vec]

    particular = [Fraction(0)] * nvars
    for col in pivot_cols:
        particular[col] = reduced[col][nvars]

    nullspace = []
    for fc in free_cols:
        basis = [Fraction(0)] * nvars
        basis[fc] = Fraction(1)
        for col in pivot_cols:
            basis[col] = -reduced[col][fc]
        nullspace.append(basis)

    return SolutionSpace(
        variables=list(system.variables),
        particular=particular,
        nullspace=nullspace,
        pivot_columns=pivot_cols,
        free_columns=free_cols,
    )
