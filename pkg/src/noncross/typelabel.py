"""Canonical labels for finite simply-laced (ADE) Cartan-Killing types.

A *type label* names a finite simply-laced root system up to isomorphism:
a multiset of irreducible components, each one of A_k (k >= 1), D_k
(k >= 4), E6, E7 or E8.  Labels are written in a compact text form such
as ``A2``, ``A1^2*A3`` or ``A1*D5``; the empty label (rank 0) is ``0``.

Rank-2 and rank-3 "D" components are synonyms for A1^2 and A3 and are
collapsed on construction, so every abstract type has exactly one
canonical label and one canonical string.
"""

from __future__ import annotations

import re
from functools import total_ordering

_COMPONENT_RE = re.compile(r"^([ADE])(\d+)(?:\^(\d+))?$")

# component ordering: by rank first, then family letter
def _component_key(comp):
    family, rank = comp
    return (rank, family)


@total_ordering
class TypeLabel:
    """Immutable canonical label of a simply-laced type.

    Internally a sorted tuple of ``(family, rank)`` component pairs.
    """

    __slots__ = ("components", "_str")

    def __init__(self, components=()):
        normalized = []
        for family, rank in components:
            family = str(family).upper()
            rank = int(rank)
            for item in self._normalize_component(family, rank):
                normalized.append(item)
        object.__setattr__(self, "components",
                           tuple(sorted(normalized, key=_component_key)))
        object.__setattr__(self, "_str", self._render())

    @staticmethod
    def _normalize_component(family, rank):
        if family == "A":
            if rank < 1:
                raise ValueError("A components need rank >= 1, got %d" % rank)
            return [("A", rank)]
        if family == "D":
            # collapse the degenerate low-rank synonyms
            if rank == 2:
                return [("A", 1), ("A", 1)]
            if rank == 3:
                return [("A", 3)]
            if rank < 2:
                raise ValueError("D components need rank >= 2, got %d" % rank)
            return [("D", rank)]
        if family == "E":
            if rank not in (6, 7, 8):
                raise ValueError("E components exist only in ranks 6,7,8")
            return [("E", rank)]
        raise ValueError("unknown family %r" % family)

    def __setattr__(self, name, value):
        raise AttributeError("TypeLabel is immutable")

    @classmethod
    def parse(cls, text):
        """Parse a label string such as ``"A1^2*A3"`` or ``"0"``."""
        text = text.strip()
        if text in ("0", ""):
            return cls(())
        components = []
        for token in text.split("*"):
            match = _COMPONENT_RE.match(token.strip())
            if match is None:
                raise ValueError("bad type component %r in %r" % (token, text))
            family, rank, power = match.groups()
            components.extend([(family, int(rank))] * int(power or 1))
        return cls(components)

    def _render(self):
        if not self.components:
            return "0"
        parts = []
        i = 0
        comps = self.components
        while i < len(comps):
            j = i
            while j < len(comps) and comps[j] == comps[i]:
                j += 1
            family, rank = comps[i]
            count = j - i
            parts.append("%s%d" % (family, rank) if count == 1
                         else "%s%d^%d" % (family, rank, count))
            i = j
        return "*".join(parts)

    @property
    def rank(self):
        return sum(rank for _, rank in self.components)

    @property
    def is_irreducible(self):
        return len(self.components) == 1

    @property
    def is_empty(self):
        return not self.components

    def irreducibles(self):
        """The components as a tuple of irreducible TypeLabels."""
        return tuple(TypeLabel([c]) for c in self.components)

    def __mul__(self, other):
        """Disjoint union of types."""
        return TypeLabel(self.components + other.components)

    def __eq__(self, other):
        return isinstance(other, TypeLabel) and self.components == other.components

    def __lt__(self, other):
        return (self.rank, self.components) < (other.rank, other.components)

    def __hash__(self):
        return hash(self.components)

    def __str__(self):
        return self._str

    def __repr__(self):
        return "TypeLabel.parse(%r)" % self._str


EMPTY_TYPE = TypeLabel(())


def label(text):
    """Shorthand for :meth:`TypeLabel.parse`."""
    return TypeLabel.parse(text)
