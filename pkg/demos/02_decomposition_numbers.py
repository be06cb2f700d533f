"""Decomposition numbers three ways.

Computes N(T1, ..., Td) for a few tuples by brute-force factorization
counting, by the type-A closed form, and by table lookup, and confirms
the three routes agree.
"""

from noncross import (count_bruteforce, count_typeA, full_table, label)


def L(*names):
    return tuple(label(s) for s in names)


print("type A, closed form vs brute force:")
for n in (3, 4, 5):
    key = L(*(["A1"] * n))
    closed = count_typeA(n, key)
    brute = count_bruteforce("A%d" % n, key)
    print("  N_A%d(A1,...,A1) = %d  (brute force %d)" % (n, closed, brute))
    assert closed == brute
    # the classical count of minimal transitive factorizations
    assert closed == (n + 1) ** (n - 1)

print()
print("D and E ambients, table lookups:")
table = full_table("E6")
for key in (L("E6"), L("A1", "D5"), L("A2", "A2", "A2"), L("A1^3", "A1^3")):
    print("  N_E6(%s) = %d" % (", ".join(map(str, key)), table.lookup(key)))
