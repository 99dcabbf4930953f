"""
Which invariant vectors are realizable?
=======================================

A vector k of nonnegative integers is realized by some isotropic relation
exactly when n = M^-1 k is a nonnegative integer vector.  That is 13
inequalities, but three rows of M^-1 are unit vectors, so three of them hold
automatically and only ten constrain k.
"""

from isorel import TAGS, InvariantVector, NotRealizableError, classification, multiplicities
from isorel.invariants import INVARIANT_NAMES, catalog_matrix_inverse

inv = catalog_matrix_inverse()
for tag, row in zip(TAGS, inv.entries):
    terms = " ".join(f"{'+' if x > 0 else '-'}{'' if abs(x) == 1 else abs(x)}k{j + 1}"
                     for j, x in enumerate(row) if x)
    trivial = sum(1 for x in row if x) == 1 and max(row) == 1
    print(f"n_{tag:<4}= {terms:<40}{'(automatic)' if trivial else ''}")

print()
for j, name in enumerate(INVARIANT_NAMES, 1):
    print(f"k{j:<3}{name}")

# the printed matrix and the one derived from the models differ in one entry
print("\nerrata (row, col, printed, derived):", classification().errata)

# an unrealizable k: one dimension of indeterminacy and nothing else
try:
    multiplicities(InvariantVector(tuple(int(i == 4) for i in range(13))))
except NotRealizableError as exc:
    print("rejected:", exc)
