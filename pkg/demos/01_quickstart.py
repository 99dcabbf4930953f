"""
Classifying an isotropic relation
=================================

Build a relation, check it is isotropic, read off its 13 invariants and
recover how many copies of each indecomposable it contains.
"""

from isorel import (
    BilinearSpace,
    LinearRelation,
    Subspace,
    compute_invariants,
    is_isotropic,
    multiplicities,
    type_name,
)

# R^2 with the standard form J, and a zero-form line R
plane = BilinearSpace.standard(1)
line = BilinearSpace.zero_form(1)

# a relation plane <- line sending y to (q, p) = (y, 0); coordinates (q, p, y)
f = LinearRelation(plane, line, Subspace.span([(1, 0, 1)], 3))
print("isotropic:", is_isotropic(f))

k = compute_invariants(f)
print("k =", k.k)

# n = M^-1 k, with every entry checked to be a nonnegative integer
n = multiplicities(k)
for tag, count in n.as_dict().items():
    if count:
        print(f"  {count} x {tag}: {type_name(tag)}")

# adding (0, 1, 0) to the graph breaks isotropy: it pairs to 1 with (1, 0, 1)
g = LinearRelation(plane, line, Subspace.span([(1, 0, 1), (0, 1, 0)], 3))
print("enlarged relation isotropic:", is_isotropic(g))
