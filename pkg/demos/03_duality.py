"""
Poisson duality
===============

The annihilator turns an isotropic relation between presymplectic spaces
into a coisotropic relation between the dual Poisson spaces, and back.
Decomposition certificates travel along.
"""

from isorel import (
    annihilator,
    canonical_indecomposable,
    decompose,
    dualize_certificate,
    is_coisotropic,
    multiplicities_of,
    poisson_normalizer,
    random_instance,
    verify_certificate,
)

f, _, _ = random_instance({"I2": 1, "I5": 1, "I13": 1}, seed=11)
g = annihilator(f)
print(f"dim f = {f.dim}, dim f° = {g.dim}, product dim = {f.target.dim + f.source.dim}")
print("f° coisotropic:", is_coisotropic(g))
print("f°° == f:", annihilator(g) == f)

# same multiplicities on both sides
print("multiplicities agree:", multiplicities_of(f) == multiplicities_of(g))

# a presymplectic certificate becomes a Poisson one without redoing the work
cert = decompose(f)
dual = dualize_certificate(cert, f)
print("dual certificate flavor:", dual.flavor, "verifies:", verify_certificate(g, dual))

# for most types the annihilator of the isotropic model is the listed
# coisotropic model on the nose; I2 and I3 need a J-preserving rotation
for tag in ("I2", "I3", "I6"):
    same = annihilator(canonical_indecomposable(tag)) == canonical_indecomposable(tag, "poisson")
    nt, ns = poisson_normalizer(tag)
    print(f"{tag}: graph-equal {same}, normalizers {nt.tolist()} / {ns.tolist()}")
