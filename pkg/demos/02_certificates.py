"""
Decomposition certificates
==========================

Hide a known direct sum behind random changes of basis, decompose it, and
check the certificate independently.
"""

from isorel import (
    DecompositionCertificate,
    MultiplicityVector,
    apply_iso_pair,
    canonical_sum,
    decompose,
    random_instance,
    trace_equations,
    verify_certificate,
)

n = {"I1": 1, "I6": 1, "I9": 2, "I12": 1}
f, _, _ = random_instance(n, seed=7)
print(f"target dim {f.target.dim}, source dim {f.source.dim}, graph dim {f.dim}")

cert = decompose(f)
print("recovered:", {t: c for t, c in cert.multiplicities.as_dict().items() if c})

# the certificate says: applying (P, Q) to f gives the canonical sum exactly
assert apply_iso_pair(f, cert.P, cert.Q) == canonical_sum(cert.multiplicities.n)
print("verified:", verify_certificate(f, cert))

# the intermediate subspaces of the construction are kept in cert.trace
print("stage A subspaces:", ", ".join(cert.trace.stage_a))
held = sum(ok for _, ok in trace_equations(f, cert.trace))
print(f"{held}/{len(trace_equations(f, cert.trace))} construction identities hold")

# tampering is caught: claim one I9 is an I11 instead
wrong = dict(cert.multiplicities.as_dict(), I9=1, I11=1)
forged = DecompositionCertificate(cert.P, cert.Q, MultiplicityVector(tuple(wrong.values())))
print("forged certificate verifies:", verify_certificate(f, forged))
