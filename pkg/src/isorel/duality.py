"""Annihilators: the passage between isotropic/presymplectic and
coisotropic/Poisson data.

Dual bases are identified with standard bases.  For X <- Y the annihilator
is the relation Y* <- X* consisting of the pairs (eta, xi) with
xi(x) - eta(y) = 0 for every (x, y) in the relation.
"""

from __future__ import annotations

from .linalg import Matrix, Subspace, kernel
from .relations import LinearRelation
from .spaces import POISSON, PRESYMPLECTIC, BilinearSpace


def dual_space(s: BilinearSpace) -> BilinearSpace:
    """Same skew matrix, read on the dual; the flavor flips."""
    return BilinearSpace(s.form, POISSON if s.flavor == PRESYMPLECTIC else PRESYMPLECTIC)


def pairing(x, y, eta, xi):
    """<(x, y), (eta, xi)> = xi(x) - eta(y)."""
    return sum(a * b for a, b in zip(xi, x)) - sum(a * b for a, b in zip(eta, y))


def annihilator(f: LinearRelation) -> LinearRelation:
    m, k = f.target.dim, f.source.dim
    # (eta, xi) ranges over Y* x X*; each graph vector (x, y) gives the row [-y | x]
    rows = tuple(tuple(-c for c in r[m:]) + tuple(r[:m]) for r in f.graph.basis)
    graph = kernel(Matrix(len(rows), k + m, rows)) if rows else Subspace.full(k + m)
    return LinearRelation(dual_space(f.source), dual_space(f.target), graph)


def dualize_certificate(cert, f: LinearRelation):
    """Turn a certificate for f into one for annihilator(f).

    The annihilator of canonical_sum(n) is canonical_sum(n) of the other
    flavor up to the per-block normalizers of
    :func:`isorel.catalog.poisson_normalizer`, which are folded into the
    returned matrices.  Raises :class:`CertificateError` if ``cert`` does
    not certify f.
    """
    from .decompose import DecompositionCertificate, normalizers, verify_certificate
    from .errors import CertificateError

    if not verify_certificate(f, cert):
        raise CertificateError("input certificate does not certify the relation")
    nt, ns = normalizers(cert.multiplicities.n)
    if f.flavor == PRESYMPLECTIC:
        # apply(f, P, Q) = C  =>  apply(f°, Q^-T, P^-T) = C°,  and N carries C° to the listed model
        P = nt @ cert.Q.inverse().T
        Q = ns @ cert.P.inverse().T
        flavor = POISSON
    else:
        P = (ns.inverse() @ cert.Q).inverse().T
        Q = (nt.inverse() @ cert.P).inverse().T
        flavor = PRESYMPLECTIC
    out = DecompositionCertificate(P, Q, cert.multiplicities, flavor, cert.trace)
    if not verify_certificate(annihilator(f), out):
        raise CertificateError("dualized certificate failed verification")
    return out
