"""Exact classification and decomposition of isotropic linear relations
between presymplectic spaces and coisotropic relations between Poisson
spaces.

>>> from isorel import canonical_sum, random_instance, decompose
>>> f, P, Q = random_instance({"I1": 1, "I9": 2}, seed=3)
>>> cert = decompose(f)
>>> cert.multiplicities.as_dict()["I9"]
2
"""

from .catalog import (
    INDECOMPOSABLES,
    TAGS,
    canonical_indecomposable,
    canonical_sum,
    poisson_normalizer,
    random_instance,
    type_name,
)
from .decompose import (
    DecompositionCertificate,
    StageTrace,
    decompose,
    decompose_biinjective,
    decompose_cartesian,
    is_isomorphic,
    split_cartesian_biinjective,
    trace_equations,
    verify_certificate,
)
from .duality import annihilator, dual_space, dualize_certificate
from .errors import (
    CertificateError,
    DimensionError,
    IsorelError,
    NotInSubspaceError,
    NotIsotropicError,
    NotRealizableError,
    SingularMatrixError,
    StructureError,
)
from .invariants import (
    InvariantVector,
    MultiplicityVector,
    classification,
    compute_invariants,
    multiplicities,
    multiplicities_of,
    paper_matrix,
)
from .linalg import Matrix, Subspace, complement_in, intersect, kernel, rref, scalar
from .relations import (
    LinearRelation,
    apply_iso_pair,
    compose,
    direct_sum,
    domain_Xf,
    image_fY,
    indeterminacy_f0,
    is_biinjective,
    is_cartesian,
    is_coisotropic,
    is_isotropic,
    kernel_0f,
    transpose,
)
from .spaces import POISSON, PRESYMPLECTIC, BilinearSpace, orthogonal, radical, symplectic_basis

__version__ = "0.1.0"
