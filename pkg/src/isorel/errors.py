"""Exception types shared across the package."""


class IsorelError(Exception):
    """Base class for every error raised deliberately by this package."""


class DimensionError(IsorelError, ValueError):
    """Operands live in spaces of incompatible dimension."""


class NotInSubspaceError(IsorelError, ValueError):
    """A vector or subspace is not contained where it was required to be."""


class SingularMatrixError(IsorelError, ValueError):
    """An invertible matrix was required."""


class StructureError(IsorelError, ValueError):
    """A form, flavor or subspace fails a structural precondition."""


class NotIsotropicError(StructureError):
    """The relation is not isotropic (or, for Poisson inputs, not coisotropic)."""


class NotRealizableError(IsorelError, ValueError):
    """An invariant vector does not come from any isotropic relation."""


class CertificateError(IsorelError, RuntimeError):
    """A decomposition failed its own exact verification (an internal bug)."""
