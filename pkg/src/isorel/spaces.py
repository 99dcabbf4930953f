"""Vector spaces carrying a constant skew-symmetric structure.

A :class:`BilinearSpace` of flavor ``"presymplectic"`` stores the form
``omega`` on the space itself.  Flavor ``"poisson"`` stores the constant
bivector, i.e. the skew form induced on the dual space.  Orthogonality is only
ever computed for presymplectic spaces; Poisson data is handled by passing to
annihilators (see :mod:`isorel.duality`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionError, NotInSubspaceError, StructureError
from .linalg import (
    HALF,
    ONE,
    ZERO,
    Matrix,
    Subspace,
    _dot,
    combine,
    complement_in,
    intersect,
    is_subspace,
    kernel,
    solve,
    span_all,
    vec,
)

PRESYMPLECTIC = "presymplectic"
POISSON = "poisson"
FLAVORS = (PRESYMPLECTIC, POISSON)

J = Matrix.from_rows([[0, 1], [-1, 0]])


@dataclass(frozen=True)
class BilinearSpace:
    form: Matrix
    flavor: str = PRESYMPLECTIC

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise StructureError(f"unknown flavor {self.flavor!r}")
        if not self.form.is_skew():
            raise StructureError("form is not skew-symmetric")

    @property
    def dim(self) -> int:
        return self.form.rows

    @classmethod
    def zero_form(cls, n: int, flavor: str = PRESYMPLECTIC) -> "BilinearSpace":
        return cls(Matrix.zeros(n, n), flavor)

    @classmethod
    def standard(cls, pairs: int, flavor: str = PRESYMPLECTIC) -> "BilinearSpace":
        """(Q^2, J)^pairs with omega(q_i, p_i) = 1 in (q1, p1, q2, p2, ...) order."""
        return cls(Matrix.block_diag(*([J] * pairs)) if pairs else Matrix.zeros(0, 0), flavor)

    def pair(self, x: Sequence, y: Sequence):
        """omega(x, y) = x^T form y."""
        e = self.form.entries
        s = ZERO
        for i, xi in enumerate(x):
            if xi:
                s += xi * _dot(e[i], y)
        return s

    def gram(self, vectors: Sequence[Sequence]) -> Matrix:
        vs = list(vectors)
        return Matrix(len(vs), len(vs), tuple(tuple(self.pair(a, b) for b in vs) for a in vs))

    def restrict(self, sub: Subspace) -> "BilinearSpace":
        """The space ``sub`` in the coordinates of its canonical basis."""
        self._check(sub)
        return BilinearSpace(self.gram(sub.basis), self.flavor)

    def _check(self, a: Subspace) -> None:
        if a.ambient_dim != self.dim:
            raise DimensionError(f"subspace of {a.ambient_dim}-space in a {self.dim}-dimensional space")

    def __repr__(self) -> str:
        return f"BilinearSpace(dim={self.dim}, rank={self.form.rank()}, {self.flavor})"


@dataclass(frozen=True)
class ProductSpace:
    """target x source with block form diag(omega_X, -omega_Y)."""

    target: BilinearSpace
    source: BilinearSpace

    @property
    def total(self) -> BilinearSpace:
        return BilinearSpace(Matrix.block_diag(self.target.form, -self.source.form), self.target.flavor)


def _presymplectic(space: BilinearSpace) -> None:
    if space.flavor != PRESYMPLECTIC:
        raise StructureError("orthogonality is computed on presymplectic spaces only; dualize Poisson data first")


def orthogonal(space: BilinearSpace, a: Subspace) -> Subspace:
    """A^perp = {x : omega(x, a) = 0 for all a in A}."""
    _presymplectic(space)
    space._check(a)
    if not a.basis:
        return Subspace.full(space.dim)
    return kernel(a.matrix() @ space.form.T)


def radical(space: BilinearSpace) -> Subspace:
    _presymplectic(space)
    return kernel(space.form)


def is_isotropic_subspace(space: BilinearSpace, a: Subspace) -> bool:
    space._check(a)
    return space.gram(a.basis).is_zero()


def is_symplectic_subspace(space: BilinearSpace, a: Subspace) -> bool:
    space._check(a)
    return space.gram(a.basis).rank() == a.dim


def symplectic_basis(space: BilinearSpace, a: Subspace) -> list[tuple[tuple, tuple]]:
    """Symplectic Gram-Schmidt on the canonical basis of ``a``.

    The first unpaired vector q is matched with the earliest later vector p of
    nonzero pairing, p is scaled so omega(q, p) = 1, and the remaining vectors
    are made orthogonal to both.
    """
    space._check(a)
    work = [list(v) for v in a.basis]
    pairs = []
    while work:
        q = work.pop(0)
        for j, cand in enumerate(work):
            w = space.pair(q, cand)
            if w:
                break
        else:
            raise StructureError("subspace is not symplectic")
        p = [x / w for x in work.pop(j)]
        rest = []
        for v in work:
            a_ = space.pair(v, p)
            b_ = space.pair(v, q)
            rest.append([vi - a_ * qi + b_ * pi for vi, qi, pi in zip(v, q, p)])
        work = rest
        pairs.append((tuple(q), tuple(p)))
    return pairs


def dual_basis(space: BilinearSpace, vectors: Sequence[Sequence], within: Subspace,
               avoid: Subspace | None = None) -> list[tuple]:
    """Isotropic vectors x_j in ``within``, orthogonal to ``avoid``, with
    omega(vectors[i], x_j) = delta_ij.

    ``vectors`` must span an isotropic subspace of ``within`` orthogonal to
    ``avoid``; ``within`` and ``avoid`` must be symplectic.
    """
    n = space.dim
    space._check(within)
    avoid = avoid if avoid is not None else Subspace.zero(n)
    space._check(avoid)
    vs = [vec(v) for v in vectors]
    a = Subspace.span(vs, n)
    if a.dim != len(vs):
        raise StructureError("vectors are linearly dependent")
    if not is_isotropic_subspace(space, a):
        raise StructureError("vectors do not span an isotropic subspace")
    if not is_subspace(a, within) or not is_subspace(avoid, within):
        raise NotInSubspaceError("vectors and avoid must lie in within")
    if not is_symplectic_subspace(space, within) or not is_symplectic_subspace(space, avoid):
        raise StructureError("within and avoid must be symplectic subspaces")
    if any(space.pair(v, w) for v in vs for w in avoid.basis):
        raise StructureError("vectors are not orthogonal to avoid")
    if not vs:
        return []
    room = intersect(within, orthogonal(space, avoid)) if avoid.basis else within
    # unknown x = sum_k c_k room_k; equations omega(v_i, x) = rhs_i
    sys_ = Matrix(len(vs), room.dim, tuple(tuple(space.pair(v, r) for r in room.basis) for v in vs))
    xs = []
    for j in range(len(vs)):
        rhs = [ONE if i == j else ZERO for i in range(len(vs))]
        c = solve(sys_, rhs)
        if c is None:
            raise StructureError("no dual vector exists; is within symplectic?")
        xs.append(combine(c, room.basis, n))
    # x_j <- x_j - 1/2 sum_k omega(x_j, x_k) v_k makes the duals isotropic
    fixed = []
    for xj in xs:
        coeffs = [-HALF * space.pair(xj, xk) for xk in xs]
        shift = combine(coeffs, vs, n)
        fixed.append(tuple(x + s for x, s in zip(xj, shift)))
    return fixed


def isotropic_dual_complement(space: BilinearSpace, a: Subspace, within: Subspace,
                              avoid: Subspace | None = None) -> Subspace:
    """Isotropic subspace of ``within`` paired nondegenerately with ``a`` and
    orthogonal to ``avoid``; see :func:`dual_basis`."""
    return Subspace.span(dual_basis(space, a.basis, within, avoid), space.dim)


def radical_complement_containing(space: BilinearSpace, s: Subspace) -> Subspace:
    """A complement of the radical that contains ``s`` (s must meet it trivially)."""
    r = radical(space)
    both = s + r
    if both.dim != s.dim + r.dim:
        raise StructureError("subspace meets the radical")
    return s + complement_in(both, Subspace.full(space.dim))


def negate_form(space: BilinearSpace) -> BilinearSpace:
    return BilinearSpace(-space.form, space.flavor)


def product(target: BilinearSpace, source: BilinearSpace) -> ProductSpace:
    if target.flavor != source.flavor:
        raise StructureError("cannot form a product of spaces of different flavors")
    return ProductSpace(target, source)


def direct_sum_spaces(*spaces: BilinearSpace) -> BilinearSpace:
    flavors = {s.flavor for s in spaces}
    if len(flavors) > 1:
        raise StructureError("flavor mismatch in direct sum")
    flavor = flavors.pop() if flavors else PRESYMPLECTIC
    return BilinearSpace(Matrix.block_diag(*(s.form for s in spaces)) if spaces else Matrix.zeros(0, 0), flavor)


def orthogonal_sum_holds(space: BilinearSpace, parts: Sequence[Subspace]) -> bool:
    """Parts are pairwise omega-orthogonal."""
    for i, a in enumerate(parts):
        for b in parts[i + 1:]:
            if any(space.pair(x, y) for x in a.basis for y in b.basis):
                return False
    return True


__all__ = [
    "BilinearSpace",
    "ProductSpace",
    "PRESYMPLECTIC",
    "POISSON",
    "J",
    "orthogonal",
    "radical",
    "is_isotropic_subspace",
    "is_symplectic_subspace",
    "symplectic_basis",
    "dual_basis",
    "isotropic_dual_complement",
    "radical_complement_containing",
    "negate_form",
    "product",
    "direct_sum_spaces",
    "orthogonal_sum_holds",
    "span_all",
]
