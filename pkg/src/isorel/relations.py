"""Linear relations X <- Y stored as subspaces of X x Y.

Coordinates are always ordered target block first, source block second.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionError, NotInSubspaceError, SingularMatrixError, StructureError
from .linalg import (
    ZERO,
    Matrix,
    Subspace,
    _kernel_rows,
    _rref_rows,
    combine,
    coords,
    intersect,
    solve,
    vec,
)
from .spaces import (
    POISSON,
    PRESYMPLECTIC,
    BilinearSpace,
    direct_sum_spaces,
    is_isotropic_subspace,
    product,
)


@dataclass(frozen=True)
class LinearRelation:
    target: BilinearSpace
    source: BilinearSpace
    graph: Subspace

    def __post_init__(self):
        if self.graph.ambient_dim != self.target.dim + self.source.dim:
            raise DimensionError(
                f"graph lives in {self.graph.ambient_dim}-space, expected "
                f"{self.target.dim} + {self.source.dim}"
            )
        if self.target.flavor != self.source.flavor:
            raise StructureError("target and source flavors differ")

    @classmethod
    def from_pairs(cls, target: BilinearSpace, source: BilinearSpace,
                   pairs: Sequence[tuple[Sequence, Sequence]]) -> "LinearRelation":
        """Relation spanned by (x, y) pairs."""
        n = target.dim + source.dim
        return cls(target, source, Subspace.span((tuple(x) + tuple(y) for x, y in pairs), n))

    @classmethod
    def from_basis(cls, target: BilinearSpace, source: BilinearSpace, basis) -> "LinearRelation":
        return cls(target, source, Subspace.span(basis, target.dim + source.dim))

    @property
    def flavor(self) -> str:
        return self.target.flavor

    @property
    def dim(self) -> int:
        return self.graph.dim

    def split(self, v: Sequence) -> tuple[tuple, tuple]:
        m = self.target.dim
        return tuple(v[:m]), tuple(v[m:])

    def __repr__(self) -> str:
        return (f"LinearRelation({self.target.dim} <- {self.source.dim}, "
                f"dim={self.graph.dim}, {self.flavor})")


def _blocks(f: LinearRelation) -> tuple[list, list]:
    m = f.target.dim
    return [r[:m] for r in f.graph.basis], [r[m:] for r in f.graph.basis]


def _vanishing_part(keep: list, zero: list, n_keep: int) -> Subspace:
    """Span of the ``keep`` parts of graph vectors whose ``zero`` part vanishes."""
    if not keep:
        return Subspace.zero(n_keep)
    k = len(zero)
    nzero = len(zero[0])
    # combinations c with sum c_i zero_i = 0: kernel of the transpose
    cols = [[zero[i][j] for i in range(k)] for j in range(nzero)]
    cs = _kernel_rows(cols, k) if nzero else [[1 if i == j else 0 for i in range(k)] for j in range(k)]
    return Subspace.span((combine(vec(c), keep, n_keep) for c in cs), n_keep)


def kernel_0f(f: LinearRelation) -> Subspace:
    """0f = {y : (0, y) in f}."""
    xs, ys = _blocks(f)
    return _vanishing_part(ys, xs, f.source.dim)


def indeterminacy_f0(f: LinearRelation) -> Subspace:
    """f0 = {x : (x, 0) in f}."""
    xs, ys = _blocks(f)
    return _vanishing_part(xs, ys, f.target.dim)


def domain_Xf(f: LinearRelation) -> Subspace:
    """Projection of the graph to the source."""
    return Subspace.span(_blocks(f)[1], f.source.dim)


def image_fY(f: LinearRelation) -> Subspace:
    """Projection of the graph to the target."""
    return Subspace.span(_blocks(f)[0], f.target.dim)


def product_space(f: LinearRelation):
    return product(f.target, f.source)


def is_isotropic(f: LinearRelation) -> bool:
    if f.flavor != PRESYMPLECTIC:
        raise StructureError("is_isotropic needs presymplectic spaces")
    return is_isotropic_subspace(product_space(f).total, f.graph)


def is_coisotropic(f: LinearRelation) -> bool:
    if f.flavor != POISSON:
        raise StructureError("is_coisotropic needs Poisson spaces")
    from .duality import annihilator

    return is_isotropic(annihilator(f))


def is_admissible(f: LinearRelation) -> bool:
    """Isotropic for presymplectic relations, coisotropic for Poisson ones."""
    return is_isotropic(f) if f.flavor == PRESYMPLECTIC else is_coisotropic(f)


def transpose(f: LinearRelation) -> LinearRelation:
    m = f.target.dim
    rows = [r[m:] + r[:m] for r in f.graph.basis]
    return LinearRelation(f.source, f.target, Subspace.span(rows, f.graph.ambient_dim))


def compose(f: LinearRelation, g: LinearRelation) -> LinearRelation:
    """{(x, z) : (x, y) in f and (y, z) in g for some y}."""
    if f.source != g.target:
        raise StructureError("compose: source of f must equal target of g")
    a, b, c = f.target.dim, f.source.dim, g.source.dim
    n = a + b + c
    zc, za = (ZERO,) * c, (ZERO,) * a
    f_lift = [r + zc for r in f.graph.basis] + [_unit(n, a + b + k) for k in range(c)]
    g_lift = [za + r for r in g.graph.basis] + [_unit(n, k) for k in range(a)]
    both = intersect(Subspace.span(f_lift, n), Subspace.span(g_lift, n))
    rows = [r[:a] + r[a + b:] for r in both.basis]
    return LinearRelation(f.target, g.source, Subspace.span(rows, a + c))


def _unit(n: int, i: int) -> tuple:
    return tuple(vec(1 if j == i else 0 for j in range(n)))


def direct_sum(*fs: LinearRelation) -> LinearRelation:
    """Block direct sum, graph in (X1 + X2 + ...) x (Y1 + Y2 + ...)."""
    if len({f.flavor for f in fs}) > 1:
        raise StructureError("direct_sum: flavors differ")
    flavor = fs[0].flavor if fs else PRESYMPLECTIC
    target = direct_sum_spaces(*(f.target for f in fs)) if fs else BilinearSpace.zero_form(0, flavor)
    source = direct_sum_spaces(*(f.source for f in fs)) if fs else BilinearSpace.zero_form(0, flavor)
    mt, ms = target.dim, source.dim
    rows = []
    ot = os_ = 0
    for f in fs:
        a, b = f.target.dim, f.source.dim
        for r in f.graph.basis:
            x, y = r[:a], r[a:]
            rows.append((ZERO,) * ot + x + (ZERO,) * (mt - ot - a)
                        + (ZERO,) * os_ + y + (ZERO,) * (ms - os_ - b))
        ot += a
        os_ += b
    red, _ = _rref_rows(rows, mt + ms)
    return LinearRelation(target, source, Subspace(mt + ms, tuple(tuple(r) for r in red)))


def transport_space(space: BilinearSpace, P: Matrix, P_inv: Matrix | None = None) -> BilinearSpace:
    """Structure carried along x -> P x.

    A presymplectic form becomes P^-T omega P^-1; a Poisson bivector, being a
    form on the dual, becomes P pi P^T.
    """
    if space.flavor == POISSON:
        return BilinearSpace(P @ space.form @ P.T, POISSON)
    P_inv = P_inv if P_inv is not None else P.inverse()
    return BilinearSpace(P_inv.T @ space.form @ P_inv, PRESYMPLECTIC)


def apply_iso_pair(f: LinearRelation, P: Matrix, Q: Matrix) -> LinearRelation:
    """The relation {(P x, Q y) : (x, y) in f} with transported structures."""
    m, k = f.target.dim, f.source.dim
    if P.shape != (m, m) or Q.shape != (k, k):
        raise DimensionError(f"expected {m}x{m} and {k}x{k} matrices, got {P.shape} and {Q.shape}")
    try:
        P_inv, Q_inv = P.inverse(), Q.inverse()
    except SingularMatrixError as exc:
        raise SingularMatrixError("apply_iso_pair needs invertible P and Q") from exc
    rows = [P.apply(r[:m]) + Q.apply(r[m:]) for r in f.graph.basis]
    return LinearRelation(
        transport_space(f.target, P, P_inv),
        transport_space(f.source, Q, Q_inv),
        Subspace.span(rows, m + k),
    )


def is_cartesian(f: LinearRelation) -> bool:
    """f = fY x Xf."""
    return f.graph.dim == image_fY(f).dim + domain_Xf(f).dim


def is_biinjective(f: LinearRelation) -> bool:
    return kernel_0f(f).dim == 0 and indeterminacy_f0(f).dim == 0


def cartesian_product(target: BilinearSpace, source: BilinearSpace, a: Subspace, b: Subspace) -> LinearRelation:
    """The relation a x b inside target x source."""
    zs, zt = (ZERO,) * source.dim, (ZERO,) * target.dim
    rows = [r + zs for r in a.basis] + [zt + r for r in b.basis]
    return LinearRelation(target, source, Subspace.span(rows, target.dim + source.dim))


def identity_relation(space: BilinearSpace) -> LinearRelation:
    n = space.dim
    return LinearRelation(space, space, Subspace.span((_unit(n, i) + _unit(n, i) for i in range(n)), 2 * n))


def full_relation(target: BilinearSpace, source: BilinearSpace) -> LinearRelation:
    return LinearRelation(target, source, Subspace.full(target.dim + source.dim))


def zero_relation(target: BilinearSpace, source: BilinearSpace) -> LinearRelation:
    return LinearRelation(target, source, Subspace.zero(target.dim + source.dim))


# -- transport of subspaces and vectors through a relation ------------------


def image_of(f: LinearRelation, s: Subspace) -> Subspace:
    """f(S) = {x : (x, y) in f for some y in S}."""
    if s.ambient_dim != f.source.dim:
        raise DimensionError("subspace does not live in the source")
    m = f.target.dim
    lifted = Subspace.span([(ZERO,) * m + r for r in s.basis] + [_unit(m + f.source.dim, i) for i in range(m)],
                           f.graph.ambient_dim)
    both = intersect(f.graph, lifted)
    return Subspace.span((r[:m] for r in both.basis), m)


def preimage_of(f: LinearRelation, t: Subspace) -> Subspace:
    """f^-1(T) = {y : (x, y) in f for some x in T}."""
    return image_of(transpose(f), t)


def push_vector(f: LinearRelation, y: Sequence) -> tuple:
    """The unique x with (x, y) in f; f must be injective on its domain."""
    return _transport_vector(f, y, from_source=True)


def pull_vector(f: LinearRelation, x: Sequence) -> tuple:
    """The unique y with (x, y) in f; f must have zero kernel."""
    return _transport_vector(f, x, from_source=False)


def _transport_vector(f: LinearRelation, v: Sequence, from_source: bool) -> tuple:
    xs, ys = _blocks(f)
    known, wanted = (ys, xs) if from_source else (xs, ys)
    n_known = f.source.dim if from_source else f.target.dim
    n_wanted = f.target.dim if from_source else f.source.dim
    v = vec(v)
    if not known:
        if any(v):
            raise NotInSubspaceError("vector is not related to anything")
        return (ZERO,) * n_wanted
    mat = Matrix(n_known, len(known), tuple(tuple(k[j] for k in known) for j in range(n_known)))
    if mat.rank() != len(known):
        raise StructureError("relation is not single-valued in this direction")
    c = solve(mat, v)
    if c is None:
        raise NotInSubspaceError("vector is not related to anything")
    return combine(c, wanted, n_wanted)


def restrict(f: LinearRelation, x_sub: Subspace, y_sub: Subspace) -> LinearRelation:
    """f intersected with x_sub x y_sub, in the canonical-basis coordinates
    of x_sub and y_sub, with the induced forms."""
    m = f.target.dim
    zs, zt = (ZERO,) * f.source.dim, (ZERO,) * m
    box = Subspace.span([r + zs for r in x_sub.basis] + [zt + r for r in y_sub.basis], f.graph.ambient_dim)
    part = intersect(f.graph, box)
    rows = [coords(x_sub, r[:m]) + coords(y_sub, r[m:]) for r in part.basis]
    return LinearRelation(f.target.restrict(x_sub), f.source.restrict(y_sub),
                          Subspace.span(rows, x_sub.dim + y_sub.dim))
