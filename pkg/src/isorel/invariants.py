"""The thirteen dimension invariants k1..k13 and recovery of multiplicities.

The integer matrix printed with the classification relates multiplicities to
invariants, k = M n, but does not say which column belongs to which
indecomposable.  The correspondence is derived here by evaluating the
invariants on the canonical models.  The derivation also exposes one
misprinted entry: the column of ``I13`` (R <- (R,0)) is printed with a 0 in
row 3, although its target is a zero-form line and so k3 = dim R_X = 1.  The
printed matrix is kept verbatim in :data:`PRINTED_M`; multiplicities are
recovered from the derived matrix, whose columns are the invariant vectors
of the models.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .catalog import TAGS, canonical_indecomposable
from .errors import NotIsotropicError, NotRealizableError, StructureError
from .linalg import Matrix, Subspace, intersect
from .relations import (
    LinearRelation,
    domain_Xf,
    image_fY,
    indeterminacy_f0,
    is_isotropic,
    kernel_0f,
)
from .spaces import PRESYMPLECTIC, orthogonal, radical

PRINTED_M = (
    (0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 1),
    (1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0),
    (0, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0),
    (0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0),
    (0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0),
    (0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 0, 0, 0),
)

INVARIANT_NAMES = (
    "1/2 dim X/R_X",
    "1/2 dim Y/R_Y",
    "dim R_X",
    "dim R_Y",
    "dim f0",
    "dim 0f",
    "dim f0 & R_X",
    "dim 0f & R_Y",
    "dim fY & R_X",
    "dim Xf & R_Y",
    "dim f & (R_X x R_Y)",
    "1/2 dim Xf/(Xf & Xf^perp)",
    "dim (Xf & Xf^perp)/0f",
)


@dataclass(frozen=True)
class InvariantVector:
    k: tuple[int, ...]

    def __post_init__(self):
        if len(self.k) != 13 or any(x < 0 for x in self.k):
            raise ValueError(f"invalid invariant vector {self.k}")

    def __getitem__(self, i: int) -> int:
        """1-based access: k[1] .. k[13]."""
        return self.k[i - 1]

    def __add__(self, other: "InvariantVector") -> "InvariantVector":
        return InvariantVector(tuple(a + b for a, b in zip(self.k, other.k)))

    def as_dict(self) -> dict[str, int]:
        return {f"k{i + 1}": v for i, v in enumerate(self.k)}


@dataclass(frozen=True)
class MultiplicityVector:
    n: tuple[int, ...]

    def __post_init__(self):
        if len(self.n) != 13 or any(x < 0 for x in self.n):
            raise ValueError(f"invalid multiplicity vector {self.n}")

    def __getitem__(self, tag: str) -> int:
        return self.n[TAGS.index(tag)]

    def __add__(self, other: "MultiplicityVector") -> "MultiplicityVector":
        return MultiplicityVector(tuple(a + b for a, b in zip(self.n, other.n)))

    def as_dict(self) -> dict[str, int]:
        return dict(zip(TAGS, self.n))

    def support(self) -> set[str]:
        return {t for t, c in zip(TAGS, self.n) if c}


@dataclass(frozen=True)
class ClassificationMatrix:
    """The printed matrix plus the derived catalog/column correspondence.

    ``column_permutation[i]`` is the (0-based) column of ``m`` belonging to
    catalog type ``TAGS[i]``.  ``derived`` has the same column order as ``m``
    but each column is the invariant vector of its catalog model; ``errata``
    lists (row, col, printed, derived) for every entry where they differ, in
    1-based indices.
    """

    m: tuple[tuple[int, ...], ...]
    column_permutation: tuple[int, ...] | None = None
    derived: tuple[tuple[int, ...], ...] | None = None
    errata: tuple[tuple[int, int, int, int], ...] = field(default=())

    def matrix(self) -> Matrix:
        return Matrix.from_rows(self.m)

    def det(self) -> int:
        return _int_det(self.m)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.m)


def _int_det(rows) -> int:
    # Bareiss fraction-free elimination
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def paper_matrix() -> ClassificationMatrix:
    m = ClassificationMatrix(PRINTED_M)
    if m.det() not in (1, -1):
        raise AssertionError("printed classification matrix is not unimodular")
    return m


def _half(d: int, what: str) -> int:
    if d % 2:
        raise StructureError(f"internal parity error: {what} has odd dimension {d}")
    return d // 2


def compute_invariants(f: LinearRelation, check: bool = True) -> InvariantVector:
    """k1..k13 of an isotropic relation between presymplectic spaces."""
    if f.flavor != PRESYMPLECTIC:
        raise StructureError("compute_invariants takes presymplectic relations; dualize Poisson ones first")
    if check and not is_isotropic(f):
        raise NotIsotropicError("relation is not isotropic")
    X, Y = f.target, f.source
    rx, ry = radical(X), radical(Y)
    f0, zf = indeterminacy_f0(f), kernel_0f(f)
    fy, xf = image_fY(f), domain_Xf(f)
    m = X.dim
    zero_t = (0,) * Y.dim
    zero_s = (0,) * m
    box = Subspace.span([r + zero_t for r in rx.basis] + [zero_s + r for r in ry.basis], m + Y.dim)
    xf_core = intersect(xf, orthogonal(Y, xf))
    k = (
        _half(X.dim - rx.dim, "X/R_X"),
        _half(Y.dim - ry.dim, "Y/R_Y"),
        rx.dim,
        ry.dim,
        f0.dim,
        zf.dim,
        intersect(f0, rx).dim,
        intersect(zf, ry).dim,
        intersect(fy, rx).dim,
        intersect(xf, ry).dim,
        intersect(f.graph, box).dim,
        _half(xf.dim - xf_core.dim, "Xf/(Xf & Xf^perp)"),
        xf_core.dim - zf.dim,
    )
    return InvariantVector(k)


_lock = threading.Lock()
_cached: ClassificationMatrix | None = None


def derive_column_permutation() -> ClassificationMatrix:
    """Match each catalog model's invariant vector to a column of the printed
    matrix.

    Exact matches are taken first; a model whose vector matches no column
    is assigned to the unique unused column at Hamming distance one, and the
    differing entry is recorded as an erratum.  Anything else (ties, larger
    distance, a non-bijective match, a derived matrix that is not unimodular)
    raises.
    """
    printed = paper_matrix()
    cols = [printed.column(j) for j in range(13)]
    vectors = [compute_invariants(canonical_indecomposable(t)).k for t in TAGS]
    if len(set(vectors)) != 13:
        raise AssertionError("catalog invariant vectors are not pairwise distinct")
    perm: list[int | None] = [None] * 13
    for i, v in enumerate(vectors):
        hits = [j for j, c in enumerate(cols) if c == v]
        if len(hits) > 1:
            raise AssertionError(f"{TAGS[i]} matches several columns {hits}")
        if hits:
            perm[i] = hits[0]
    used = {j for j in perm if j is not None}
    if len(used) != sum(j is not None for j in perm):
        raise AssertionError("two catalog types match the same column")
    for i, v in enumerate(vectors):
        if perm[i] is not None:
            continue
        near = [j for j in range(13) if j not in used
                and sum(a != b for a, b in zip(cols[j], v)) == 1]
        if len(near) != 1:
            raise AssertionError(f"no unique column for {TAGS[i]} (invariants {v})")
        perm[i] = near[0]
        used.add(near[0])
    derived_cols = [None] * 13
    for i, j in enumerate(perm):
        derived_cols[j] = vectors[i]
    derived = tuple(tuple(derived_cols[j][r] for j in range(13)) for r in range(13))
    errata = tuple(
        (r + 1, c + 1, PRINTED_M[r][c], derived[r][c])
        for r in range(13) for c in range(13) if PRINTED_M[r][c] != derived[r][c]
    )
    if _int_det(derived) not in (1, -1):
        raise AssertionError("derived classification matrix is not unimodular")
    return ClassificationMatrix(PRINTED_M, tuple(perm), derived, errata)


def classification() -> ClassificationMatrix:
    """Lazily derived, shared correspondence (thread-safe, idempotent)."""
    global _cached
    if _cached is None:
        with _lock:
            if _cached is None:
                _cached = derive_column_permutation()
    return _cached


def catalog_matrix() -> Matrix:
    """Matrix with k = (catalog_matrix) n when n is in catalog order I1..I13."""
    cm = classification()
    return Matrix.from_rows([[cm.derived[r][cm.column_permutation[i]] for i in range(13)] for r in range(13)])


_inverse_cache: list = []


def catalog_matrix_inverse() -> Matrix:
    if not _inverse_cache:
        inv = catalog_matrix().inverse()
        if any(x.denominator != 1 for r in inv.entries for x in r):
            raise AssertionError("classification matrix inverse is not integral")
        _inverse_cache.append(inv)
    return _inverse_cache[0]


def multiplicities(k: InvariantVector) -> MultiplicityVector:
    """n = M^-1 k, in catalog order."""
    n = catalog_matrix_inverse().apply(k.k)
    if any(x.denominator != 1 or x < 0 for x in n):
        raise NotRealizableError(f"invariant vector not realizable: M^-1 k = {[str(x) for x in n]}")
    return MultiplicityVector(tuple(int(x) for x in n))


def predicted_invariants(n) -> InvariantVector:
    """k = M n for a multiplicity vector in catalog order."""
    from .catalog import as_counts

    return InvariantVector(tuple(int(x) for x in catalog_matrix().apply(as_counts(n))))


def multiplicities_of(f: LinearRelation) -> MultiplicityVector:
    """Multiplicity vector of an isotropic or coisotropic relation."""
    if f.flavor != PRESYMPLECTIC:
        from .duality import annihilator

        f = annihilator(f)
        try:
            return multiplicities(compute_invariants(f))
        except NotIsotropicError:
            raise NotIsotropicError("relation is not coisotropic") from None
    return multiplicities(compute_invariants(f))
