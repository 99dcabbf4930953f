"""Exact rational matrices and subspaces.

Every subspace is stored by its reduced row-echelon basis, so two subspaces
are equal exactly when their stored bases are equal entry by entry.  Nothing
in this module uses a tolerance.

The scalar type is chosen once, here: ``gmpy2.mpq`` when available, otherwise
:class:`fractions.Fraction`.  Both are exact rationals in lowest terms with a
positive denominator, and the rest of the package only talks to them through
:func:`scalar`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

try:  # pragma: no cover - exercised implicitly
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

from .errors import DimensionError, NotInSubspaceError, SingularMatrixError

ZERO = _Q(0)
ONE = _Q(1)
HALF = _Q(1, 2)


def scalar(x) -> object:
    """Coerce an int, Fraction, rational string (``"-3/7"``) or scalar."""
    if isinstance(x, _Q):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return _Q(x)
    if isinstance(x, Fraction):
        return _Q(x.numerator, x.denominator)
    if isinstance(x, str):
        s = x.strip()
        if "/" in s:
            num, den = s.split("/", 1)
            n, d = int(num), int(den)
            if d == 0:
                raise ZeroDivisionError(f"zero denominator in {x!r}")
            return _Q(n, d)
        return _Q(int(s))
    if hasattr(x, "numerator") and hasattr(x, "denominator"):
        return _Q(int(x.numerator), int(x.denominator))
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def vec(values: Iterable) -> tuple:
    return tuple(scalar(v) for v in values)


# ---------------------------------------------------------------------------
# raw row-list kernels; all inputs are sequences of scalar rows


def _rref_rows(rows: Sequence[Sequence], ncols: int) -> tuple[list[list], list[int]]:
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        row = m[r]
        inv = ONE / row[c]
        if inv != ONE:
            row = [x * inv for x in row]
            m[r] = row
        nz = [j for j in range(c, ncols) if row[j]]
        for i in range(nrows):
            if i != r:
                other = m[i]
                factor = other[c]
                if factor:
                    for j in nz:
                        other[j] -= factor * row[j]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def _kernel_rows(rows: Sequence[Sequence], ncols: int) -> list[list]:
    red, pivots = _rref_rows(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for i, p in enumerate(pivots):
            v[p] = -red[i][free]
        basis.append(v)
    return _rref_rows(basis, ncols)[0]


class _Reducer:
    """Incremental echelon used for greedy rank extension."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, list] = {}

    def reduce(self, v: Sequence) -> list:
        w = list(v)
        for p in sorted(self.rows):
            c = w[p]
            if c:
                row = self.rows[p]
                for j in range(p, self.ncols):
                    if row[j]:
                        w[j] -= c * row[j]
        return w

    def add(self, v: Sequence) -> bool:
        w = self.reduce(v)
        for p, x in enumerate(w):
            if x:
                inv = ONE / x
                self.rows[p] = [y * inv for y in w]
                return True
        return False


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Matrix:
    """Dense exact matrix; ``entries`` is a tuple of row tuples."""

    rows: int
    cols: int
    entries: tuple

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], cols: int | None = None) -> "Matrix":
        ent = tuple(vec(r) for r in rows)
        if cols is None:
            if not ent:
                raise DimensionError("column count required for an empty matrix")
            cols = len(ent[0])
        for r in ent:
            if len(r) != cols:
                raise DimensionError(f"ragged row of length {len(r)}, expected {cols}")
        return cls(len(ent), cols, ent)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple((ZERO,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def block_diag(cls, *blocks: "Matrix") -> "Matrix":
        n = sum(b.cols for b in blocks)
        out = []
        off = 0
        for b in blocks:
            for r in b.entries:
                out.append((ZERO,) * off + r + (ZERO,) * (n - off - b.cols))
            off += b.cols
        return cls(len(out), n, tuple(out))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple((ZERO,) * 0 for _ in range(self.cols)))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.T.entries
        out = tuple(
            tuple(_dot(r, c) for c in cols) if other.cols else ()
            for r in self.entries
        )
        return Matrix(self.rows, other.cols, out)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(tuple(-x for x in r) for r in self.entries))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix(self.rows, self.cols, tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def apply(self, v: Sequence) -> tuple:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(_dot(r, v) for r in self.entries)

    def is_zero(self) -> bool:
        return not any(x for r in self.entries for x in r)

    def is_skew(self) -> bool:
        if self.rows != self.cols:
            return False
        e = self.entries
        return all(e[i][j] == -e[j][i] for i in range(self.rows) for j in range(i, self.rows))

    def rank(self) -> int:
        return len(_rref_rows(self.entries, self.cols)[1])

    def inverse(self) -> "Matrix":
        n = self.rows
        if n != self.cols:
            raise SingularMatrixError(f"non-square matrix {self.shape}")
        aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.entries)]
        red, piv = _rref_rows(aug, 2 * n)
        if piv[:n] != list(range(n)) or len(piv) < n:
            raise SingularMatrixError("matrix is not invertible")
        return Matrix(n, n, tuple(tuple(r[n:]) for r in red))

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def tolist(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.entries]


def _dot(a: Sequence, b: Sequence):
    s = ZERO
    for x, y in zip(a, b):
        if x and y:
            s += x * y
    return s


def rref(m: Matrix) -> Matrix:
    """Reduced row-echelon form with zero rows dropped."""
    red, _ = _rref_rows(m.entries, m.cols)
    return Matrix(len(red), m.cols, tuple(tuple(r) for r in red))


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n held by its canonical RREF basis (one row per vector).

    Build instances with :meth:`span`; the raw constructor trusts its input.
    """

    ambient_dim: int
    basis: tuple

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        rows = []
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionError(f"vector of length {len(v)} in {ambient_dim}-space")
            rows.append(vec(v))
        red, _ = _rref_rows(rows, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in red))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, Matrix.identity(n).entries)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.basis)

    def matrix(self) -> Matrix:
        return Matrix(self.dim, self.ambient_dim, self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def __le__(self, other: "Subspace") -> bool:
        return is_subspace(self, other)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __repr__(self) -> str:
        rows = ", ".join("(" + ", ".join(str(x) for x in r) + ")" for r in self.basis)
        return f"Subspace(dim={self.dim}/{self.ambient_dim}, [{rows}])"


def _check_same(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def kernel(m: Matrix) -> Subspace:
    """Null space {v : m v = 0}."""
    return Subspace(m.cols, tuple(tuple(r) for r in _kernel_rows(m.entries, m.cols)))


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same(a, b)
    if not b.basis:
        return a
    if not a.basis:
        return b
    red, _ = _rref_rows(a.basis + b.basis, a.ambient_dim)
    return Subspace(a.ambient_dim, tuple(tuple(r) for r in red))


def span_all(parts: Iterable[Subspace], ambient_dim: int) -> Subspace:
    rows = []
    for p in parts:
        if p.ambient_dim != ambient_dim:
            raise DimensionError(f"ambient dimensions differ: {p.ambient_dim} vs {ambient_dim}")
        rows.extend(p.basis)
    red, _ = _rref_rows(rows, ambient_dim)
    return Subspace(ambient_dim, tuple(tuple(r) for r in red))


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection by the Zassenhaus trick: rref of [[A, A], [B, 0]]."""
    _check_same(a, b)
    n = a.ambient_dim
    if not a.basis or not b.basis:
        return Subspace.zero(n)
    zero = (ZERO,) * n
    rows = [r + r for r in a.basis] + [r + zero for r in b.basis]
    red, piv = _rref_rows(rows, 2 * n)
    out = [r[n:] for r, p in zip(red, piv) if p >= n]
    return Subspace(n, tuple(tuple(r) for r in _rref_rows(out, n)[0]))


def is_subspace(a: Subspace, b: Subspace) -> bool:
    _check_same(a, b)
    return all(contains(b, v) for v in a.basis)


def is_direct_sum(whole: Subspace, parts: Sequence[Subspace]) -> bool:
    """True iff ``whole`` is the internal direct sum of ``parts``."""
    if sum(p.dim for p in parts) != whole.dim:
        return False
    return span_all(parts, whole.ambient_dim) == whole


def complement_in(inner: Subspace, outer: Subspace) -> Subspace:
    """Greedy complement of ``inner`` inside ``outer``.

    Walks outer's canonical basis in pivot order and keeps a vector iff it
    raises the rank; the kept vectors span the result.
    """
    _check_same(inner, outer)
    if not is_subspace(inner, outer):
        raise NotInSubspaceError("complement_in: inner is not contained in outer")
    red = _Reducer(outer.ambient_dim)
    for v in inner.basis:
        red.add(v)
    picked = []
    need = outer.dim - inner.dim
    for v in outer.basis:
        if len(picked) == need:
            break
        if red.add(v):
            picked.append(v)
    return Subspace.span(picked, outer.ambient_dim)


def coords(a: Subspace, v: Sequence) -> tuple:
    """Coefficients of ``v`` over the canonical basis of ``a``."""
    if len(v) != a.ambient_dim:
        raise DimensionError(f"vector of length {len(v)} in {a.ambient_dim}-space")
    v = vec(v)
    c = tuple(v[p] for p in a.pivots)
    w = list(v)
    for ci, row in zip(c, a.basis):
        if ci:
            for j, x in enumerate(row):
                if x:
                    w[j] -= ci * x
    if any(w):
        raise NotInSubspaceError("vector does not lie in the subspace")
    return c


def contains(a: Subspace, v: Sequence) -> bool:
    try:
        coords(a, v)
    except NotInSubspaceError:
        return False
    return True


def solve(m: Matrix, rhs: Sequence) -> tuple | None:
    """Some solution x of m x = rhs (free variables set to zero), or None."""
    if len(rhs) != m.rows:
        raise DimensionError(f"rhs of length {len(rhs)} for {m.shape} matrix")
    rhs = vec(rhs)
    aug = [list(r) + [b] for r, b in zip(m.entries, rhs)]
    red, piv = _rref_rows(aug, m.cols + 1)
    if piv and piv[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for r, p in zip(red, piv):
        x[p] = r[m.cols]
    return tuple(x)


def combine(coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> tuple:
    """Linear combination sum_i coeffs[i] * vectors[i] in Q^n."""
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for j, x in enumerate(v):
                if x:
                    out[j] += c * x
    return tuple(out)


def embed(sub: Subspace, local: Subspace) -> Subspace:
    """Image of a subspace given in ``sub``-coordinates inside the ambient space."""
    if local.ambient_dim != sub.dim:
        raise DimensionError("local subspace does not live in the given coordinates")
    return Subspace.span((combine(v, sub.basis, sub.ambient_dim) for v in local.basis), sub.ambient_dim)
