"""The thirteen indecomposable relations, canonical direct sums of them, and
random isomorphic copies for testing.

Tags ``I1`` .. ``I13`` follow the isotropic listing order:

====  ===============  =====================================
tag   spaces           graph
====  ===============  =====================================
I1    R^2 <- R^2       identity
I2    R^2 <- 0         (R,0) x 0
I3    0   <- R^2       0 x (R,0)
I4    R^2 <- 0         zero
I5    0   <- R^2       zero
I6    R^2 <- R^2       q1 = q2 = 0, p1 = p2
I7    R   <- R         identity (zero forms)
I8    R   <- 0         R x 0
I9    0   <- R         0 x R
I10   R   <- 0         zero
I11   0   <- R         zero
I12   R^2 <- R         (R,0) <- R
I13   R   <- R^2       R <- (R,0)
====  ===============  =====================================

Every R^2 carries J (omega(q, p) = 1); every R carries the zero form.  The
Poisson models are the coisotropic list, which swaps target and source.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .linalg import Matrix, Subspace
from .relations import LinearRelation, apply_iso_pair, direct_sum
from .spaces import POISSON, PRESYMPLECTIC, BilinearSpace

TAGS = tuple(f"I{i}" for i in range(1, 14))

SYMPLECTIC_2 = "symplectic-2"
ZERO_1 = "zero-1"
TRIVIAL_0 = "trivial-0"

_KIND_DIM = {SYMPLECTIC_2: 2, ZERO_1: 1, TRIVIAL_0: 0}


@dataclass(frozen=True)
class IndecompType:
    tag: str
    target_kind: str
    source_kind: str
    generators: tuple  # (x, y) pairs spanning the isotropic model
    name: str

    @property
    def target_dim(self) -> int:
        return _KIND_DIM[self.target_kind]

    @property
    def source_dim(self) -> int:
        return _KIND_DIM[self.source_kind]


S2, Z1, T0 = SYMPLECTIC_2, ZERO_1, TRIVIAL_0

INDECOMPOSABLES = (
    IndecompType("I1", S2, S2, (((1, 0), (1, 0)), ((0, 1), (0, 1))), "identity R^2 <- R^2"),
    IndecompType("I2", S2, T0, (((1, 0), ()),), "(R,0) x 0 : R^2 <- 0"),
    IndecompType("I3", T0, S2, (((), (1, 0)),), "0 x (R,0) : 0 <- R^2"),
    IndecompType("I4", S2, T0, (), "zero R^2 <- 0"),
    IndecompType("I5", T0, S2, (), "zero 0 <- R^2"),
    IndecompType("I6", S2, S2, (((0, 1), (0, 1)),), "q1 = q2 = 0, p1 = p2 : R^2 <- R^2"),
    IndecompType("I7", Z1, Z1, (((1,), (1,)),), "identity R <- R"),
    IndecompType("I8", Z1, T0, (((1,), ()),), "R x 0 : R <- 0"),
    IndecompType("I9", T0, Z1, (((), (1,)),), "0 x R : 0 <- R"),
    IndecompType("I10", Z1, T0, (), "zero R <- 0"),
    IndecompType("I11", T0, Z1, (), "zero 0 <- R"),
    IndecompType("I12", S2, Z1, (((1, 0), (1,)),), "(R,0) <- R : R^2 <- R"),
    IndecompType("I13", Z1, S2, (((1,), (1, 0)),), "R <- (R,0) : R <- R^2"),
)

BY_TAG = {t.tag: t for t in INDECOMPOSABLES}

# Coisotropic models as listed for Poisson spaces (target, source, generators).
_POISSON_MODELS = {
    "I1": (S2, S2, (((1, 0), (1, 0)), ((0, 1), (0, 1)))),
    "I2": (T0, S2, (((), (1, 0)),)),
    "I3": (S2, T0, (((1, 0), ()),)),
    "I4": (T0, S2, (((), (1, 0)), ((), (0, 1)))),
    "I5": (S2, T0, (((1, 0), ()), ((0, 1), ()))),
    "I6": (S2, S2, (((1, 0), (0, 0)), ((0, 0), (1, 0)), ((0, 1), (0, 1)))),
    "I7": (Z1, Z1, (((1,), (1,)),)),
    "I8": (T0, Z1, ()),
    "I9": (Z1, T0, ()),
    "I10": (T0, Z1, (((), (1,)),)),
    "I11": (Z1, T0, (((1,), ()),)),
    "I12": (Z1, S2, (((1,), (1, 0)), ((0,), (0, 1)))),
    "I13": (S2, Z1, (((1, 0), (1,)), ((0, 1), (0,)))),
}

POISSON_NAMES = {
    "I1": "identity R^2 <- R^2",
    "I2": "0 x (R,0) : 0 <- R^2",
    "I3": "(R,0) x 0 : R^2 <- 0",
    "I4": "0 x R^2 : 0 <- R^2",
    "I5": "R^2 x 0 : R^2 <- 0",
    "I6": "p1* = p2* : R^2 <- R^2",
    "I7": "identity R <- R",
    "I8": "zero 0 <- R",
    "I9": "zero R <- 0",
    "I10": "0 x R : 0 <- R",
    "I11": "R x 0 : R <- 0",
    "I12": "projection to the first factor : R <- R^2",
    "I13": "transposed projection : R^2 <- R",
}


def _space(kind: str, flavor: str) -> BilinearSpace:
    if kind == SYMPLECTIC_2:
        return BilinearSpace.standard(1, flavor)
    return BilinearSpace.zero_form(_KIND_DIM[kind], flavor)


def _check_tag(tag: str) -> None:
    if tag not in BY_TAG:
        raise KeyError(f"unknown indecomposable tag {tag!r}; expected one of I1..I13")


@lru_cache(maxsize=None)
def canonical_indecomposable(tag: str, flavor: str = PRESYMPLECTIC) -> LinearRelation:
    _check_tag(tag)
    if flavor == PRESYMPLECTIC:
        t = BY_TAG[tag]
        tk, sk, gens = t.target_kind, t.source_kind, t.generators
    elif flavor == POISSON:
        tk, sk, gens = _POISSON_MODELS[tag]
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    return LinearRelation.from_pairs(_space(tk, flavor), _space(sk, flavor), gens)


def type_name(tag: str, flavor: str = PRESYMPLECTIC) -> str:
    _check_tag(tag)
    return BY_TAG[tag].name if flavor == PRESYMPLECTIC else POISSON_NAMES[tag]


def as_counts(n) -> tuple[int, ...]:
    """Normalize a multiplicity vector given as a 13-sequence or a tag mapping."""
    if isinstance(n, Mapping):
        for k in n:
            _check_tag(k)
        counts = tuple(int(n.get(t, 0)) for t in TAGS)
    else:
        counts = tuple(int(x) for x in n)
        if len(counts) != 13:
            raise ValueError(f"multiplicity vector must have 13 entries, got {len(counts)}")
    if any(c < 0 for c in counts):
        raise ValueError("multiplicities must be nonnegative")
    return counts


def block_sequence(n) -> list[str]:
    """Tags of the canonical sum's blocks, in order."""
    return [t for t, c in zip(TAGS, as_counts(n)) for _ in range(c)]


def canonical_sum(n, flavor: str = PRESYMPLECTIC) -> LinearRelation:
    counts = as_counts(n)
    return _canonical_sum(counts, flavor)


@lru_cache(maxsize=4096)
def _canonical_sum(counts: tuple[int, ...], flavor: str) -> LinearRelation:
    blocks = [canonical_indecomposable(t, flavor) for t in block_sequence(counts)]
    if not blocks:
        empty = BilinearSpace.zero_form(0, flavor)
        return LinearRelation(empty, empty, Subspace.zero(0))
    return direct_sum(*blocks)


def sum_dims(n, flavor: str = PRESYMPLECTIC) -> tuple[int, int]:
    """(target dim, source dim) of canonical_sum(n)."""
    t = s = 0
    for tag in block_sequence(n):
        rel = canonical_indecomposable(tag, flavor)
        t += rel.target.dim
        s += rel.source.dim
    return t, s


_R = Matrix.from_rows([[0, 1], [-1, 0]])


def poisson_normalizer(tag: str) -> tuple[Matrix, Matrix]:
    """(N_t, N_s) taking the annihilator of the isotropic model to the listed
    coisotropic model.

    They agree except for I2 and I3, where the annihilator of the line (R,0)
    is the other coordinate axis of the dual plane; the rotation
    (a, b) -> (b, -a) preserves the Poisson structure J and swaps the axes.
    """
    rel = canonical_indecomposable(tag, POISSON)
    nt, ns = Matrix.identity(rel.target.dim), Matrix.identity(rel.source.dim)
    if tag == "I2":
        ns = _R
    elif tag == "I3":
        nt = _R
    return nt, ns


def random_invertible(n: int, rng: random.Random, lo: int = -3, hi: int = 3) -> Matrix:
    """Uniform small-integer matrix, redrawn until invertible."""
    while True:
        m = Matrix.from_rows([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)], n)
        if m.is_invertible():
            return m


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_instance(n, flavor: str = PRESYMPLECTIC, seed=0) -> tuple[LinearRelation, Matrix, Matrix]:
    """A random isomorphic copy of canonical_sum(n) with its witnesses P, Q."""
    rng = _rng(seed)
    base = canonical_sum(n, flavor)
    P = random_invertible(base.target.dim, rng)
    Q = random_invertible(base.source.dim, rng)
    return apply_iso_pair(base, P, Q), P, Q


def random_multiplicities(rng: random.Random, max_target: int = 12, max_source: int = 12,
                          max_count: int = 3, support: Sequence[str] = TAGS,
                          flavor: str = PRESYMPLECTIC) -> tuple[int, ...]:
    """Random n supported on ``support`` whose canonical sum fits the bounds."""
    counts = dict.fromkeys(TAGS, 0)
    t = s = 0
    order = list(support)
    rng.shuffle(order)
    for tag in order:
        rel = canonical_indecomposable(tag, flavor)
        c = rng.randint(0, max_count)
        while c and (t + c * rel.target.dim > max_target or s + c * rel.source.dim > max_source):
            c -= 1
        counts[tag] = c
        t += c * rel.target.dim
        s += c * rel.source.dim
    return as_counts(counts)


def unit(tag: str) -> tuple[int, ...]:
    _check_tag(tag)
    return tuple(int(t == tag) for t in TAGS)


def add_counts(*ns: Iterable[int]) -> tuple[int, ...]:
    return tuple(sum(col) for col in zip(*(as_counts(n) for n in ns)))
