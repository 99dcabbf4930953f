import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from isorel.linalg import Matrix, Subspace
from isorel.relations import LinearRelation
from isorel.spaces import BilinearSpace, orthogonal

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def rand_vec(rng, n, lo=-3, hi=3):
    return tuple(rng.randint(lo, hi) for _ in range(n))


def rand_subspace(rng, n, d=None):
    d = rng.randint(0, n) if d is None else d
    return Subspace.span([rand_vec(rng, n) for _ in range(d)], n)


def rand_subspace_of(rng, outer: Subspace, d=None):
    """Random subspace of ``outer``: combinations of its basis, one coefficient per basis vector."""
    d = rng.randint(0, outer.dim) if d is None else d
    vectors = []
    for _ in range(d):
        coeffs = rand_vec(rng, outer.dim)
        vectors.append([sum(c * b[j] for c, b in zip(coeffs, outer.basis)) for j in range(outer.ambient_dim)])
    return Subspace.span(vectors, outer.ambient_dim)


def rand_skew(rng, n, rank=None):
    """Skew matrix of the given even rank, built as A^T (J + ... + J + 0) A."""
    if rank is None:
        rank = 2 * rng.randint(0, n // 2)
    base = [[0] * n for _ in range(n)]
    for i in range(0, rank, 2):
        base[i][i + 1], base[i + 1][i] = 1, -1
    while True:
        a = Matrix.from_rows([rand_vec(rng, n, -2, 2) for _ in range(n)], n)
        if a.is_invertible():
            break
    return a.T @ Matrix.from_rows(base, n) @ a


def rand_isotropic_in(rng, space: BilinearSpace, target_dim=None):
    """Grow an isotropic subspace by random vectors from its own orthogonal."""
    s = Subspace.zero(space.dim)
    goal = target_dim if target_dim is not None else rng.randint(0, space.dim)
    for _ in range(4 * space.dim + 4):
        if s.dim >= goal:
            break
        room = orthogonal(space, s)
        if room == s:
            break
        coeffs = [rng.randint(-2, 2) for _ in room.basis]
        v = [sum(a * c for a, c in zip(coeffs, col)) for col in zip(*room.basis)]
        s = s + Subspace.span([v], space.dim)
    return s


def rand_isotropic_relation(rng, target: BilinearSpace, source: BilinearSpace, graph_dim=None):
    prod = BilinearSpace(Matrix.block_diag(target.form, -source.form))
    return LinearRelation(target, source, rand_isotropic_in(rng, prod, graph_dim))


def rand_presymplectic(rng, n):
    return BilinearSpace(rand_skew(rng, n))


@pytest.fixture
def rng():
    return random.Random(20240611)


@st.composite
def seeds(draw):
    return random.Random(draw(st.integers(0, 2**32 - 1)))
