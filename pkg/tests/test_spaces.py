import pytest
from hypothesis import given

from isorel.errors import StructureError
from isorel.linalg import Matrix, Subspace, complement_in, intersect, is_subspace
from isorel.spaces import (
    POISSON,
    BilinearSpace,
    J,
    dual_basis,
    is_isotropic_subspace,
    is_symplectic_subspace,
    isotropic_dual_complement,
    negate_form,
    orthogonal,
    product,
    radical,
    symplectic_basis,
)

from conftest import rand_isotropic_in, rand_presymplectic, rand_subspace, seeds

STD2 = BilinearSpace.standard(1)
STD4 = BilinearSpace.standard(2)


def S(vectors, n):
    return Subspace.span(vectors, n)


def test_form_must_be_skew():
    with pytest.raises(StructureError):
        BilinearSpace(Matrix.from_rows([[0, 1], [1, 0]]))


class TestOrthogonal:
    def test_lagrangian_line(self):
        line = S([(1, 0)], 2)
        assert orthogonal(STD2, line) == line

    def test_zero_form(self):
        z = BilinearSpace.zero_form(3)
        assert orthogonal(z, S([(1, 2, 3)], 3)) == Subspace.full(3)

    def test_of_full_is_radical(self):
        s = BilinearSpace(Matrix.from_rows([[0, 1, 0], [-1, 0, 0], [0, 0, 0]]))
        assert orthogonal(s, Subspace.full(3)) == radical(s) == S([(0, 0, 1)], 3)

    def test_poisson_refused(self):
        with pytest.raises(StructureError):
            orthogonal(BilinearSpace.standard(1, POISSON), S([(1, 0)], 2))

    @given(seeds())
    def test_properties(self, rng):
        sp = rand_presymplectic(rng, 5)
        a, b = rand_subspace(rng, 5), rand_subspace(rng, 5)
        assert orthogonal(sp, a + b) == intersect(orthogonal(sp, a), orthogonal(sp, b))
        assert is_subspace(a, orthogonal(sp, orthogonal(sp, a)))
        assert is_subspace(radical(sp), orthogonal(sp, a))

    @given(seeds())
    def test_symplectic_double_orthogonal(self, rng):
        sp = BilinearSpace.standard(2)
        a = rand_subspace(rng, 4)
        assert orthogonal(sp, a).dim == 4 - a.dim
        assert orthogonal(sp, orthogonal(sp, a)) == a


def test_radical_examples():
    assert radical(STD2).dim == 0
    assert radical(BilinearSpace.zero_form(3)) == Subspace.full(3)


def test_isotropic_symplectic_predicates():
    line = S([(1, 0)], 2)
    assert is_isotropic_subspace(STD2, line) and not is_symplectic_subspace(STD2, line)
    full = Subspace.full(2)
    assert not is_isotropic_subspace(STD2, full) and is_symplectic_subspace(STD2, full)
    zero = Subspace.zero(2)
    assert is_isotropic_subspace(STD2, zero) and is_symplectic_subspace(STD2, zero)


class TestSymplecticBasis:
    def test_standard_plane(self):
        assert symplectic_basis(STD2, Subspace.full(2)) == [((1, 0), (0, 1))]

    def test_zero(self):
        assert symplectic_basis(STD2, Subspace.zero(2)) == []

    def test_std4_block_diag(self):
        pairs = symplectic_basis(STD4, Subspace.full(4))
        vs = [v for pair in pairs for v in pair]
        assert STD4.gram(vs) == Matrix.block_diag(J, J)

    def test_not_symplectic(self):
        with pytest.raises(StructureError):
            symplectic_basis(STD2, S([(1, 0)], 2))

    @given(seeds())
    def test_pairing_equations(self, rng):
        sp = rand_presymplectic(rng, 6)
        r = radical(sp)
        # a complement of the radical is symplectic
        a = complement_in(r, Subspace.full(6))
        pairs = symplectic_basis(sp, a)
        vs = [v for pair in pairs for v in pair]
        assert sp.gram(vs) == (Matrix.block_diag(*([J] * len(pairs))) if pairs else Matrix.zeros(0, 0))
        assert S(vs, 6) == a


class TestDual:
    def test_plane(self):
        full = Subspace.full(2)
        assert isotropic_dual_complement(STD2, S([(1, 0)], 2), full) == S([(0, 1)], 2)

    def test_zero(self):
        assert isotropic_dual_complement(STD2, Subspace.zero(2), Subspace.full(2)).dim == 0

    def test_std4(self):
        a = [(1, 0, 0, 0), (0, 0, 1, 0)]
        xs = dual_basis(STD4, a, Subspace.full(4))
        assert [[STD4.pair(v, x) for x in xs] for v in a] == [[1, 0], [0, 1]]
        assert is_isotropic_subspace(STD4, S(xs, 4))

    def test_avoid(self):
        a = S([(1, 0, 0, 0)], 4)
        avoid = S([(0, 0, 1, 0), (0, 0, 0, 1)], 4)
        d = isotropic_dual_complement(STD4, a, Subspace.full(4), avoid)
        assert d.dim == 1
        assert all(STD4.pair(x, y) == 0 for x in d.basis for y in avoid.basis)
        assert (d + a + avoid).dim == 4

    def test_preconditions(self):
        with pytest.raises(StructureError):
            dual_basis(STD4, [(1, 0, 0, 0), (0, 1, 0, 0)], Subspace.full(4))
        with pytest.raises(StructureError):
            dual_basis(STD4, [(1, 0, 0, 0)], Subspace.full(4), S([(0, 1, 0, 0), (0, 0, 1, 0)], 4))

    @given(seeds())
    def test_postconditions(self, rng):
        sp = BilinearSpace.standard(3)
        a = rand_isotropic_in(rng, sp)
        xs = dual_basis(sp, a.basis, Subspace.full(6))
        d = S(xs, 6)
        assert d.dim == a.dim
        assert intersect(d, a).dim == 0
        assert is_isotropic_subspace(sp, d)
        assert [[sp.pair(v, x) for x in xs] for v in a.basis] == \
            [[int(i == j) for j in range(a.dim)] for i in range(a.dim)]


def test_negate_and_product():
    z = BilinearSpace.zero_form(2)
    assert negate_form(z) == z
    assert negate_form(negate_form(STD4)) == STD4
    assert product(STD2, STD2).total.form == Matrix.block_diag(J, -J)
    with pytest.raises(StructureError):
        product(STD2, BilinearSpace.standard(1, POISSON))
