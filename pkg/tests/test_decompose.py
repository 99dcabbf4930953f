import sys

import pytest
from hypothesis import given

import isorel.decompose  # noqa: F401
from isorel.catalog import TAGS, canonical_indecomposable, canonical_sum, random_instance, unit
from isorel.decompose import (
    DecompositionCertificate,
    decompose,
    decompose_biinjective,
    decompose_cartesian,
    is_isomorphic,
    split_cartesian_biinjective,
    trace_equations,
    verify_certificate,
)
from isorel.errors import CertificateError, NotIsotropicError, StructureError
from isorel.invariants import MultiplicityVector, compute_invariants, multiplicities
from isorel.linalg import Matrix, Subspace
from isorel.relations import (
    LinearRelation,
    apply_iso_pair,
    cartesian_product,
    direct_sum,
    full_relation,
    identity_relation,
    is_biinjective,
    is_cartesian,
)
from isorel.spaces import POISSON, BilinearSpace, orthogonal

from conftest import rand_isotropic_relation, rand_presymplectic, seeds

dec = sys.modules["isorel.decompose"]  # the package re-exports the function under this name

STD2 = BilinearSpace.standard(1)
STD4 = BilinearSpace.standard(2)
LINE = BilinearSpace.zero_form(1)


def tags(blocks):
    return [b.tag for b in blocks]


class TestSplit:
    def test_biinjective_input(self):
        f = canonical_indecomposable("I6")
        f_C, f_B, _ = split_cartesian_biinjective(f)
        assert (f_C.target.dim, f_C.source.dim, f_C.dim) == (0, 0, 0)
        assert f_B == f

    def test_full_cartesian(self):
        # fY x Xf with fY = (R,0) in the target, Xf = (R,0) in the source
        line = Subspace.span([(1, 0)], 2)
        f = cartesian_product(STD2, STD2, line, line)
        f_C, f_B, trace = split_cartesian_biinjective(f)
        assert f_B.dim == 0
        assert is_cartesian(f_C) and f_C.dim == 2

    def test_i1_plus_i3(self):
        f = canonical_sum(dict(I1=1, I3=1))
        f_C, f_B, _ = split_cartesian_biinjective(f)
        assert multiplicities(compute_invariants(f_B)).n == unit("I1")
        assert multiplicities(compute_invariants(f_C)).n == unit("I3")
        assert is_biinjective(f_B) and is_cartesian(f_C)

    def test_not_isotropic(self):
        with pytest.raises(NotIsotropicError):
            split_cartesian_biinjective(full_relation(STD2, STD2))

    def test_xb_orthogonal_to_dual(self):
        # f = span{q1} in (Q^4, J+J) <- 0: X_B must avoid pairing with X_0*
        f = LinearRelation(STD4, BilinearSpace.zero_form(0), Subspace.span([(1, 0, 0, 0)], 4))
        _, _, trace = split_cartesian_biinjective(f)
        a = trace.stage_a
        assert orthogonal(STD4, a["X_0"] + a["X_0*"]) >= a["X_B"]
        assert a["X_B"] + a["f0"] == orthogonal(STD4, a["f0"])


class TestCartesian:
    def test_empty(self):
        empty = BilinearSpace.zero_form(0)
        assert decompose_cartesian(LinearRelation(empty, empty, Subspace.zero(0))) == []

    def test_one_i2(self):
        blocks = decompose_cartesian(canonical_indecomposable("I2"))
        assert tags(blocks) == ["I2"]
        assert blocks[0].target == ((1, 0), (0, 1))

    def test_two_i8(self):
        f = canonical_sum(dict(I8=2))
        assert tags(decompose_cartesian(f)) == ["I8", "I8"]

    def test_wrong_shape(self):
        with pytest.raises(StructureError):
            decompose_cartesian(identity_relation(LINE))
        with pytest.raises(StructureError):
            decompose_cartesian(canonical_indecomposable("I4"))


class TestBiinjective:
    def test_identity_q4(self):
        assert tags(decompose_biinjective(identity_relation(STD4))) == ["I1", "I1"]

    def test_i12(self):
        trace = dec.StageTrace()
        blocks = decompose_biinjective(canonical_indecomposable("I12"), trace)
        assert tags(blocks) == ["I12"]
        assert trace.stage_b["Y_I"] == Subspace.full(1)
        assert trace.stage_b["gY_I"] == Subspace.span([(1, 0)], 2)

    def test_zero_form_iso(self):
        f = LinearRelation(LINE, LINE, Subspace.span([(3, 1)], 2))
        assert tags(decompose_biinjective(f)) == ["I7"]

    def test_precondition(self):
        with pytest.raises(StructureError):
            decompose_biinjective(canonical_indecomposable("I2"))

    def test_all_nine_types(self):
        n = {t: 1 for t in ("I1", "I4", "I5", "I6", "I7", "I10", "I11", "I12", "I13")}
        f, _, _ = random_instance(n, seed=8)
        blocks = decompose_biinjective(f)
        assert sorted(tags(blocks), key=TAGS.index) == sorted(n, key=TAGS.index)


class TestDecompose:
    def test_canonical_models_identity_certificates(self):
        for t in TAGS:
            for flavor in ("presymplectic", POISSON):
                f = canonical_indecomposable(t, flavor)
                c = decompose(f)
                assert c.multiplicities.n == unit(t)
                assert c.P.shape == (f.target.dim,) * 2
                if flavor == "presymplectic":
                    assert c.P == Matrix.identity(f.target.dim)
                    assert c.Q == Matrix.identity(f.source.dim)

    @given(seeds())
    def test_random_round_trip(self, rng):
        n = tuple(rng.randint(0, 2) if rng.random() < 0.4 else 0 for _ in TAGS)
        f, _, _ = random_instance(n, seed=rng)
        c = decompose(f)
        assert c.multiplicities.n == n
        assert verify_certificate(f, c)

    def test_lagrangian_symplectomorphism_plus_product(self):
        graph = apply_iso_pair(identity_relation(STD4), Matrix.identity(4), Matrix.identity(4))
        lag = Subspace.span([(1, 2)], 2)
        prod = cartesian_product(STD2, STD2, lag, Subspace.span([(0, 1)], 2))
        f = direct_sum(graph, prod)
        c = decompose(f)
        assert c.multiplicities.support() <= {"I1", "I2", "I3"}
        assert c.multiplicities.as_dict() == dict.fromkeys(TAGS, 0) | {"I1": 2, "I2": 1, "I3": 1}

    def test_not_isotropic(self):
        with pytest.raises(NotIsotropicError):
            decompose(full_relation(STD2, STD2))

    def test_self_check_is_loud(self, monkeypatch):
        real = dec._assemble

        def broken(*args):
            P, Q, counts = real(*args)
            return Matrix.identity(P.rows) if P.rows else P, Q, counts

        monkeypatch.setattr(dec, "_assemble", broken)
        f, _, _ = random_instance(dict(I1=1, I6=1), seed=1)
        with pytest.raises(CertificateError):
            decompose(f)

    @given(seeds())
    def test_general_presymplectic_inputs(self, rng):
        x, y = rand_presymplectic(rng, rng.randint(0, 5)), rand_presymplectic(rng, rng.randint(0, 5))
        f = rand_isotropic_relation(rng, x, y)
        c = decompose(f)
        assert verify_certificate(f, c)
        assert all(ok for _, ok in trace_equations(f, c.trace))
        assert all(ok for _, ok in c.trace.equations)

    def test_trace_ambient_embedding(self):
        f, _, _ = random_instance(dict(I1=1, I12=1, I3=1), seed=5)
        trace = decompose(f).trace
        xs = trace.ambient("X_S")
        assert xs.ambient_dim == f.target.dim and xs.dim == 2
        assert trace.ambient("Y_I").ambient_dim == f.source.dim
        assert "gY_I" in trace.names()


class TestVerify:
    def setup_method(self):
        self.f, _, _ = random_instance(dict(I2=1, I7=1, I12=1), seed=3)
        self.cert = decompose(self.f)

    def test_valid(self):
        assert verify_certificate(self.f, self.cert)

    def test_perturbed_multiplicity(self):
        n = list(self.cert.multiplicities.n)
        n[TAGS.index("I7")] -= 1
        n[TAGS.index("I10")] += 1
        bad = DecompositionCertificate(self.cert.P, self.cert.Q, MultiplicityVector(tuple(n)))
        assert not verify_certificate(self.f, bad)

    def test_row_swap(self):
        # swapping q and p of the I2 block is not a symmetry of (R,0) x 0
        rows = list(self.cert.P.entries)
        rows[0], rows[1] = rows[1], rows[0]
        bad = DecompositionCertificate(Matrix.from_rows(rows), self.cert.Q, self.cert.multiplicities)
        assert not verify_certificate(self.f, bad)

    def test_singular_or_misshapen(self):
        c = self.cert
        assert not verify_certificate(self.f, DecompositionCertificate(Matrix.zeros(*c.P.shape), c.Q, c.multiplicities))
        assert not verify_certificate(self.f, DecompositionCertificate(Matrix.identity(1), c.Q, c.multiplicities))

    def test_wrong_flavor(self):
        c = self.cert
        assert not verify_certificate(self.f, DecompositionCertificate(c.P, c.Q, c.multiplicities, POISSON))


class TestIsomorphic:
    def test_conjugate(self):
        f = canonical_sum(dict(I6=1, I13=1))
        g, _, _ = random_instance(dict(I6=1, I13=1), seed=0)
        assert is_isomorphic(f, g)

    def test_distinct_types(self):
        assert not is_isomorphic(canonical_indecomposable("I4"), canonical_indecomposable("I2"))
        assert not is_isomorphic(canonical_indecomposable("I1"), canonical_indecomposable("I6"))

    def test_flavor_mismatch(self):
        with pytest.raises(StructureError):
            is_isomorphic(canonical_indecomposable("I1"), canonical_indecomposable("I1", POISSON))
