import json
import subprocess
import sys

import pytest

from isorel.catalog import TAGS, canonical_indecomposable
from isorel.cli import EXIT_NOT_ISOTROPIC, EXIT_OK, EXIT_PARSE, EXIT_VERIFY, main
from isorel.relations import full_relation
from isorel.serialization import dumps, loads_relation, relation_to_doc
from isorel.spaces import BilinearSpace


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(dumps(doc) if isinstance(doc, dict) else doc)
    return p


@pytest.fixture
def i1(tmp_path):
    return write(tmp_path, "i1.json", relation_to_doc(canonical_indecomposable("I1")))


@pytest.fixture
def full(tmp_path):
    std = BilinearSpace.standard(1)
    return write(tmp_path, "full.json", relation_to_doc(full_relation(std, std)))


class TestValidate:
    def test_isotropic(self, capsys, i1):
        code, out, _ = run(capsys, "validate", i1)
        assert code == EXIT_OK
        assert out["isotropic"] is True and out["well_formed"] is True

    def test_not_isotropic(self, capsys, full):
        code, out, _ = run(capsys, "validate", full)
        assert code == EXIT_OK and out["isotropic"] is False
        code, _, _ = run(capsys, "validate", full, "--require")
        assert code == EXIT_NOT_ISOTROPIC

    def test_skew_violation(self, capsys, tmp_path):
        doc = relation_to_doc(canonical_indecomposable("I1"))
        doc["target"]["form"][1][0] = "1"
        code, out, err = run(capsys, "validate", write(tmp_path, "bad.json", doc))
        assert code == EXIT_PARSE and out is None
        assert "$.target.form[0][1]" in err

    def test_unreadable(self, capsys, tmp_path):
        assert run(capsys, "validate", tmp_path / "missing.json")[0] == EXIT_PARSE
        assert run(capsys, "validate", write(tmp_path, "x.json", "[1,"))[0] == EXIT_PARSE

    def test_poisson_reports_coisotropic(self, capsys, tmp_path):
        p = write(tmp_path, "p.json", relation_to_doc(canonical_indecomposable("I6", "poisson")))
        code, out, _ = run(capsys, "validate", p)
        assert code == EXIT_OK and out["coisotropic"] is True


class TestMultiplicities:
    def test_i1(self, capsys, i1):
        code, out, _ = run(capsys, "multiplicities", i1)
        assert code == EXIT_OK
        assert out["n"] == {t: int(t == "I1") for t in TAGS}

    def test_i6(self, capsys, tmp_path):
        p = write(tmp_path, "i6.json", relation_to_doc(canonical_indecomposable("I6")))
        assert run(capsys, "multiplicities", p)[1]["n"]["I6"] == 1

    def test_canonical_pipeline(self, capsys, tmp_path):
        out = tmp_path / "c.json"
        assert run(capsys, "canonical", "I2=1,I9=2", "--out", out)[0] == EXIT_OK
        n = run(capsys, "multiplicities", out)[1]["n"]
        assert n == {t: {"I2": 1, "I9": 2}.get(t, 0) for t in TAGS}

    def test_not_isotropic(self, capsys, full):
        assert run(capsys, "multiplicities", full)[0] == EXIT_NOT_ISOTROPIC
        assert run(capsys, "invariants", full)[0] == EXIT_NOT_ISOTROPIC

    def test_invariants(self, capsys, i1):
        code, out, _ = run(capsys, "invariants", i1)
        assert out["k"] == [1, 1] + [0] * 9 + [1, 0]


class TestDecomposeVerify:
    def test_round_trip(self, capsys, tmp_path):
        rel = tmp_path / "r.json"
        run(capsys, "random", "1,1,0,0,0,1,0,0,0,0,0,1,0", "--seed", 3, "--out", rel)
        cert = tmp_path / "cert.json"
        assert run(capsys, "decompose", rel, "--out", cert)[0] == EXIT_OK
        code, out, _ = run(capsys, "verify", rel, cert)
        assert (code, out) == (EXIT_OK, {"verified": True})

    def test_tampered(self, capsys, tmp_path):
        rel = tmp_path / "r.json"
        run(capsys, "random", "I4=1,I7=1", "--seed", 1, "--out", rel)
        code, cert, _ = run(capsys, "decompose", rel)
        cert["multiplicities"]["I7"] = 0
        cert["multiplicities"]["I10"] = 1
        code, out, _ = run(capsys, "verify", rel, write(tmp_path, "bad.json", cert))
        assert (code, out) == (EXIT_VERIFY, {"verified": False})

    def test_malformed_certificate(self, capsys, tmp_path, i1):
        assert run(capsys, "verify", i1, write(tmp_path, "c.json", {"kind": "nope"}))[0] == EXIT_PARSE

    def test_batch(self, capsys, tmp_path):
        paths = []
        for seed in range(3):
            p = tmp_path / f"r{seed}.json"
            run(capsys, "random", "I1=1,I13=1", "--seed", seed, "--out", p)
            paths.append(p)
        outdir = tmp_path / "certs"
        assert run(capsys, "decompose", *paths, "--jobs", 2, "--out", outdir)[0] == EXIT_OK
        for p in paths:
            assert run(capsys, "verify", p, outdir / f"{p.stem}.cert.json")[0] == EXIT_OK

    def test_batch_reports_worst_code(self, capsys, tmp_path, i1, full):
        code, out, err = run(capsys, "decompose", i1, full)
        assert code == EXIT_NOT_ISOTROPIC
        assert list(out) == [str(i1)]
        assert "not isotropic" in err


class TestDualIso:
    def test_double_dual_isomorphic(self, capsys, tmp_path):
        rel = tmp_path / "r.json"
        run(capsys, "random", "I3=1,I5=1,I11=1", "--seed", 2, "--out", rel)
        d1, d2 = tmp_path / "d1.json", tmp_path / "d2.json"
        run(capsys, "dualize", rel, "--out", d1)
        assert json.loads(d1.read_text())["kind"] == "poisson"
        run(capsys, "dualize", d1, "--out", d2)
        assert run(capsys, "isomorphic", rel, d2)[1] == {"isomorphic": True}
        assert loads_relation(d2.read_text()) == loads_relation(rel.read_text())

    def test_non_isomorphic(self, capsys, tmp_path):
        a = write(tmp_path, "a.json", relation_to_doc(canonical_indecomposable("I4")))
        b = write(tmp_path, "b.json", relation_to_doc(canonical_indecomposable("I2")))
        assert run(capsys, "isomorphic", a, b)[1] == {"isomorphic": False}

    def test_kind_mismatch(self, capsys, tmp_path, i1):
        d = tmp_path / "d.json"
        run(capsys, "dualize", i1, "--out", d)
        assert run(capsys, "isomorphic", i1, d)[0] == EXIT_PARSE


class TestGenerators:
    def test_canonical_unit(self, capsys):
        code, out, _ = run(capsys, "canonical", "0,0,0,0,0,0,1,0,0,0,0,0,0")
        assert code == EXIT_OK
        assert out == json.loads(dumps(relation_to_doc(canonical_indecomposable("I7"))))

    def test_random_embeds_seed(self, capsys):
        code, out, _ = run(capsys, "random", "I12=2", "--seed", 41)
        assert code == EXIT_OK
        assert out["seed"] == 41 and out["multiplicities"]["I12"] == 2
        assert run(capsys, "random", "I12=2", "--seed", 41)[1] == out

    def test_bad_counts(self, capsys):
        assert run(capsys, "canonical", "1,2,3")[0] == EXIT_PARSE
        assert run(capsys, "canonical", "I99=1")[0] == EXIT_PARSE
        assert run(capsys, "canonical", "I1=-1")[0] == EXIT_PARSE


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "isorel", "canonical", "I1=1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["target"]["dim"] == 2
