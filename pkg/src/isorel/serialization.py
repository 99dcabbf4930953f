"""JSON documents for spaces, relations and certificates.

Rationals are written as strings (``"3"``, ``"-1/2"``) and matrices as
row-major lists of rows.  Parsing canonicalizes a relation basis to RREF,
so printing a parsed document is idempotent.

A relation document::

    {"kind": "presymplectic",
     "target": {"dim": 2, "form": [["0", "1"], ["-1", "0"]]},
     "source": {"dim": 2, "form": [["0", "1"], ["-1", "0"]]},
     "relation": {"basis": [["1", "0", "1", "0"], ["0", "1", "0", "1"]]}}
"""

from __future__ import annotations

import json
from typing import Any

from .errors import IsorelError
from .invariants import MultiplicityVector
from .linalg import Matrix, Subspace, scalar
from .relations import LinearRelation
from .spaces import FLAVORS, BilinearSpace


class DocumentError(IsorelError, ValueError):
    """Malformed document; ``path`` locates the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


def _s(x) -> str:
    return str(scalar(x))


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [[_s(x) for x in row] for row in m.entries]


def _rows(m) -> list[list[str]]:
    return [[_s(x) for x in row] for row in m]


def space_to_doc(s: BilinearSpace) -> dict:
    return {"dim": s.dim, "form": matrix_to_json(s.form)}


def relation_to_doc(f: LinearRelation) -> dict:
    return {
        "kind": f.flavor,
        "target": space_to_doc(f.target),
        "source": space_to_doc(f.source),
        "relation": {"basis": _rows(f.graph.basis)},
    }


def dumps(doc: dict) -> str:
    """The canonical text of a document."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# parsing


def _need(obj: Any, key: str, path: str):
    if not isinstance(obj, dict):
        raise DocumentError(path, "expected an object")
    if key not in obj:
        raise DocumentError(f"{path}.{key}", "missing field")
    return obj[key]


def _int(v: Any, path: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise DocumentError(path, f"expected a nonnegative integer, got {v!r}")
    return v


def _scalar(v: Any, path: str):
    if isinstance(v, (bool, float)) or not isinstance(v, (int, str)):
        raise DocumentError(path, f"expected a rational literal string, got {v!r}")
    try:
        return scalar(v)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(path, f"bad rational literal {v!r} ({exc})") from None


def parse_matrix(v: Any, rows: int | None, cols: int, path: str) -> Matrix:
    if not isinstance(v, list):
        raise DocumentError(path, "expected a list of rows")
    if rows is not None and len(v) != rows:
        raise DocumentError(path, f"expected {rows} rows, got {len(v)}")
    out = []
    for i, row in enumerate(v):
        if not isinstance(row, list):
            raise DocumentError(f"{path}[{i}]", "expected a row list")
        if len(row) != cols:
            raise DocumentError(f"{path}[{i}]", f"expected {cols} entries, got {len(row)}")
        out.append(tuple(_scalar(x, f"{path}[{i}][{j}]") for j, x in enumerate(row)))
    return Matrix(len(out), cols, tuple(out))


def parse_space(doc: Any, flavor: str, path: str) -> BilinearSpace:
    dim = _int(_need(doc, "dim", path), f"{path}.dim")
    form = parse_matrix(_need(doc, "form", path), dim, dim, f"{path}.form")
    if not form.is_skew():
        for i in range(dim):
            for j in range(i, dim):
                if form.entries[i][j] != -form.entries[j][i]:
                    raise DocumentError(f"{path}.form[{i}][{j}]", "form is not skew-symmetric")
    return BilinearSpace(form, flavor)


def parse_relation(doc: Any, path: str = "$") -> LinearRelation:
    kind = _need(doc, "kind", path)
    if kind not in FLAVORS:
        raise DocumentError(f"{path}.kind", f"expected one of {list(FLAVORS)}, got {kind!r}")
    target = parse_space(_need(doc, "target", path), kind, f"{path}.target")
    source = parse_space(_need(doc, "source", path), kind, f"{path}.source")
    rel = _need(doc, "relation", path)
    basis = parse_matrix(_need(rel, "basis", f"{path}.relation"), None, target.dim + source.dim,
                         f"{path}.relation.basis")
    return LinearRelation(target, source, Subspace.span(basis.entries, target.dim + source.dim))


def loads_relation(text: str) -> LinearRelation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("$", f"invalid JSON ({exc})") from None
    return parse_relation(doc)


# ---------------------------------------------------------------------------
# certificates


def _subspace_doc(s: Subspace) -> dict:
    return {"ambient_dim": s.ambient_dim, "basis": _rows(s.basis)}


def _parse_subspace(doc: Any, path: str) -> Subspace:
    n = _int(_need(doc, "ambient_dim", path), f"{path}.ambient_dim")
    m = parse_matrix(_need(doc, "basis", path), None, n, f"{path}.basis")
    return Subspace.span(m.entries, n)


def certificate_to_doc(cert) -> dict:
    doc = {
        "kind": "certificate",
        "flavor": cert.flavor,
        "P": matrix_to_json(cert.P),
        "Q": matrix_to_json(cert.Q),
        "multiplicities": cert.multiplicities.as_dict(),
    }
    t = cert.trace
    if t is not None:
        doc["trace"] = {
            "stage_a": {k: _subspace_doc(v) for k, v in t.stage_a.items()},
            "stage_b": {k: _subspace_doc(v) for k, v in t.stage_b.items()},
            "f_C": relation_to_doc(t.f_C) if t.f_C is not None else None,
            "f_B": relation_to_doc(t.f_B) if t.f_B is not None else None,
        }
    return doc


def parse_certificate(doc: Any, path: str = "$"):
    from .catalog import TAGS
    from .decompose import DecompositionCertificate, StageTrace

    if _need(doc, "kind", path) != "certificate":
        raise DocumentError(f"{path}.kind", "expected 'certificate'")
    flavor = _need(doc, "flavor", path)
    if flavor not in FLAVORS:
        raise DocumentError(f"{path}.flavor", f"expected one of {list(FLAVORS)}")
    mult = _need(doc, "multiplicities", path)
    if not isinstance(mult, dict) or set(mult) - set(TAGS):
        raise DocumentError(f"{path}.multiplicities", "expected an object keyed by I1..I13")
    n = tuple(_int(mult.get(t, 0), f"{path}.multiplicities.{t}") for t in TAGS)

    def square(key):
        v = _need(doc, key, path)
        size = len(v) if isinstance(v, list) else 0
        return parse_matrix(v, size, size, f"{path}.{key}")

    trace = None
    raw = doc.get("trace")
    if raw is not None:
        tp = f"{path}.trace"
        trace = StageTrace(
            stage_a={k: _parse_subspace(v, f"{tp}.stage_a.{k}") for k, v in _need(raw, "stage_a", tp).items()},
            stage_b={k: _parse_subspace(v, f"{tp}.stage_b.{k}") for k, v in _need(raw, "stage_b", tp).items()},
            f_C=parse_relation(raw["f_C"], f"{tp}.f_C") if raw.get("f_C") else None,
            f_B=parse_relation(raw["f_B"], f"{tp}.f_B") if raw.get("f_B") else None,
        )
    return DecompositionCertificate(square("P"), square("Q"), MultiplicityVector(n), flavor, trace)
