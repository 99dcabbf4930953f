"""Golden fixtures shipped with the package.

``m_matrix.json`` freezes the printed classification matrix together with
the derived catalog/column correspondence; ``catalog.json`` holds the 26
canonical models in the CLI document format.  The test suite re-derives both
and compares.  Regenerate with ``python -m isorel.golden``.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .catalog import TAGS, canonical_indecomposable, type_name
from .invariants import classification
from .serialization import dumps, relation_to_doc
from .spaces import POISSON, PRESYMPLECTIC


def m_matrix_doc() -> dict:
    cm = classification()
    return {
        "m": [list(r) for r in cm.m],
        "det": cm.det(),
        "column_of": {t: j + 1 for t, j in zip(TAGS, cm.column_permutation)},
        "derived_m": [list(r) for r in cm.derived],
        "errata": [{"row": r, "col": c, "printed": p, "derived": d} for r, c, p, d in cm.errata],
    }


def catalog_doc() -> dict:
    return {
        flavor: {t: dict(relation_to_doc(canonical_indecomposable(t, flavor)), name=type_name(t, flavor))
                 for t in TAGS}
        for flavor in (PRESYMPLECTIC, POISSON)
    }


def load(name: str) -> dict:
    return json.loads(resources.files("isorel").joinpath("data", name).read_text())


def write(directory: Path | None = None) -> None:
    directory = directory or Path(__file__).parent / "data"
    directory.mkdir(exist_ok=True)
    (directory / "m_matrix.json").write_text(dumps(m_matrix_doc()))
    (directory / "catalog.json").write_text(dumps(catalog_doc()))


if __name__ == "__main__":  # pragma: no cover
    write()
