"""Command-line front end.

    isorel validate rel.json --require
    isorel multiplicities rel.json
    isorel decompose a.json b.json --jobs 4 --out certs/
    isorel verify rel.json cert.json
    isorel canonical I2=1,I9=2 --flavor poisson
    isorel random 1,0,0,0,0,0,2,0,0,0,0,0,1 --seed 7

All output is JSON on stdout (or in the ``--out`` file).  Exit codes:
0 success, 1 malformed input, 2 not (co)isotropic, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import serialization as ser
from .catalog import TAGS, as_counts, canonical_sum, random_instance, type_name
from .decompose import decompose, is_isomorphic, verify_certificate
from .duality import annihilator
from .errors import IsorelError, NotIsotropicError, StructureError
from .invariants import INVARIANT_NAMES, compute_invariants, multiplicities
from .relations import is_coisotropic, is_isotropic
from .spaces import FLAVORS, POISSON, PRESYMPLECTIC

EXIT_OK, EXIT_PARSE, EXIT_NOT_ISOTROPIC, EXIT_VERIFY = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_PARSE, f"{path}: invalid JSON ({exc})") from None


def _load(path: str):
    try:
        return ser.parse_relation(_read_json(path))
    except ser.DocumentError as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc}") from None
    except (IsorelError, ValueError) as exc:
        raise CliError(EXIT_PARSE, f"{path}: $: {exc}") from None


def _conforms(f) -> bool:
    return is_isotropic(f) if f.flavor == PRESYMPLECTIC else is_coisotropic(f)


def _adjective(f) -> str:
    return "isotropic" if f.flavor == PRESYMPLECTIC else "coisotropic"


def _require(f, path: str) -> None:
    if not _conforms(f):
        raise CliError(EXIT_NOT_ISOTROPIC, f"{path}: relation is not {_adjective(f)}")


def _invariants(f):
    return compute_invariants(annihilator(f) if f.flavor == POISSON else f)


def _counts(text: str) -> tuple[int, ...]:
    """'1,0,...' (13 entries) or 'I2=1,I9=2'."""
    try:
        items = [s.strip() for s in text.split(",") if s.strip()]
        if items and all("=" in s for s in items):
            return as_counts({k.strip(): int(v) for k, v in (s.split("=", 1) for s in items)})
        return as_counts([int(s) for s in items])
    except (KeyError, ValueError) as exc:
        raise CliError(EXIT_PARSE, f"bad multiplicity vector {text!r}: {exc}") from None


# ---------------------------------------------------------------------------
# commands; each returns (document, exit code)


def cmd_validate(args):
    f = _load(args.doc)
    ok = _conforms(f)
    report = {"well_formed": True, "kind": f.flavor, "target_dim": f.target.dim,
              "source_dim": f.source.dim, "graph_dim": f.dim, _adjective(f): ok}
    if args.require and not ok:
        return report, EXIT_NOT_ISOTROPIC
    return report, EXIT_OK


def cmd_invariants(args):
    f = _load(args.doc)
    _require(f, args.doc)
    k = _invariants(f).k
    return {"k": list(k), "names": dict(zip((f"k{i}" for i in range(1, 14)), INVARIANT_NAMES))}, EXIT_OK


def cmd_multiplicities(args):
    f = _load(args.doc)
    _require(f, args.doc)
    n = multiplicities(_invariants(f)).n
    types = [{"tag": t, "count": c, "name": type_name(t, f.flavor)} for t, c in zip(TAGS, n)]
    return {"n": dict(zip(TAGS, n)), "types": types}, EXIT_OK


def _decompose_one(path: str):
    """Worker for batch mode: (path, certificate document or None, error)."""
    try:
        f = _load(path)
        _require(f, path)
        return path, ser.certificate_to_doc(decompose(f)), None
    except CliError as exc:
        return path, None, (exc.code, str(exc))


def cmd_decompose(args):
    paths = args.docs
    if args.jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_decompose_one, paths))
    else:
        results = [_decompose_one(p) for p in paths]
    errors = [e for _, _, e in results if e]
    for code, msg in errors:
        print(f"error: {msg}", file=sys.stderr)
    code = max((c for c, _ in errors), default=EXIT_OK)
    if len(paths) == 1:
        return results[0][1], code
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for path, doc, _ in results:
            if doc is not None:
                (out / (Path(path).stem + ".cert.json")).write_text(ser.dumps(doc))
        return None, code
    return {p: d for p, d, _ in results if d is not None}, code


def cmd_verify(args):
    f = _load(args.doc)
    try:
        cert = ser.parse_certificate(_read_json(args.cert))
    except (IsorelError, ValueError) as exc:
        raise CliError(EXIT_PARSE, f"{args.cert}: {exc}") from None
    ok = verify_certificate(f, cert)
    return {"verified": ok}, EXIT_OK if ok else EXIT_VERIFY


def cmd_dualize(args):
    return ser.relation_to_doc(annihilator(_load(args.doc))), EXIT_OK


def cmd_isomorphic(args):
    f, g = _load(args.doc_a), _load(args.doc_b)
    if f.flavor != g.flavor:
        raise CliError(EXIT_PARSE, "documents have different kinds")
    _require(f, args.doc_a)
    _require(g, args.doc_b)
    return {"isomorphic": is_isomorphic(f, g)}, EXIT_OK


def cmd_canonical(args):
    return ser.relation_to_doc(canonical_sum(_counts(args.n), args.flavor)), EXIT_OK


def cmd_random(args):
    n = _counts(args.n)
    f, _, _ = random_instance(n, args.flavor, args.seed)
    doc = ser.relation_to_doc(f)
    doc["seed"] = args.seed
    doc["multiplicities"] = dict(zip(TAGS, n))
    return doc, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the JSON result here instead of stdout (a directory for batch decompose)")
    p = argparse.ArgumentParser(prog="isorel", description="Classify and decompose (co)isotropic linear relations.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check well-formedness and (co)isotropy")
    s.add_argument("doc")
    s.add_argument("--require", action="store_true", help="exit 2 unless the relation is (co)isotropic")
    s.set_defaults(func=cmd_validate)

    for name, func, text in (("invariants", cmd_invariants, "print k1..k13"),
                             ("multiplicities", cmd_multiplicities, "print n by type"),
                             ("dualize", cmd_dualize, "print the annihilator document")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("doc")
        s.set_defaults(func=func)

    s = sub.add_parser("decompose", parents=[common], help="write a decomposition certificate")
    s.add_argument("docs", nargs="+")
    s.add_argument("--jobs", type=int, default=1, help="decompose several files in parallel")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("verify", parents=[common], help="check a certificate against a relation (exit 3 on failure)")
    s.add_argument("doc")
    s.add_argument("cert")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("isomorphic", parents=[common], help="compare two relations")
    s.add_argument("doc_a")
    s.add_argument("doc_b")
    s.set_defaults(func=cmd_isomorphic)

    for name, func, text in (("canonical", cmd_canonical, "print canonical_sum(n)"),
                             ("random", cmd_random, "print a random isomorphic copy of canonical_sum(n)")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("n", help="13 comma-separated counts, or tag=count pairs such as I2=1,I9=2")
        s.add_argument("--flavor", choices=FLAVORS, default=PRESYMPLECTIC)
        if name == "random":
            s.add_argument("--seed", type=int, default=0)
        s.set_defaults(func=func)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except NotIsotropicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_ISOTROPIC
    except (StructureError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if doc is not None:
        text = ser.dumps(doc)
        if args.out and not (args.command == "decompose" and len(args.docs) > 1):
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
