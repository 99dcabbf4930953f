"""Constructive decomposition of (co)isotropic relations into indecomposables.

The pipeline has three stages:

1. :func:`split_cartesian_biinjective` splits an isotropic f as
   f_C + f_B, with f_C = f0 x 0f cartesian and f_B biinjective;
2. :func:`decompose_cartesian` cuts f_C into blocks I2, I3, I8, I9;
3. :func:`decompose_biinjective` cuts f_B into the remaining nine types.

The block bases are then assembled into change-of-basis matrices (P, Q)
that carry f exactly onto ``canonical_sum(n)``.  :func:`decompose` checks
that claim before returning.

In stage 1 the dual complements X_0*, Y_0* are chosen isotropic first, and
X_B, Y_B are then taken inside the orthogonal of X_0 + X_0*, Y_0 + Y_0*.
An arbitrary complement of f0 in (f0)^perp would still give f = f_C + f_B
as subspaces, but the target and source splittings would not in general be
orthogonal, and blocks from the two parts could then fail to be
independent modulo the radical.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import TAGS, block_sequence, canonical_sum, poisson_normalizer
from .errors import CertificateError, NotIsotropicError, StructureError
from .invariants import MultiplicityVector, compute_invariants, multiplicities, multiplicities_of
from .linalg import Matrix, Subspace, combine, complement_in, embed, intersect, is_direct_sum, span_all
from .relations import (
    LinearRelation,
    apply_iso_pair,
    cartesian_product,
    domain_Xf,
    image_fY,
    image_of,
    indeterminacy_f0,
    is_biinjective,
    is_isotropic,
    kernel_0f,
    preimage_of,
    pull_vector,
    restrict,
)
from .spaces import (
    POISSON,
    PRESYMPLECTIC,
    BilinearSpace,
    dual_basis,
    is_isotropic_subspace,
    orthogonal,
    orthogonal_sum_holds,
    radical,
    radical_complement_containing,
    symplectic_basis,
)

# stage-B symbols living in the target; every other stage-B symbol is a
# source subspace
_B_TARGET = {"X_R", "X_I", "X_R'", "X_L", "X_S", "gY_I", "(gY_I)*", "X_L*", "E_X", "X_S'", "gY", "R_X"}


@dataclass(frozen=True)
class Block:
    """One indecomposable summand: its basis vectors in target and source,
    in the order of the canonical model's coordinates."""

    tag: str
    target: tuple = ()
    source: tuple = ()


@dataclass
class StageTrace:
    """Every subspace chosen by the pipeline.

    ``stage_a`` is in the coordinates of the input relation.  ``stage_b`` is
    in the coordinates of ``f_B`` (the canonical bases of X_B and Y_B);
    :meth:`ambient` maps a stage-B symbol back to the input coordinates.
    """

    stage_a: dict = field(default_factory=dict)
    stage_b: dict = field(default_factory=dict)
    f_C: LinearRelation | None = None
    f_B: LinearRelation | None = None
    equations: list = field(default_factory=list)  # (statement, holds) as evaluated by decompose

    def ambient(self, name: str) -> Subspace:
        if name in self.stage_a:
            return self.stage_a[name]
        local = self.stage_b[name]
        return embed(self.stage_a["X_B" if name in _B_TARGET else "Y_B"], local)

    def names(self) -> list[str]:
        return list(self.stage_a) + list(self.stage_b)


@dataclass(frozen=True)
class DecompositionCertificate:
    """apply_iso_pair(f, P, Q) equals canonical_sum(multiplicities, flavor)."""

    P: Matrix
    Q: Matrix
    multiplicities: MultiplicityVector
    flavor: str = PRESYMPLECTIC
    trace: StageTrace | None = None


# ---------------------------------------------------------------------------
# stage 1


def split_cartesian_biinjective(f: LinearRelation) -> tuple[LinearRelation, LinearRelation, StageTrace]:
    """f = f_C + f_B with f_C = f0 x 0f on X_C x Y_C and f_B = f & (X_B x Y_B).

    Both parts are returned in the canonical-basis coordinates of their
    spaces, with induced forms.
    """
    if f.flavor != PRESYMPLECTIC or not is_isotropic(f):
        raise NotIsotropicError("split_cartesian_biinjective needs an isotropic relation")
    X, Y = f.target, f.source
    rx, ry = radical(X), radical(Y)
    f0, zf = indeterminacy_f0(f), kernel_0f(f)
    kx, ky = intersect(f0, rx), intersect(zf, ry)
    x0, y0 = complement_in(kx, f0), complement_in(ky, zf)
    x0s = Subspace.span(dual_basis(X, x0.basis, radical_complement_containing(X, x0)), X.dim)
    y0s = Subspace.span(dual_basis(Y, y0.basis, radical_complement_containing(Y, y0)), Y.dim)
    xb = complement_in(kx, orthogonal(X, x0 + x0s))
    yb = complement_in(ky, orthogonal(Y, y0 + y0s))
    xc = span_all((x0, x0s, kx), X.dim)
    yc = span_all((y0, y0s, ky), Y.dim)
    f_C = restrict(f, xc, yc)
    f_B = restrict(f, xb, yb)
    trace = StageTrace(
        stage_a={
            "R_X": rx, "R_Y": ry, "f0": f0, "0f": zf,
            "f0&R_X": kx, "0f&R_Y": ky, "X_0": x0, "Y_0": y0,
            "X_0*": x0s, "Y_0*": y0s, "X_B": xb, "Y_B": yb,
            "X_C": xc, "Y_C": yc,
        },
        f_C=f_C,
        f_B=f_B,
    )
    return f_C, f_B, trace


def stage_a_equations(f: LinearRelation, trace: StageTrace) -> list[tuple[str, bool]]:
    """The direct-sum and orthogonality statements of stage 1, evaluated."""
    a = trace.stage_a
    X, Y = f.target, f.source
    fy, xf = image_fY(f), domain_Xf(f)
    perp_f0, perp_zf = orthogonal(X, a["f0"]), orthogonal(Y, a["0f"])
    m, k = X.dim, Y.dim
    f_c_graph = cartesian_product(X, Y, a["f0"], a["0f"]).graph
    f_b_graph = _embed_graph(trace.f_B, a["X_B"], a["Y_B"], m, k)
    box_c = cartesian_product(X, Y, a["X_C"], a["Y_C"]).graph
    box_b = cartesian_product(X, Y, a["X_B"], a["Y_B"]).graph
    return [
        ("0f = (0f&R_Y) + Y_0", is_direct_sum(a["0f"], [a["0f&R_Y"], a["Y_0"]])),
        ("f0 = (f0&R_X) + X_0", is_direct_sum(a["f0"], [a["f0&R_X"], a["X_0"]])),
        ("(0f)^perp = 0f + Y_B", is_direct_sum(perp_zf, [a["0f"], a["Y_B"]])),
        ("(f0)^perp = f0 + X_B", is_direct_sum(perp_f0, [a["f0"], a["X_B"]])),
        ("Xf = 0f + (Xf & Y_B)", is_direct_sum(xf, [a["0f"], intersect(xf, a["Y_B"])])),
        ("fY = f0 + (fY & X_B)", is_direct_sum(fy, [a["f0"], intersect(fy, a["X_B"])])),
        ("Y = (0f)^perp + Y_0*", is_direct_sum(Subspace.full(k), [perp_zf, a["Y_0*"]])),
        ("X = (f0)^perp + X_0*", is_direct_sum(Subspace.full(m), [perp_f0, a["X_0*"]])),
        ("Y_0 paired with Y_0*", _nondegenerate(Y, a["Y_0"], a["Y_0*"])),
        ("X_0 paired with X_0*", _nondegenerate(X, a["X_0"], a["X_0*"])),
        ("Y_0 + Y_0* lagrangian pair", is_isotropic_subspace(Y, a["Y_0"]) and is_isotropic_subspace(Y, a["Y_0*"])),
        ("X_0 + X_0* lagrangian pair", is_isotropic_subspace(X, a["X_0"]) and is_isotropic_subspace(X, a["X_0*"])),
        ("Y = Y_0 + Y_0* + (0f&R_Y) + Y_B", is_direct_sum(Subspace.full(k), [a["Y_0"], a["Y_0*"], a["0f&R_Y"], a["Y_B"]])),
        ("X = X_0 + X_0* + (f0&R_X) + X_B", is_direct_sum(Subspace.full(m), [a["X_0"], a["X_0*"], a["f0&R_X"], a["X_B"]])),
        ("Y_C orthogonal to Y_B", orthogonal_sum_holds(Y, [a["Y_C"], a["Y_B"]])),
        ("X_C orthogonal to X_B", orthogonal_sum_holds(X, [a["X_C"], a["X_B"]])),
        ("f = (f0 x 0f) + f_B", is_direct_sum(f.graph, [f_c_graph, f_b_graph])),
        ("f & (X_C x Y_C) = f0 x 0f", intersect(f.graph, box_c) == f_c_graph),
        ("X x Y = (X_C x Y_C) + (X_B x Y_B)", is_direct_sum(Subspace.full(m + k), [box_c, box_b])),
        ("f_B biinjective", is_biinjective(trace.f_B)),
    ]


def _nondegenerate(space: BilinearSpace, a: Subspace, b: Subspace) -> bool:
    if a.dim != b.dim:
        return False
    return Matrix(a.dim, b.dim, tuple(tuple(space.pair(x, y) for y in b.basis) for x in a.basis)).rank() == a.dim


def _embed_graph(g: LinearRelation, xs: Subspace, ys: Subspace, m: int, k: int) -> Subspace:
    a = g.target.dim
    rows = [combine(r[:a], xs.basis, m) + combine(r[a:], ys.basis, k) for r in g.graph.basis]
    return Subspace.span(rows, m + k)


# ---------------------------------------------------------------------------
# stage 2


def decompose_cartesian(f_C: LinearRelation, trace: StageTrace | None = None) -> list[Block]:
    """Blocks I2, I3, I8, I9 of a relation of the shape f0 x 0f, where
    (f0)^perp = f0 and (0f)^perp = 0f."""
    X, Y = f_C.target, f_C.source
    rx, ry = radical(X), radical(Y)
    f0, zf = indeterminacy_f0(f_C), kernel_0f(f_C)
    if f_C.graph != cartesian_product(X, Y, f0, zf).graph:
        raise StructureError("decompose_cartesian: relation is not f0 x 0f")
    blocks: list[Block] = []
    for side, space, r, ind, iso_tag, rad_tag in (
        ("target", X, rx, f0, "I2", "I8"),
        ("source", Y, ry, zf, "I3", "I9"),
    ):
        k = intersect(ind, r)
        lag = complement_in(k, ind)
        if k != r or space.dim != 2 * lag.dim + k.dim or orthogonal(space, ind) != ind:
            raise StructureError(f"decompose_cartesian: {side} is not of the cartesian-part shape")
        duals = dual_basis(space, lag.basis, radical_complement_containing(space, lag))
        for q, p in zip(lag.basis, duals):
            blocks.append(Block(iso_tag, **{side: (q, p)}))
        for v in k.basis:
            blocks.append(Block(rad_tag, **{side: (v,)}))
    return blocks


# ---------------------------------------------------------------------------
# stage 3


def decompose_biinjective(g: LinearRelation, trace: StageTrace | None = None,
                          check: bool = True) -> list[Block]:
    """Blocks I1, I4-I7, I10-I13 of a biinjective isotropic relation.

    When ``trace`` is given its ``stage_b`` dictionary receives every chosen
    subspace, in the coordinates of ``g``.
    """
    if g.flavor != PRESYMPLECTIC or not is_isotropic(g):
        raise NotIsotropicError("decompose_biinjective needs an isotropic relation")
    if not is_biinjective(g):
        raise StructureError("decompose_biinjective needs a biinjective relation")
    X, Y = g.target, g.source
    rx, ry = radical(X), radical(Y)
    xg, gy = domain_Xf(g), image_fY(g)
    xg_r, gy_r = intersect(xg, ry), intersect(gy, rx)

    x_r = intersect(image_of(g, xg_r), rx)
    y_r = preimage_of(g, x_r)
    y_i = complement_in(y_r, xg_r)
    x_i = complement_in(x_r, gy_r)
    x_ig = preimage_of(g, x_i)
    gy_i = image_of(g, y_i)
    y_rp = complement_in(xg_r, ry)
    x_rp = complement_in(gy_r, rx)

    w = complement_in(span_all((y_r, y_i, x_ig), Y.dim), xg)
    y_l = intersect(w, orthogonal(Y, w))
    y_s = complement_in(y_l, w)
    x_l = image_of(g, y_l)
    x_s = image_of(g, y_s)

    blocks: dict[str, list[Block]] = {t: [] for t in TAGS}

    # target bases are fixed first; sources are pulled back through g
    for q, p in symplectic_basis(X, x_s):
        blocks["I1"].append(Block("I1", (q, p), (pull_vector(g, q), pull_vector(g, p))))
    for x in x_r.basis:
        blocks["I7"].append(Block("I7", (x,), (pull_vector(g, x),)))

    iso_x = list(gy_i.basis) + list(x_l.basis)
    iso_y = [pull_vector(g, x) for x in x_i.basis] + [pull_vector(g, x) for x in x_l.basis]
    e_x = radical_complement_containing(X, span_all((gy_i, x_l, x_s), X.dim))
    e_y = radical_complement_containing(Y, span_all((x_ig, y_l, y_s), Y.dim))
    dual_x = dual_basis(X, iso_x, e_x, x_s)
    dual_y = dual_basis(Y, iso_y, e_y, y_s)
    ni, nl = gy_i.dim, x_l.dim
    nxi = x_i.dim

    for j, q in enumerate(gy_i.basis):
        blocks["I12"].append(Block("I12", (q, dual_x[j]), (pull_vector(g, q),)))
    for j, x in enumerate(x_i.basis):
        blocks["I13"].append(Block("I13", (x,), (iso_y[j], dual_y[j])))
    for j, l in enumerate(x_l.basis):
        qx = tuple(-c for c in dual_x[ni + j])
        qy = tuple(-c for c in dual_y[nxi + j])
        blocks["I6"].append(Block("I6", (qx, l), (qy, iso_y[nxi + j])))

    gy_i_s = Subspace.span(dual_x[:ni], X.dim)
    x_l_s = Subspace.span(dual_x[ni:], X.dim)
    x_ig_s = Subspace.span(dual_y[:nxi], Y.dim)
    y_l_s = Subspace.span(dual_y[nxi:], Y.dim)
    x_sp = intersect(e_x, orthogonal(X, span_all((gy_i, gy_i_s, x_l, x_l_s, x_s), X.dim)))
    y_sp = intersect(e_y, orthogonal(Y, span_all((x_ig, x_ig_s, y_l, y_l_s, y_s), Y.dim)))
    for q, p in symplectic_basis(X, x_sp):
        blocks["I4"].append(Block("I4", target=(q, p)))
    for q, p in symplectic_basis(Y, y_sp):
        blocks["I5"].append(Block("I5", source=(q, p)))
    for x in x_rp.basis:
        blocks["I10"].append(Block("I10", target=(x,)))
    for y in y_rp.basis:
        blocks["I11"].append(Block("I11", source=(y,)))

    stage = {
        "R_X": rx, "R_Y": ry, "Xg": xg, "gY": gy,
        "X_R": x_r, "Y_R": y_r, "X_I": x_i, "Y_I": y_i, "X_R'": x_rp, "Y_R'": y_rp,
        "W": w, "Y_L": y_l, "Y_S": y_s, "X_L": x_l, "X_S": x_s,
        "X_Ig": x_ig, "gY_I": gy_i, "(X_Ig)*": x_ig_s, "Y_L*": y_l_s,
        "(gY_I)*": gy_i_s, "X_L*": x_l_s, "E_X": e_x, "E_Y": e_y,
        "Y_S'": y_sp, "X_S'": x_sp,
    }
    if trace is not None:
        trace.stage_b = stage
    if check:
        evaluated = stage_b_equations(g, stage)
        if trace is not None:
            trace.equations.extend(evaluated)
        bad = [name for name, ok in evaluated if not ok]
        if bad:
            raise CertificateError(f"biinjective stage violated: {bad}")
    return [b for t in TAGS for b in blocks[t]]


def stage_b_equations(g: LinearRelation, s: dict) -> list[tuple[str, bool]]:
    """The direct-sum and orthogonality statements of stage 3, evaluated in
    the coordinates of g."""
    X, Y = g.target, g.source
    m, k = X.dim, Y.dim
    full_x, full_y = Subspace.full(m), Subspace.full(k)
    hyp_y = [s["Y_R"], s["Y_R'"], s["Y_I"], s["X_Ig"], s["(X_Ig)*"], s["Y_L"], s["Y_L*"], s["Y_S"], s["Y_S'"]]
    hyp_x = [s["X_R"], s["X_R'"], s["X_I"], s["gY_I"], s["(gY_I)*"], s["X_L"], s["X_L*"], s["X_S"], s["X_S'"]]
    z_x, z_y = Subspace.zero(m), Subspace.zero(k)

    def box(a, b):
        return cartesian_product(X, Y, a, b).graph

    nine = [
        box(s["X_R"], s["Y_R"]),
        box(s["X_R'"], z_y),
        box(z_x, s["Y_R'"]),
        box(s["X_I"], s["X_Ig"] + s["(X_Ig)*"]),
        box(s["gY_I"] + s["(gY_I)*"], s["Y_I"]),
        box(s["X_L"] + s["X_L*"], s["Y_L"] + s["Y_L*"]),
        box(s["X_S"], s["Y_S"]),
        box(s["X_S'"], z_y),
        box(z_x, s["Y_S'"]),
    ]
    pieces = [intersect(g.graph, b) for b in nine]
    return [
        ("Xg & R_Y = Y_R + Y_I", is_direct_sum(intersect(s["Xg"], s["R_Y"]), [s["Y_R"], s["Y_I"]])),
        ("gY & R_X = X_R + X_I", is_direct_sum(intersect(s["gY"], s["R_X"]), [s["X_R"], s["X_I"]])),
        ("R_Y = Y_R + Y_I + Y_R'", is_direct_sum(s["R_Y"], [s["Y_R"], s["Y_I"], s["Y_R'"]])),
        ("R_X = X_R + X_I + X_R'", is_direct_sum(s["R_X"], [s["X_R"], s["X_I"], s["X_R'"]])),
        ("Xg = Y_R + Y_I + X_Ig + Y_L + Y_S",
         is_direct_sum(s["Xg"], [s["Y_R"], s["Y_I"], s["X_Ig"], s["Y_L"], s["Y_S"]])),
        ("gY = X_R + X_I + gY_I + X_L + X_S",
         is_direct_sum(s["gY"], [s["X_R"], s["X_I"], s["gY_I"], s["X_L"], s["X_S"]])),
        ("g(Y_R) = X_R", image_of(g, s["Y_R"]) == s["X_R"]),
        ("X_Ig & R_Y = 0", intersect(s["X_Ig"], s["R_Y"]).dim == 0),
        ("gY_I & R_X = 0", intersect(s["gY_I"], s["R_X"]).dim == 0),
        ("X_Ig, gY_I isotropic", is_isotropic_subspace(Y, s["X_Ig"]) and is_isotropic_subspace(X, s["gY_I"])),
        ("gY_I, X_L, X_S pairwise orthogonal", orthogonal_sum_holds(X, [s["gY_I"], s["X_L"], s["X_S"]])),
        ("X_Ig, Y_L, Y_S pairwise orthogonal", orthogonal_sum_holds(Y, [s["X_Ig"], s["Y_L"], s["Y_S"]])),
        ("X_L = radical of X_L + X_S",
         intersect(s["X_L"] + s["X_S"], orthogonal(X, s["X_L"] + s["X_S"])) == s["X_L"]),
        ("Y = R_Y + E_Y", is_direct_sum(full_y, [s["R_Y"], s["E_Y"]])),
        ("X = R_X + E_X", is_direct_sum(full_x, [s["R_X"], s["E_X"]])),
        ("E_Y = (X_Ig + X_Ig*) + (Y_L + Y_L*) + Y_S + Y_S'",
         is_direct_sum(s["E_Y"], [s["X_Ig"], s["(X_Ig)*"], s["Y_L"], s["Y_L*"], s["Y_S"], s["Y_S'"]])),
        ("E_X = (gY_I + gY_I*) + (X_L + X_L*) + X_S + X_S'",
         is_direct_sum(s["E_X"], [s["gY_I"], s["(gY_I)*"], s["X_L"], s["X_L*"], s["X_S"], s["X_S'"]])),
        ("E_Y splitting is orthogonal",
         orthogonal_sum_holds(Y, [s["X_Ig"] + s["(X_Ig)*"], s["Y_L"] + s["Y_L*"], s["Y_S"], s["Y_S'"]])),
        ("E_X splitting is orthogonal",
         orthogonal_sum_holds(X, [s["gY_I"] + s["(gY_I)*"], s["X_L"] + s["X_L*"], s["X_S"], s["X_S'"]])),
        ("Y = Y_R + Y_R' + Y_I + (X_Ig + X_Ig*) + (Y_L + Y_L*) + Y_S + Y_S'", is_direct_sum(full_y, hyp_y)),
        ("X = X_R + X_R' + X_I + (gY_I + gY_I*) + (X_L + X_L*) + X_S + X_S'", is_direct_sum(full_x, hyp_x)),
        ("X x Y = nine summands", is_direct_sum(Subspace.full(m + k), nine)),
        ("g = sum of its nine restrictions", is_direct_sum(g.graph, pieces)),
    ]


def trace_equations(f: LinearRelation, trace: StageTrace) -> list[tuple[str, bool]]:
    """All stage-1 and stage-3 statements for a presymplectic decomposition."""
    return stage_a_equations(f, trace) + stage_b_equations(trace.f_B, trace.stage_b)


# ---------------------------------------------------------------------------
# assembly


def _columns(vectors: list, n: int) -> Matrix:
    return Matrix(n, len(vectors), tuple(tuple(v[i] for v in vectors) for i in range(n)))


def _assemble(f: LinearRelation, blocks_c: list[Block], blocks_b: list[Block],
              trace: StageTrace) -> tuple[Matrix, Matrix, tuple[int, ...]]:
    m, k = f.target.dim, f.source.dim
    a = trace.stage_a
    placed = []
    for blocks, xs, ys in ((blocks_c, a["X_C"], a["Y_C"]), (blocks_b, a["X_B"], a["Y_B"])):
        for b in blocks:
            placed.append(Block(
                b.tag,
                tuple(combine(v, xs.basis, m) for v in b.target),
                tuple(combine(v, ys.basis, k) for v in b.source),
            ))
    order = {t: i for i, t in enumerate(TAGS)}
    placed.sort(key=lambda b: order[b.tag])  # stable: keeps construction order within a type
    tvecs = [v for b in placed for v in b.target]
    svecs = [v for b in placed for v in b.source]
    if len(tvecs) != m or len(svecs) != k:
        raise CertificateError(f"blocks cover {len(tvecs)} <- {len(svecs)} dimensions, expected {m} <- {k}")
    counts = tuple(sum(1 for b in placed if b.tag == t) for t in TAGS)
    P = _columns(tvecs, m).inverse()
    Q = _columns(svecs, k).inverse()
    return P, Q, counts


def decompose(f: LinearRelation, check_trace: bool = True) -> DecompositionCertificate:
    """Certificate exhibiting f as a canonical sum of indecomposables.

    Poisson relations are decomposed through their annihilator.  The result
    is verified exactly before it is returned; a failed verification raises
    :class:`CertificateError`.
    """
    if f.flavor == POISSON:
        from .duality import annihilator, dualize_certificate

        h = annihilator(f)
        if not is_isotropic(h):
            raise NotIsotropicError("relation is not coisotropic")
        return dualize_certificate(decompose(h, check_trace), h)
    if not is_isotropic(f):
        raise NotIsotropicError("relation is not isotropic")
    f_C, f_B, trace = split_cartesian_biinjective(f)
    if check_trace:
        trace.equations.extend(stage_a_equations(f, trace))
        bad = [name for name, ok in trace.equations if not ok]
        if bad:
            raise CertificateError(f"cartesian/biinjective split violated: {bad}")
    blocks_c = decompose_cartesian(f_C, trace)
    blocks_b = decompose_biinjective(f_B, trace, check=check_trace)
    P, Q, counts = _assemble(f, blocks_c, blocks_b, trace)
    cert = DecompositionCertificate(P, Q, MultiplicityVector(counts), PRESYMPLECTIC, trace)
    if not verify_certificate(f, cert):
        raise CertificateError("assembled change of basis does not reach the canonical sum")
    expected = multiplicities(compute_invariants(f, check=False))
    if expected != cert.multiplicities:
        raise CertificateError(f"constructive multiplicities {counts} disagree with M^-1 k = {expected.n}")
    return cert


def verify_certificate(f: LinearRelation, cert: DecompositionCertificate) -> bool:
    """Exact check that (P, Q) carries f onto canonical_sum(multiplicities)."""
    try:
        if cert.flavor != f.flavor:
            return False
        if cert.P.shape != (f.target.dim,) * 2 or cert.Q.shape != (f.source.dim,) * 2:
            return False
        if not cert.P.is_invertible() or not cert.Q.is_invertible():
            return False
        model = canonical_sum(cert.multiplicities.n, f.flavor)
        if (model.target.dim, model.source.dim) != (f.target.dim, f.source.dim):
            return False
        moved = apply_iso_pair(f, cert.P, cert.Q)
    except (ValueError, ArithmeticError):
        return False
    return moved.graph == model.graph and moved.target == model.target and moved.source == model.source


def is_isomorphic(f: LinearRelation, g: LinearRelation) -> bool:
    """Equal multiplicity vectors (a complete invariant)."""
    if f.flavor != g.flavor:
        raise StructureError("is_isomorphic: relations have different flavors")
    return multiplicities_of(f) == multiplicities_of(g)


def normalizers(n, flavor_of_target: str = POISSON) -> tuple[Matrix, Matrix]:
    """Block-diagonal (N_t, N_s) carrying annihilator(canonical_sum(n)) onto
    canonical_sum(n, poisson)."""
    nts, nss = [], []
    for tag in block_sequence(n):
        nt, ns = poisson_normalizer(tag)
        nts.append(nt)
        nss.append(ns)
    return Matrix.block_diag(*nts), Matrix.block_diag(*nss)
