"""Graded tangent spaces of Artinian quotients.

For a homogeneous ideal I with Artinian quotient C = R/I, the graded pieces
of T := Hom_R(I, C) are computed by fixing the images of a minimal generating
set and imposing the syzygy relations.  A degree-v map sends the generator
G_i to some c_i in C_{d_i + v}, and the tuple (c_i) extends to a well-defined
map exactly when every relation sum a_i G_i = 0 forces sum a_i c_i = 0 in C.
Relations of degree d > s - v land in a zero piece of C and impose nothing,
so the finitely many syzygy spaces with d <= s - v decide each dimension.

The negative part of T detects trivial negative tangents: for homogeneous C
the sum of dim T_v over v < 0 always contains the r directions obtained by
contracting with the variables, and equality with r is the "trivial negative
tangents" criterion used to flag elementary components.
"""

from dataclasses import dataclass

from .compressed import dimension_formulas, i_set, is_permissible
from .duality import GradedIdeal, QuotientRing, _lift_row, _var_lift
from .invariants import IntSeq, is_gorenstein
from .rings import (
    BoundExceededError,
    MathDomainError,
    Polynomial,
    Subspace,
    echelon,
    kernel,
    matrix_rank,
    mult_matrix,
)

__all__ = [
    "TangentProfile",
    "CrosscheckReport",
    "ElementaryReport",
    "minimal_generators",
    "syzygies_at_degree",
    "tangent_dim",
    "hom_dims",
    "tnt_verdict",
    "squared_ideal_dim",
    "gorenstein_tangent_crosscheck",
    "elementary_report",
]


# ---------------------------------------------------------------------------
# Minimal generators and syzygies.


def minimal_generators(ideal: GradedIdeal):
    """Deterministic minimal homogeneous generating set as (degree, poly) pairs.

    In each degree d the span of x_i * I_{d - w_i} is completed to I_d; the
    completing vectors are the echelon basis rows of I_d outside that span,
    so their count equals dim I_d - dim(sum_i x_i I_{d - w_i}).
    """
    if not ideal.artinian_certified:
        raise BoundExceededError(
            "truncation bound does not certify an Artinian quotient"
        )
    ring = ideal.ring
    field = ring.field
    out = []
    for d in range(ideal.bound):
        piece = ideal.piece(d)
        if not piece.dim:
            continue
        rows = []
        for i in range(ring.nvars):
            w = ring.weights[i]
            if d - w < 0:
                continue
            below = ideal.piece(d - w)
            if not below.dim:
                continue
            steps = _var_lift(ring, i, d - w)
            rows.extend(_lift_row(field, r, steps, ring.dim(d)) for r in below.rows)
        covered = echelon(field, rows, ring.dim(d))
        for row in piece.rows:
            if covered.contains(row):
                continue
            monos = ring.monomials(d)
            poly = Polynomial(ring, {m: c for m, c in zip(monos, row) if c != 0})
            out.append((d, poly))
            covered = covered + echelon(field, [row], ring.dim(d))
    return out


def syzygies_at_degree(gens, d: int) -> Subspace:
    """Kernel of (a_1, ..., a_k) |-> sum a_i g_i from ⊕_i R_{d - deg g_i} to R_d.

    Coordinates are blocked generator by generator, each block running over
    the monomials of its degree in ring order; blocks with d < deg g_i are
    empty.  The result is a canonical subspace of the blocked source.
    """
    gens = list(gens)
    if not gens:
        raise MathDomainError("no generators")
    ring = gens[0].ring
    field = ring.field
    widths = []
    mats = []
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators live in different rings")
        e = d - g.degree()
        if e < 0 or ring.dim(e) == 0:
            widths.append(0)
            mats.append(None)
        else:
            widths.append(ring.dim(e))
            mats.append(mult_matrix(ring, g, e))
    total = sum(widths)
    if total == 0:
        return Subspace.zero(field, 0)
    nrows = ring.dim(d)
    matrix = []
    for t in range(nrows):
        row = []
        for w, m in zip(widths, mats):
            if w:
                row.extend(m[t])
        matrix.append(row)
    return kernel(field, matrix, total)


# ---------------------------------------------------------------------------
# Graded Hom dimensions.


@dataclass(frozen=True)
class TangentProfile:
    """Graded dimensions of Hom(I, C) together with the negative-part tally."""

    generator_degrees: tuple
    socle_degree: int
    nvars: int
    dims: dict
    negative_total: int

    def dim(self, v: int) -> int:
        return self.dims.get(v, 0)

    @property
    def total(self) -> int:
        return sum(self.dims.values())

    @property
    def tnt(self) -> bool:
        """Trivial negative tangents: nothing below degree 0 beyond the
        r directions given by contraction with the variables."""
        return self.negative_total == self.nvars


def _hom_dim(C: QuotientRing, s: int, mingens, v: int, cutoff: int | None = None) -> int:
    ring = C.ring
    field = ring.field
    degs = [d for d, _ in mingens]
    polys = [g for _, g in mingens]
    widths = [C.dim(d + v) for d in degs]
    total = sum(widths)
    if total == 0:
        return 0
    offsets = []
    run = 0
    for w in widths:
        offsets.append(run)
        run += w
    if cutoff is None:
        cutoff = s - v
    rows = []
    for d in range(min(degs), cutoff + 1):
        tgt = C.dim(d + v)
        if tgt == 0:
            continue
        syz = syzygies_at_degree(polys, d)
        if not syz.dim:
            continue
        split = []
        pos = 0
        for g in polys:
            e = d - g.degree()
            w = ring.dim(e) if e >= 0 else 0
            split.append((pos, w, e))
            pos += w
        for rel in syz.rows:
            blocks = []
            for i, (start, w, e) in enumerate(split):
                if w == 0 or widths[i] == 0:
                    blocks.append(None)
                    continue
                coeffs = rel[start : start + w]
                if all(c == 0 for c in coeffs):
                    blocks.append(None)
                    continue
                monos = ring.monomials(e)
                a = Polynomial(ring, {m: c for m, c in zip(monos, coeffs) if c != 0})
                blocks.append(C.mult_matrix(a, degs[i] + v))
            if all(b is None for b in blocks):
                continue
            for t in range(tgt):
                row = [field.zero] * total
                for i, b in enumerate(blocks):
                    if b is None:
                        continue
                    for j in range(widths[i]):
                        row[offsets[i] + j] = b[t][j]
                if any(c != 0 for c in row):
                    rows.append(row)
    if not rows:
        return total
    return kernel(field, rows, total).dim


def tangent_dim(ideal: GradedIdeal, v: int, cutoff: int | None = None) -> int:
    """dim Hom(I, C)_v; ``cutoff`` overrides the syzygy degree bound s - v,
    which is already complete because C vanishes above its socle degree."""
    C = QuotientRing(ideal)
    return _hom_dim(C, C.top_degree(), minimal_generators(ideal), v, cutoff)


def hom_dims(ideal: GradedIdeal, v_range=None) -> TangentProfile:
    """The tangent profile of C = R/I.

    Maps of degree v < -max d_i would send some generator into a negative
    piece of C, so the profile starts at -max d_i; it ends at s - min d_i,
    above which every target piece is zero.  The negative tally is always
    taken over the full window [-max d_i, -1] regardless of ``v_range``.
    """
    C = QuotientRing(ideal)
    s = C.top_degree()
    mingens = minimal_generators(ideal)
    degs = [d for d, _ in mingens]
    lo, hi = -max(degs), s - min(degs)
    if v_range is None:
        v_range = range(lo, hi + 1)
    wanted = sorted(set(v_range) | set(range(lo, 0)))
    dims = {v: _hom_dim(C, s, mingens, v) for v in wanted}
    negative_total = sum(dims[v] for v in range(lo, 0))
    shown = {v: dims[v] for v in sorted(v_range)}
    return TangentProfile(
        generator_degrees=tuple(degs),
        socle_degree=s,
        nvars=ideal.ring.nvars,
        dims=shown,
        negative_total=negative_total,
    )


def tnt_verdict(ideal: GradedIdeal) -> bool:
    """Whether C = R/I has trivial negative tangents."""
    return hom_dims(ideal, v_range=()).tnt


# ---------------------------------------------------------------------------
# The I/I^2 route for Gorenstein quotients.


def squared_ideal_dim(ideal: GradedIdeal, mingens, e: int) -> int:
    """dim (I/I^2)_e, with (I^2)_e spanned by monomial multiples of the
    pairwise generator products."""
    ring = ideal.ring
    field = ring.field
    if e < 0:
        return 0
    amb = ring.dim(e)
    if amb == 0:
        return 0
    if e < ideal.bound:
        dim_I = ideal.piece(e).dim
    elif ideal.artinian_certified:
        dim_I = amb
    else:
        raise BoundExceededError(f"degree {e} beyond truncation bound {ideal.bound}")
    rows = []
    for i, (di, gi) in enumerate(mingens):
        for dj, gj in mingens[i:]:
            rem = e - di - dj
            if rem < 0:
                continue
            prod = gi * gj
            for m in ring.monomials(rem):
                lifted = prod * Polynomial.monomial(ring, m)
                rows.append(lifted.coefficient_vector(e))
    return dim_I - matrix_rank(field, rows, amb)


@dataclass(frozen=True)
class CrosscheckReport:
    """Tangent dimensions computed twice for a Gorenstein quotient: through
    syzygies and through I/I^2 paired across the socle degree."""

    socle_degree: int
    rows: tuple  # (v, dim T_v, dim (I/I^2)_{s-v})
    agree: bool


def gorenstein_tangent_crosscheck(ideal: GradedIdeal, s: int | None = None) -> CrosscheckReport:
    """Check dim T_v = dim (I/I^2)_{s-v} across the full profile window.

    Self-duality of a Gorenstein quotient identifies C with its shifted dual,
    and Hom(I, C) = Hom(I/I^2, C) since maps to C kill I^2; together these
    turn the tangent piece at v into the plain linear dual of (I/I^2)_{s-v}.
    """
    if not is_gorenstein(ideal):
        raise MathDomainError("quotient is not Gorenstein")
    profile = hom_dims(ideal)
    if s is None:
        s = profile.socle_degree
    elif s != profile.socle_degree:
        raise MathDomainError(
            f"socle degree is {profile.socle_degree}, not {s}"
        )
    mingens = minimal_generators(ideal)
    rows = []
    agree = True
    for v in sorted(profile.dims):
        other = squared_ideal_dim(ideal, mingens, s - v)
        rows.append((v, profile.dims[v], other))
        if other != profile.dims[v]:
            agree = False
    return CrosscheckReport(socle_degree=s, rows=tuple(rows), agree=agree)


# ---------------------------------------------------------------------------
# Elementary-component dimension reports.


@dataclass(frozen=True)
class ElementaryReport:
    """Dimension count of the elementary family against the principal one.

    ``elementary`` is F + r: the fibration of the graded family (dimension F)
    by the r translations.  ``principal`` is d*r, the dimension of the locus
    of d points in r-space, d the length of the compressed quotient.  A
    strict inequality either way is decisive: elementary < principal flags a
    small component, elementary > principal shows the generic member of the
    family cannot be smoothed.
    """

    t: IntSeq
    nvars: int
    H: int
    R: int
    F: int
    length: int
    elementary: int
    principal: int
    small_component: bool
    generic_nonsmoothable: bool
    E: int | None


def elementary_report(t, r: int) -> ElementaryReport:
    """Compare F + r with d*r for the compressed family of socle type t in
    r variables; t must be permissible for the count to mean anything."""
    from math import comb

    rep = i_set(t, lambda p: comb(p + r - 1, r - 1))
    verdict = is_permissible(rep)
    if not verdict.permissible:
        raise MathDomainError(
            f"socle type is not permissible (clause {verdict.failing_clause})"
        )
    dims = dimension_formulas(rep, nvars=r)
    return ElementaryReport(
        t=rep.t,
        nvars=r,
        H=dims.H,
        R=dims.R,
        F=dims.F,
        length=rep.beta,
        elementary=dims.elementary,
        principal=dims.principal,
        small_component=dims.elementary < dims.principal,
        generic_nonsmoothable=dims.elementary > dims.principal,
        E=dims.E,
    )
