"""Numerical invariants of Artinian quotients and their dual modules.

Dual degrees are nonpositive internally; every report here follows the
convention that index p >= 0 refers to the dual's degree-(-p) piece, so a
Hilbert function or socle type reads left to right from degree 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .duality import (
    GradedIdeal,
    InverseSystem,
    QuotientRing,
    _contract_step,
    annihilator_of_submodule,
    apolar_annihilator,
    dual_dim,
    dual_minimal_generators,
)
from .rings import MathDomainError, Polynomial, Subspace, echelon, kernel


class IntSeq:
    """A finitely supported integer sequence on Z.

    Stored as a value tuple plus the index of its first entry; indexing
    outside the stored window returns 0, and equal sequences compare equal
    regardless of how much zero padding they were built with.
    """

    __slots__ = ("offset", "values")

    def __init__(self, values=(), offset: int = 0):
        vals = [int(v) for v in values]
        while vals and vals[0] == 0:
            vals.pop(0)
            offset += 1
        while vals and vals[-1] == 0:
            vals.pop()
        self.offset = offset if vals else 0
        self.values = tuple(vals)

    @classmethod
    def from_items(cls, items) -> "IntSeq":
        pairs = sorted(dict(items).items())
        if not pairs:
            return cls()
        lo = pairs[0][0]
        hi = pairs[-1][0]
        vals = [0] * (hi - lo + 1)
        for k, v in pairs:
            vals[k - lo] = v
        return cls(vals, lo)

    def __getitem__(self, p: int) -> int:
        if self.offset <= p < self.offset + len(self.values):
            return self.values[p - self.offset]
        return 0

    def __bool__(self) -> bool:
        return bool(self.values)

    def first(self) -> int:
        if not self.values:
            raise MathDomainError("zero sequence has no support")
        return self.offset

    def last(self) -> int:
        if not self.values:
            raise MathDomainError("zero sequence has no support")
        return self.offset + len(self.values) - 1

    def items(self):
        return [(self.offset + i, v) for i, v in enumerate(self.values)]

    def sum(self) -> int:
        return sum(self.values)

    def shift(self, k: int) -> "IntSeq":
        return IntSeq(self.values, self.offset + k)

    def window(self, lo: int, hi: int) -> tuple:
        """Values on the half-open index range [lo, hi)."""
        return tuple(self[p] for p in range(lo, hi))

    def __add__(self, other: "IntSeq") -> "IntSeq":
        if not self.values:
            return other
        if not other.values:
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(self.values), other.offset + len(other.values))
        return IntSeq([self[p] + other[p] for p in range(lo, hi)], lo)

    def __sub__(self, other: "IntSeq") -> "IntSeq":
        return self + other.scale(-1)

    def scale(self, c: int) -> "IntSeq":
        return IntSeq([c * v for v in self.values], self.offset)

    def __eq__(self, other):
        if not isinstance(other, IntSeq):
            return NotImplemented
        return self.offset == other.offset and self.values == other.values

    def __hash__(self):
        return hash((self.offset, self.values))

    def to_dict(self) -> dict:
        return {"offset": self.offset, "values": list(self.values)}

    @classmethod
    def from_dict(cls, d) -> "IntSeq":
        return cls(d["values"], d["offset"])

    def __str__(self):
        if not self.values:
            return "0"
        body = ", ".join(str(v) for v in self.values)
        if self.offset == 0:
            return f"({body})"
        return f"({body}) from {self.offset}"

    def __repr__(self):
        return f"IntSeq({list(self.values)}, offset={self.offset})"


def _as_quotient(obj) -> QuotientRing:
    if isinstance(obj, QuotientRing):
        return obj
    if isinstance(obj, GradedIdeal):
        return QuotientRing(obj)
    raise TypeError(f"expected an ideal or quotient, got {type(obj).__name__}")


def hilbert_function(obj) -> IntSeq:
    """Hilbert function, indexed so h(p) is the dimension in degree p for a
    quotient and in degree -p for a dual submodule."""
    if isinstance(obj, InverseSystem):
        return IntSeq.from_items({-n: s.dim for n, s in obj.pieces.items()})
    Q = _as_quotient(obj)
    if not Q.ideal.artinian_certified:
        raise MathDomainError(
            "quotient not Artinian within the truncation bound; raise the bound"
        )
    return IntSeq([Q.dim(d) for d in range(Q.bound)])


def socle(obj) -> IntSeq:
    """Degreewise dimension of the socle (everything killed by all variables)."""
    Q = _as_quotient(obj)
    if not Q.ideal.artinian_certified:
        raise MathDomainError(
            "quotient not Artinian within the truncation bound; raise the bound"
        )
    field = Q.ring.field
    items = {}
    for d in range(Q.bound):
        n = Q.dim(d)
        if n == 0:
            continue
        rows = []
        for i in range(Q.ring.nvars):
            rows.extend(Q.var_matrix(i, d))
        items[d] = kernel(field, rows, n).dim if rows else n
    return IntSeq.from_items(items)


def generator_type(D: InverseSystem) -> IntSeq:
    """t(q) = number of degree-(-q) elements in a minimal generating set of D,
    computed as the codimension of the contraction image from one step below."""
    ring = D.ring
    field = ring.field
    items = {}
    for n, s in D.pieces.items():
        if not s.dim:
            continue
        rows = []
        for i in range(ring.nvars):
            w = ring.weights[i]
            below = D.piece(n - w)
            rows.extend(_contract_step(ring, D.shifts, n - w, i, r) for r in below.rows)
        covered = echelon(field, rows, dual_dim(ring, D.shifts, n))
        items[-n] = s.dim - covered.dim
    return IntSeq.from_items(items)


@dataclass(frozen=True)
class SocleReport:
    dims: IntSeq
    socle_degree: int
    total: int
    is_level: bool
    is_gorenstein: bool


def socle_report(obj) -> SocleReport:
    dims = socle(obj)
    if not dims:
        raise MathDomainError("zero quotient has no socle")
    s = dims.last()
    total = dims.sum()
    return SocleReport(
        dims=dims,
        socle_degree=s,
        total=total,
        is_level=(dims.first() == s),
        is_gorenstein=(total == 1),
    )


def is_level(obj) -> bool:
    """Whether all socle (equivalently, dual generator) degrees coincide."""
    if isinstance(obj, InverseSystem):
        t = generator_type(obj)
        return bool(t) and t.first() == t.last()
    dims = socle(obj)
    return bool(dims) and dims.first() == dims.last()


def is_gorenstein(obj, via: str = "socle") -> bool:
    """One-dimensional socle, checked either directly ("socle") or through
    cyclicity of the dual module ("dual")."""
    if via == "socle":
        if isinstance(obj, InverseSystem):
            return generator_type(obj).sum() == 1
        return socle(obj).sum() == 1
    if via == "dual":
        D = obj if isinstance(obj, InverseSystem) else apolar_annihilator(
            obj.ideal if isinstance(obj, QuotientRing) else obj
        )
        return len(dual_minimal_generators(D)) == 1
    raise ValueError(f"unknown route {via!r}")


def symmetry_defect(h: IntSeq) -> tuple:
    """Indices p with h(p) != h(s - p), s the top of the support; empty for
    the symmetric Hilbert functions that Gorenstein quotients must have."""
    if not h:
        return ()
    s = h.last()
    return tuple(p for p in range(0, s + 1) if h[p] != h[s - p])


# ---------------------------------------------------------------------------
# Multilevel filtration of a dual module.


def _delta_pieces(D: InverseSystem, m: int) -> dict:
    """Pieces of the submodule generated by everything in degrees <= -m."""
    ring = D.ring
    field = ring.field
    supp = D.support()
    if not supp:
        return {}
    lo = supp[0]
    top = max(D.shifts)
    pieces = {}
    for n in range(lo, top + 1):
        rows = []
        if n <= -m:
            rows.extend(D.piece(n).rows)
        for i in range(ring.nvars):
            w = ring.weights[i]
            below = pieces.get(n - w)
            if below is not None and below.dim:
                rows.extend(_contract_step(ring, D.shifts, n - w, i, r) for r in below.rows)
        pieces[n] = echelon(field, rows, dual_dim(ring, D.shifts, n))
    return pieces


def delta_submodule(D: InverseSystem, m: int) -> InverseSystem:
    """The submodule of D generated by its pieces in degrees -m and below."""
    return InverseSystem(D.ring, _delta_pieces(D, m), D.shifts)


@dataclass(frozen=True)
class MultilevelProfile:
    socle_degree: int
    rows: tuple
    type_from_profile: IntSeq

    def row(self, m: int) -> IntSeq:
        if 0 <= m < len(self.rows):
            return self.rows[m]
        return IntSeq()


def multilevel_profile(D: InverseSystem) -> MultilevelProfile:
    """Hilbert functions h_m of the filtration by generation degree.

    Row m is the Hilbert function of the submodule generated in degrees -m
    and below; the generator type is recovered as t(p) = h_p(p) - h_{p+1}(p).
    """
    if not D.support():
        raise MathDomainError("zero module has no profile")
    s = D.socle_degree()
    rows = []
    for m in range(s + 2):
        sub = delta_submodule(D, m)
        rows.append(hilbert_function(sub))
    t = IntSeq.from_items({p: rows[p][p] - rows[p + 1][p] for p in range(s + 1)})
    return MultilevelProfile(socle_degree=s, rows=tuple(rows), type_from_profile=t)


# ---------------------------------------------------------------------------
# Linkage inside a Gorenstein Artinian ambient.


@dataclass(frozen=True)
class LinkageReport:
    link: GradedIdeal
    quotient_hilbert: IntSeq
    generator_degrees: tuple
    is_cyclic: bool


def linkage(ambient: GradedIdeal, ideal: GradedIdeal) -> LinkageReport:
    """The link (0 : I) of an ideal inside a Gorenstein Artinian quotient.

    ``ambient`` presents A = R/J; ``ideal`` is any homogeneous ideal of R
    (J is added to it).  The link is returned as an ideal of R containing J,
    together with the Hilbert function of its quotient, the degrees of a
    minimal A-module generating set of the link mod J, and whether that
    generating set is a single element.
    """
    if ambient.ring != ideal.ring:
        raise ValueError("ambient and ideal live in different rings")
    if not ambient.artinian_certified:
        raise MathDomainError("ambient quotient is not Artinian within its bound")
    if socle(ambient).sum() != 1:
        raise MathDomainError("linkage needs a Gorenstein ambient")
    Q = QuotientRing(ambient)
    ring = ambient.ring
    field = ring.field
    bound = ambient.bound
    top = Q.top_degree()

    # image of the ideal in the quotient, degree by degree
    image = {}
    for d in range(bound):
        if d >= ideal.bound:
            if not ideal.artinian_certified:
                raise MathDomainError("ideal is not known beyond its bound")
            image[d] = Subspace.full(field, Q.dim(d))
            continue
        rows = [Q.reduce(d, r) for r in ideal.piece(d).rows]
        image[d] = echelon(field, rows, Q.dim(d))

    # link degreewise: v with v * image = 0 in the quotient
    link_q = {}
    for d in range(bound):
        n = Q.dim(d)
        if n == 0:
            link_q[d] = Subspace.zero(field, 0)
            continue
        rows = []
        for e in range(0, top - d + 1):
            src = image.get(e)
            if src is None or not src.dim:
                continue
            for urow in src.rows:
                upoly = _lift_poly(Q, e, urow)
                if upoly.is_zero():
                    continue
                rows.extend(Q.mult_matrix(upoly, d))
        link_q[d] = kernel(field, rows, n) if rows else Subspace.full(field, n)

    # lift back to an ideal of R containing J
    pieces = {}
    for d in range(bound):
        rows = list(ambient.piece(d).rows)
        basis_pos = Q.basis_positions(d)
        for v in link_q[d].rows:
            amb = [field.zero] * ring.dim(d)
            for c, pos in zip(v, basis_pos):
                amb[pos] = c
            rows.append(tuple(amb))
        pieces[d] = echelon(field, rows, ring.dim(d))
    link = GradedIdeal(ring, bound, pieces)

    h_link = hilbert_function(link)

    # minimal module generators of the link mod J
    gen_degs = []
    for d in range(bound):
        target = link_q[d]
        if not target.dim:
            continue
        rows = []
        for i in range(ring.nvars):
            w = ring.weights[i]
            below = link_q.get(d - w)
            if below is None or not below.dim:
                continue
            M = Q.var_matrix(i, d - w)
            for v in below.rows:
                rows.append(_mat_vec_cols(field, M, v, Q.dim(d)))
        covered = echelon(field, rows, Q.dim(d))
        gen_degs.extend([d] * (target.dim - covered.dim))
    return LinkageReport(
        link=link,
        quotient_hilbert=h_link,
        generator_degrees=tuple(gen_degs),
        is_cyclic=(len(gen_degs) == 1),
    )


def _lift_poly(Q: QuotientRing, d: int, qvec):
    ring = Q.ring
    terms = {}
    for c, pos in zip(qvec, Q.basis_positions(d)):
        if c != 0:
            terms[ring.monomials(d)[pos]] = c
    return Polynomial(ring, terms)


def _mat_vec_cols(field, mat, vec, nrows):
    out = [field.zero] * nrows
    for t in range(nrows):
        row = mat[t]
        acc = field.zero
        for c, v in zip(row, vec):
            if c != 0 and v != 0:
                acc = field.add(acc, field.mul(c, v))
        out[t] = acc
    return tuple(out)


def linkage_predicted_hilbert(ambient_h: IntSeq, quotient_h: IntSeq, top: int) -> IntSeq:
    """h'(p) = b(p) - h(top - p): the Hilbert function forced on the linked
    quotient by duality with the original one."""
    return IntSeq([ambient_h[p] - quotient_h[top - p] for p in range(top + 1)])


# ---------------------------------------------------------------------------
# Stability and integrity.


@dataclass(frozen=True)
class StabilityReport:
    stable_from: int
    integrity: int


def stable_from(D: InverseSystem) -> int:
    """Least n0 such that every piece of D above degree n0 is spanned by
    variable contractions from one weight below."""
    ring = D.ring
    field = ring.field
    supp = D.support()
    if not supp:
        raise MathDomainError("zero module")
    top = max(D.shifts)
    worst = supp[0] - 1
    for n in range(supp[0], top + 1):
        rows = []
        for i in range(ring.nvars):
            w = ring.weights[i]
            below = D.piece(n - w)
            rows.extend(_contract_step(ring, D.shifts, n - w, i, r) for r in below.rows)
        covered = echelon(field, rows, dual_dim(ring, D.shifts, n))
        if covered.dim != D.piece(n).dim:
            worst = n
    return worst


def integrity(obj) -> int:
    """Largest m such that nothing below degree m is killed by every
    variable; equals the first socle degree of the quotient."""
    dims = socle(obj) if not isinstance(obj, InverseSystem) else generator_type(obj)
    if not dims:
        raise MathDomainError("zero quotient")
    return dims.first()


def stability_integrity(obj) -> StabilityReport:
    """Stability threshold of the dual module and integrity of the quotient;
    the two are exchanged (up to sign) by duality."""
    if isinstance(obj, InverseSystem):
        D = obj
        ideal = annihilator_of_submodule(D)
    else:
        ideal = obj.ideal if isinstance(obj, QuotientRing) else obj
        D = apolar_annihilator(ideal)
    return StabilityReport(stable_from=stable_from(D), integrity=integrity(ideal))
