"""Macaulay duality between ideals and inverse systems.

The graded dual of A = k[X_1..X_r] is modeled on Laurent "inverse
monomials": the degree-(-n) piece of the dual has basis {1/M} for M the
monomials of weighted degree n, and a monomial L acts by contraction,
L * (1/M) = 1/(M/L) when L divides M and 0 otherwise.  An ideal I with
Artinian quotient and a finitely generated submodule D of the dual
determine each other as mutual annihilators; this module computes both
directions, their filtered (non-homogeneous) versions, and the associated
graded of each side.

Free-module duals are supported through shift vectors: the dual of
B = A(q_1) + ... + A(q_t) has degree-n basis {(j, 1/M) : wdeg M = q_j - n},
component-major.  Shifts are normalized so the smallest is 0.
"""

from __future__ import annotations

import functools
import itertools

from .rings import (
    BoundExceededError,
    GradedRing,
    MathDomainError,
    Polynomial,
    Subspace,
    TruncatedAlgebra,
    echelon,
    kernel,
    truncate_algebra,
)


@functools.lru_cache(maxsize=None)
def _dual_basis(weights: tuple, shifts: tuple, n: int) -> tuple:
    """Canonical basis of the degree-n piece of the shifted dual module."""
    from .rings import _monomials_by_degree

    out = []
    for j, q in enumerate(shifts):
        out.extend((j, m) for m in _monomials_by_degree(weights, q - n))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _dual_positions(weights: tuple, shifts: tuple, n: int) -> dict:
    return {bm: i for i, bm in enumerate(_dual_basis(weights, shifts, n))}


def dual_dim(ring: GradedRing, shifts: tuple, n: int) -> int:
    return len(_dual_basis(ring.weights, shifts, n))


class InverseElement:
    """An element of the graded dual of A (or of a shifted free module).

    Terms map (component, inverse monomial) to a coefficient; a term in
    component j with monomial M sits in degree shifts[j] - wdeg(M).  For the
    rank-one dual of A itself, terms may be given by bare exponent tuples.
    """

    __slots__ = ("ring", "shifts", "terms")

    def __init__(self, ring: GradedRing, terms=(), shifts=(0,)):
        shifts = tuple(shifts)
        if shifts and min(shifts) != 0:
            raise ValueError("shifts must be normalized with smallest shift 0")
        field = ring.field
        data = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for key, c in items:
            if len(key) == 2 and isinstance(key[1], tuple):
                j, m = key
            else:
                j, m = 0, tuple(key)
            if not (0 <= j < len(shifts)) or len(m) != ring.nvars or any(e < 0 for e in m):
                raise ValueError(f"bad dual term key {key!r}")
            c = field.of(c)
            if (j, m) in data:
                c = field.add(data[(j, m)], c)
            if field.is_zero(c):
                data.pop((j, m), None)
            else:
                data[(j, m)] = c
        self.ring = ring
        self.shifts = shifts
        self.terms = data

    @classmethod
    def inverse_monomial(cls, ring: GradedRing, expts, coeff=1) -> "InverseElement":
        return cls(ring, {tuple(expts): coeff})

    def term_degree(self, key) -> int:
        j, m = key
        return self.shifts[j] - self.ring.wdeg(m)

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        return len({self.term_degree(k) for k in self.terms}) <= 1

    def degree(self) -> int:
        degs = {self.term_degree(k) for k in self.terms}
        if not degs:
            raise MathDomainError("the zero dual element has no degree")
        if len(degs) > 1:
            raise MathDomainError("dual element is not homogeneous")
        return degs.pop()

    def homogeneous_components(self) -> dict:
        parts = {}
        for k, c in self.terms.items():
            parts.setdefault(self.term_degree(k), {})[k] = c
        return {
            n: InverseElement(self.ring, t, self.shifts) for n, t in sorted(parts.items())
        }

    def support_degrees(self) -> tuple:
        return tuple(sorted({self.term_degree(k) for k in self.terms}))

    def coefficient_vector(self, n: int) -> tuple:
        field = self.ring.field
        pos = _dual_positions(self.ring.weights, self.shifts, n)
        vec = [field.zero] * len(pos)
        for k, c in self.terms.items():
            if self.term_degree(k) != n:
                raise MathDomainError("dual element has terms outside the requested degree")
            vec[pos[k]] = c
        return tuple(vec)

    @classmethod
    def from_vector(cls, ring: GradedRing, n: int, vec, shifts=(0,)) -> "InverseElement":
        basis = _dual_basis(ring.weights, tuple(shifts), n)
        return cls(ring, {bm: c for bm, c in zip(basis, vec)}, tuple(shifts))

    def __add__(self, other: "InverseElement") -> "InverseElement":
        if self.shifts != other.shifts or self.ring != other.ring:
            raise ValueError("ambient mismatch")
        return InverseElement(
            self.ring, list(self.terms.items()) + list(other.terms.items()), self.shifts
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        f = self.ring.field
        return InverseElement(
            self.ring, {k: f.neg(c) for k, c in self.terms.items()}, self.shifts
        )

    def scale(self, c) -> "InverseElement":
        f = self.ring.field
        c = f.of(c)
        return InverseElement(
            self.ring, {k: f.mul(c, v) for k, v in self.terms.items()}, self.shifts
        )

    def __eq__(self, other):
        return (
            isinstance(other, InverseElement)
            and self.ring == other.ring
            and self.shifts == other.shifts
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.shifts, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        ring, field = self.ring, self.ring.field
        rank1 = len(self.shifts) == 1
        keys = sorted(
            self.terms,
            key=lambda k: (-self.term_degree(k), k[0], k[1]),
        )
        chunks = []
        for k in keys:
            j, m = k
            c = self.terms[k]
            mono = ring.monomial_str(m, inverse=True)
            body = mono if c == field.one and mono != "1" else (
                field.coeff_str(c) if mono == "1" else f"{field.coeff_str(c)}*{mono}"
            )
            if not rank1:
                body = f"e{j}" if body == "1" else f"e{j}*{body}"
            chunks.append(body)
        out = chunks[0]
        for ch in chunks[1:]:
            out += f" - {ch[1:]}" if ch.startswith("-") else f" + {ch}"
        return out

    def __repr__(self):
        return f"<dual {self}>"


def contract(psi: Polynomial, f: InverseElement) -> InverseElement:
    """Contraction action of a polynomial on a dual element.

    A monomial L sends 1/M to 1/(M/L) when L divides M and to 0 otherwise;
    the action extends bilinearly and componentwise.
    """
    if psi.ring != f.ring:
        raise ValueError("ring mismatch")
    field = psi.ring.field
    out = {}
    for lm, c in psi.terms.items():
        for (j, m), d in f.terms.items():
            if all(a <= b for a, b in zip(lm, m)):
                key = (j, tuple(b - a for a, b in zip(lm, m)))
                v = field.mul(c, d)
                out[key] = field.add(out[key], v) if key in out else v
    return InverseElement(f.ring, out, f.shifts)


def _contract_step(ring: GradedRing, shifts: tuple, n: int, i: int, vec):
    """Contract a degree-n dual coordinate vector by variable i."""
    field = ring.field
    tgt = n + ring.weights[i]
    pos = _dual_positions(ring.weights, shifts, tgt)
    out = [field.zero] * len(pos)
    for (j, m), c in zip(_dual_basis(ring.weights, shifts, n), vec):
        if c != 0 and m[i] >= 1:
            key = (j, tuple(e - 1 if k == i else e for k, e in enumerate(m)))
            t = pos[key]
            out[t] = field.add(out[t], c)
    return tuple(out)


class InverseSystem:
    """A graded, contraction-closed submodule of the (shifted) dual.

    ``pieces`` maps each degree n to a canonical Subspace of the dual's
    degree-n piece; degrees outside the stored range are zero.
    """

    __slots__ = ("ring", "shifts", "pieces")

    def __init__(self, ring: GradedRing, pieces: dict, shifts=(0,)):
        self.ring = ring
        self.shifts = tuple(shifts)
        self.pieces = {n: s for n, s in sorted(pieces.items())}

    def piece(self, n: int) -> Subspace:
        got = self.pieces.get(n)
        if got is not None:
            return got
        return Subspace.zero(self.ring.field, dual_dim(self.ring, self.shifts, n))

    def dims(self) -> dict:
        return {n: s.dim for n, s in self.pieces.items() if s.dim}

    def support(self) -> tuple:
        return tuple(sorted(n for n, s in self.pieces.items() if s.dim))

    def total_dim(self) -> int:
        return sum(s.dim for s in self.pieces.values())

    def socle_degree(self) -> int:
        """Largest q with a nonzero piece in degree -q."""
        supp = self.support()
        if not supp:
            raise MathDomainError("zero module")
        return -supp[0]

    def is_contraction_closed(self) -> bool:
        for n, s in self.pieces.items():
            for i in range(self.ring.nvars):
                for row in s.rows:
                    moved = _contract_step(self.ring, self.shifts, n, i, row)
                    if any(c != 0 for c in moved) and not self.piece(
                        n + self.ring.weights[i]
                    ).contains(moved):
                        return False
        return True

    def elements(self, n: int):
        """Basis of the degree-n piece as InverseElements."""
        return [
            InverseElement.from_vector(self.ring, n, row, self.shifts)
            for row in self.piece(n).rows
        ]

    def __eq__(self, other):
        if not isinstance(other, InverseSystem):
            return NotImplemented
        if self.ring != other.ring or self.shifts != other.shifts:
            return False
        degs = set(self.pieces) | set(other.pieces)
        return all(self.piece(n) == other.piece(n) for n in degs)

    def __repr__(self):
        return f"<InverseSystem dims {self.dims()}>"


def generated_submodule(gens, lo: int | None = None) -> InverseSystem:
    """The A-submodule of the dual generated by homogeneous dual elements.

    Computed degreewise from the most negative degree up: each piece is the
    span of the matching generator components plus single-variable
    contractions of the piece one weight below.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise MathDomainError("no nonzero generators")
    ring, shifts = gens[0].ring, gens[0].shifts
    for g in gens:
        if g.ring != ring or g.shifts != shifts:
            raise ValueError("generators live in different ambients")
        if not g.is_homogeneous():
            raise MathDomainError(
                "generators must be homogeneous; use filtered_dual for the rest"
            )
    bottom = min(g.degree() for g in gens)
    if lo is None:
        lo = bottom
    if lo > bottom:
        raise BoundExceededError(f"range must reach the bottom generator degree {bottom}")
    top = max(shifts)
    by_degree = {}
    for g in gens:
        by_degree.setdefault(g.degree(), []).append(g.coefficient_vector(g.degree()))
    pieces = {}
    for n in range(lo, top + 1):
        rows = list(by_degree.get(n, []))
        for i in range(ring.nvars):
            w = ring.weights[i]
            below = pieces.get(n - w)
            if below is not None and below.dim:
                rows.extend(
                    _contract_step(ring, shifts, n - w, i, r) for r in below.rows
                )
        pieces[n] = echelon(ring.field, rows, dual_dim(ring, shifts, n))
    return InverseSystem(ring, pieces, shifts)


def catalecticant_matrix(f: InverseElement, p: int):
    """Matrix of multiplication by a homogeneous dual element f of degree -s,
    as a map from the degree-(p+s) piece of A to the degree-p piece of the
    dual.  Entry (u, v) is the coefficient of f on 1/(M_u * L_v).
    """
    if len(f.shifts) != 1:
        raise MathDomainError("catalecticants are for rank-one duals")
    s = -f.degree()
    ring = f.ring
    field = ring.field
    rows_basis = ring.monomials(-p)
    cols_basis = ring.monomials(p + s)
    mat = []
    for mu in rows_basis:
        row = []
        for lv in cols_basis:
            key = (0, tuple(a + b for a, b in zip(mu, lv)))
            row.append(f.terms.get(key, field.zero))
        mat.append(tuple(row))
    return tuple(mat)


class GradedIdeal:
    """A homogeneous ideal of A given degreewise within a truncation bound.

    ``saturated_from`` is the start of the verified full tail (I_d = A_d for
    saturated_from <= d < bound), or None when the bound never saturates.
    The tail certifies an Artinian quotient only when it is at least one
    full weight-span long; ``artinian_certified`` checks that.
    """

    __slots__ = ("ring", "bound", "pieces", "saturated_from", "gens")

    def __init__(self, ring: GradedRing, bound: int, pieces: dict, gens=None):
        self.ring = ring
        self.bound = bound
        self.pieces = {d: pieces[d] for d in range(bound) if d in pieces}
        for d in range(bound):
            if d not in self.pieces:
                self.pieces[d] = Subspace.zero(ring.field, ring.dim(d))
        start = bound
        for d in range(bound - 1, -1, -1):
            if self.pieces[d].dim == ring.dim(d):
                start = d
            else:
                break
        self.saturated_from = start if start < bound else None
        self.gens = list(gens) if gens else None

    @classmethod
    def from_generators(cls, ring: GradedRing, gens, bound: int) -> "GradedIdeal":
        gens = [g for g in gens if not g.is_zero()]
        for g in gens:
            if not g.is_homogeneous():
                raise MathDomainError(
                    "generators must be homogeneous; use FilteredIdeal for the rest"
                )
        by_degree = {}
        for g in gens:
            d = g.degree()
            if d < bound:
                by_degree.setdefault(d, []).append(g.coefficient_vector(d))
        pieces = {}
        for d in range(bound):
            rows = list(by_degree.get(d, []))
            for i in range(ring.nvars):
                w = ring.weights[i]
                if d - w >= 0:
                    below = pieces[d - w]
                    steps = _var_lift(ring, i, d - w)
                    for r in below.rows:
                        rows.append(_lift_row(ring.field, r, steps, ring.dim(d)))
            pieces[d] = echelon(ring.field, rows, ring.dim(d))
        return cls(ring, bound, pieces, gens=gens)

    def piece(self, d: int) -> Subspace:
        if d < 0:
            return Subspace.zero(self.ring.field, 0)
        if d >= self.bound:
            raise BoundExceededError(f"degree {d} beyond truncation bound {self.bound}")
        return self.pieces[d]

    @property
    def artinian_certified(self) -> bool:
        return (
            self.saturated_from is not None
            and self.bound - self.saturated_from >= max(self.ring.weights)
        )

    def quotient_dim(self, d: int) -> int:
        if d < 0:
            return 0
        if d >= self.bound:
            if self.artinian_certified:
                return 0
            raise BoundExceededError(f"degree {d} beyond truncation bound {self.bound}")
        return self.ring.dim(d) - self.pieces[d].dim

    def contains(self, f: Polynomial) -> bool:
        return all(
            self.piece(d).contains(part.coefficient_vector(d))
            for d, part in f.homogeneous_components().items()
        )

    def is_multiplication_closed(self) -> bool:
        for d in range(self.bound):
            for i in range(self.ring.nvars):
                w = self.ring.weights[i]
                if d + w >= self.bound:
                    continue
                steps = _var_lift(self.ring, i, d)
                for r in self.pieces[d].rows:
                    lifted = _lift_row(self.ring.field, r, steps, self.ring.dim(d + w))
                    if not self.pieces[d + w].contains(lifted):
                        return False
        return True

    def __eq__(self, other):
        if not isinstance(other, GradedIdeal):
            return NotImplemented
        common = min(self.bound, other.bound)
        return (
            self.ring == other.ring
            and all(self.pieces[d] == other.pieces[d] for d in range(common))
        )

    def __repr__(self):
        dims = {d: s.dim for d, s in self.pieces.items()}
        return f"<GradedIdeal dims {dims} bound {self.bound}>"


@functools.lru_cache(maxsize=None)
def _var_lift_cached(weights: tuple, i: int, d: int) -> tuple:
    from .rings import _monomial_positions, _monomials_by_degree

    pos = _monomial_positions(weights, d + weights[i])
    return tuple(
        pos[tuple(e + 1 if k == i else e for k, e in enumerate(m))]
        for m in _monomials_by_degree(weights, d)
    )


def _var_lift(ring: GradedRing, i: int, d: int) -> tuple:
    return _var_lift_cached(ring.weights, i, d)


def _lift_row(field, row, steps, target_dim):
    out = [field.zero] * target_dim
    for c, t in zip(row, steps):
        if c != 0:
            out[t] = field.add(out[t], c)
    return tuple(out)


def apolar_annihilator(ideal: GradedIdeal) -> InverseSystem:
    """The inverse system (0 : I) in the dual: degreewise the perp of I_p."""
    if not ideal.artinian_certified:
        raise BoundExceededError(
            "quotient not Artinian within the truncation bound; raise the bound"
        )
    pieces = {}
    for p in range(ideal.bound):
        pieces[-p] = ideal.pieces[p].perp()
    return InverseSystem(ideal.ring, pieces)


def annihilator_of_submodule(D: InverseSystem, bound: int | None = None) -> GradedIdeal:
    """The ideal (0 : D) of everything annihilating a graded dual submodule.

    Degreewise a stacked kernel: psi of degree p must contract every basis
    element of every piece of D to zero.
    """
    if len(D.shifts) != 1:
        raise MathDomainError("annihilator ideals are computed in rank one")
    ring = D.ring
    field = ring.field
    supp = D.support()
    if bound is None:
        bound = (-min(supp) if supp else 0) + 2
    pieces = {}
    for p in range(bound):
        ncols = ring.dim(p)
        rows = []
        mons_p = ring.monomials(p)
        for n in supp:
            q = -n
            if q < p:
                continue
            # row block: for each basis f of D_n, the matrix of psi -> psi . f
            for f in D.elements(n):
                tgt = _dual_positions(ring.weights, D.shifts, n + p)
                block = [[field.zero] * ncols for _ in range(len(tgt))]
                for v, lm in enumerate(mons_p):
                    moved = contract(Polynomial.monomial(ring, lm), f)
                    for key, c in moved.terms.items():
                        block[tgt[key]][v] = c
                rows.extend(block)
        pieces[p] = kernel(field, rows, ncols) if rows else Subspace.full(field, ncols)
    return GradedIdeal(ring, bound, pieces)


# ---------------------------------------------------------------------------
# Filtered (non-homogeneous) duality inside a truncation.


class FilteredIdeal:
    """An ideal of the truncated algebra, one subspace of the total space,
    closed under multiplication by every variable mod the bound."""

    __slots__ = ("algebra", "space", "gens")

    def __init__(self, algebra: TruncatedAlgebra, space: Subspace, gens=None):
        self.algebra = algebra
        self.space = space
        self.gens = list(gens) if gens else None

    @classmethod
    def from_generators(cls, algebra: TruncatedAlgebra, gens) -> "FilteredIdeal":
        rows = [algebra.vector_of(g) for g in gens if not g.is_zero()]
        space = echelon(algebra.ring.field, rows, algebra.total_dim)
        while True:
            new_rows = list(space.rows)
            for i in range(algebra.ring.nvars):
                new_rows.extend(algebra.multiply_by_var(i, r) for r in space.rows)
            grown = echelon(algebra.ring.field, new_rows, algebra.total_dim)
            if grown.dim == space.dim:
                return cls(algebra, grown, gens=gens)
            space = grown

    def quotient_total_dim(self) -> int:
        return self.algebra.total_dim - self.space.dim

    def is_multiplication_closed(self) -> bool:
        return all(
            self.space.contains(self.algebra.multiply_by_var(i, r))
            for i in range(self.algebra.ring.nvars)
            for r in self.space.rows
        )

    def contains(self, f: Polynomial) -> bool:
        return self.space.contains(self.algebra.vector_of(f))


class FilteredDual:
    """A submodule of the dual of a truncated algebra: a subspace of the
    total dual space (blocks indexed by |degree|), plus its generators."""

    __slots__ = ("algebra", "space", "gens")

    def __init__(self, algebra: TruncatedAlgebra, space: Subspace, gens=None):
        self.algebra = algebra
        self.space = space
        self.gens = list(gens) if gens else None

    def total_dim(self) -> int:
        return self.space.dim


def dual_vector_of(algebra: TruncatedAlgebra, f: InverseElement):
    """Total-dual-space vector of an element with support above -bound."""
    if len(f.shifts) != 1:
        raise MathDomainError("filtered duals are rank one")
    ring = algebra.ring
    out = [ring.field.zero] * algebra.total_dim
    for (j, m), c in f.terms.items():
        q = ring.wdeg(m)
        if q >= algebra.bound:
            raise BoundExceededError(f"dual degree {-q} below truncation window")
        out[algebra.offsets[q] + ring.monomial_index(q, m)] = c
    return tuple(out)


def dual_element_of(algebra: TruncatedAlgebra, vec) -> InverseElement:
    ring = algebra.ring
    terms = {}
    for q in range(algebra.bound):
        base = algebra.offsets[q]
        for j, m in enumerate(ring.monomials(q)):
            c = vec[base + j]
            if c != 0:
                terms[m] = c
    return InverseElement(ring, terms)


def filtered_dual(F: InverseElement, bound: int | None = None):
    """The cyclic filtered dual module A.F and its annihilator ideal.

    Returns (D, I) where D spans all contractions of F in the truncated
    dual and I = {psi : psi . F = 0} inside the truncated algebra.
    """
    if F.is_zero():
        raise MathDomainError("zero dual generator")
    if bound is None:
        bound = max(-n for n in F.support_degrees()) + 2
    ring = F.ring
    field = ring.field
    algebra = truncate_algebra(ring, bound)
    columns = []
    rows = []
    for d in range(bound):
        for lm in ring.monomials(d):
            moved = contract(Polynomial.monomial(ring, lm), F)
            vec = dual_vector_of(algebra, moved)
            columns.append(vec)
            rows.append(vec)
    # columns of psi -> psi.F, indexed by the monomial basis of the algebra
    matrix = list(zip(*columns)) if columns else []
    ideal_space = kernel(field, matrix, algebra.total_dim)
    D = FilteredDual(algebra, echelon(field, rows, algebra.total_dim), gens=[F])
    return D, FilteredIdeal(algebra, ideal_space, gens=None)


def _block_support_space(algebra: TruncatedAlgebra, blocks) -> Subspace:
    field = algebra.ring.field
    rows = []
    for d in blocks:
        base = algebra.offsets[d]
        for j in range(algebra.dims[d]):
            v = [field.zero] * algebra.total_dim
            v[base + j] = field.one
            rows.append(v)
    return echelon(field, rows, algebra.total_dim)


def associated_graded_ideal(ideal: FilteredIdeal) -> GradedIdeal:
    """Degreewise spans of initial forms (lowest-degree parts) of the ideal."""
    algebra = ideal.algebra
    ring = algebra.ring
    pieces = {}
    for d in range(algebra.bound):
        high = _block_support_space(algebra, range(d, algebra.bound))
        cut = ideal.space.intersect(high)
        rows = [algebra.component(r, d) for r in cut.rows]
        pieces[d] = echelon(ring.field, rows, ring.dim(d))
    return GradedIdeal(ring, algebra.bound, pieces)


def associated_graded_submodule(D: FilteredDual) -> InverseSystem:
    """Degreewise spans of initial forms of a filtered dual submodule.

    On the dual side the filtration runs toward more negative degrees, so
    the initial form of an element is its most negative homogeneous part.
    """
    algebra = D.algebra
    ring = algebra.ring
    pieces = {}
    for q in range(algebra.bound):
        low = _block_support_space(algebra, range(q + 1))
        cut = D.space.intersect(low)
        rows = [algebra.component(r, q) for r in cut.rows]
        pieces[-q] = echelon(ring.field, rows, ring.dim(q))
    return InverseSystem(ring, pieces)


# ---------------------------------------------------------------------------
# Quotient structure and equivariant Hom.


class QuotientRing:
    """C = A/I with canonical coordinates: in each degree, the monomials at
    the non-pivot columns of I's echelon basis represent a basis of C."""

    __slots__ = ("ideal", "ring", "bound", "_mats")

    def __init__(self, ideal: GradedIdeal):
        self.ideal = ideal
        self.ring = ideal.ring
        self.bound = ideal.bound
        self._mats = {}

    def dim(self, d: int) -> int:
        return self.ideal.quotient_dim(d)

    def basis_positions(self, d: int) -> tuple:
        return self.ideal.piece(d).nonpivots()

    def reduce(self, d: int, vec) -> tuple:
        """Quotient coordinates of an ambient degree-d coefficient vector."""
        red = self.ideal.piece(d).reduce(vec)
        return tuple(red[c] for c in self.basis_positions(d))

    def var_matrix(self, i: int, d: int):
        """Matrix of multiplication by variable i from C_d to C_{d+w_i}."""
        key = (i, d)
        if key not in self._mats:
            ring = self.ring
            field = ring.field
            w = ring.weights[i]
            tgt_dim = self.dim(d + w)
            cols = []
            steps = _var_lift(ring, i, d) if d + w < self.bound else None
            for c in self.basis_positions(d):
                if d + w >= self.bound:
                    cols.append((field.zero,) * tgt_dim)
                    continue
                amb = [field.zero] * ring.dim(d + w)
                amb[steps[c]] = field.one
                cols.append(self.reduce(d + w, amb))
            self._mats[key] = tuple(zip(*cols)) if cols else tuple(() for _ in range(tgt_dim))
        return self._mats[key]

    def mult_matrix(self, f: Polynomial, d: int):
        """Matrix of multiplication by a homogeneous f from C_d to C_{d+deg f}."""
        e = f.degree()
        ring = self.ring
        field = ring.field
        if d + e >= self.bound and self.dim(d + e):
            raise BoundExceededError("target degree beyond the truncation bound")
        tgt_dim = self.dim(d + e)
        cols = []
        for c in self.basis_positions(d):
            if tgt_dim == 0:
                cols.append(())
                continue
            m = ring.monomials(d)[c]
            prod = f * Polynomial.monomial(ring, m)
            cols.append(self.reduce(d + e, prod.coefficient_vector(d + e)))
        return tuple(zip(*cols)) if cols and tgt_dim else tuple(() for _ in range(tgt_dim))

    def top_degree(self) -> int:
        tops = [d for d in range(self.bound) if self.dim(d)]
        if not tops:
            raise MathDomainError("zero quotient")
        return max(tops)


def hom_into_dual_dims(ideal: GradedIdeal, p: int) -> int:
    """dim of the degree-p equivariant maps from C = A/I into the dual of A.

    Solved directly as a linear system in the graded components of the map;
    must agree with the dimension of the apolar annihilator in degree p.
    """
    C = QuotientRing(ideal)
    ring = ideal.ring
    field = ring.field
    degs = [d for d in range(ideal.bound) if C.dim(d)]
    if not ideal.artinian_certified:
        raise BoundExceededError("quotient not Artinian within bound")

    def dual_d(e: int) -> int:
        return ring.dim(-e)

    offsets = {}
    total = 0
    for d in degs:
        offsets[d] = total
        total += C.dim(d) * dual_d(d + p)
    if total == 0:
        return 0
    rows = []
    for d in degs:
        for i in range(ring.nvars):
            w = ring.weights[i]
            tgt = dual_d(d + w + p)
            if tgt == 0:
                continue
            M = C.var_matrix(i, d)  # C_d -> C_{d+w}
            src_pos = _dual_positions(ring.weights, (0,), d + p)
            dual_basis_src = _dual_basis(ring.weights, (0,), d + p)
            tgt_pos = _dual_positions(ring.weights, (0,), d + w + p)
            for a in range(C.dim(d)):
                for t in range(tgt):
                    row = [field.zero] * total
                    # phi(x_i c_a) side
                    if d + w in offsets:
                        for a2 in range(C.dim(d + w)):
                            coef = M[a2][a]
                            if coef != 0:
                                row[offsets[d + w] + a2 * tgt + t] = coef
                    # minus x_i . phi(c_a) side
                    for b, (j, m) in enumerate(dual_basis_src):
                        if m[i] >= 1:
                            key = (j, tuple(e - 1 if k == i else e for k, e in enumerate(m)))
                            if tgt_pos[key] == t:
                                idx = offsets[d] + a * len(dual_basis_src) + b
                                row[idx] = field.sub(row[idx], field.one)
                    if any(c != 0 for c in row):
                        rows.append(row)
    if not rows:
        return total
    return kernel(field, rows, total).dim


def dual_minimal_generators(D: InverseSystem):
    """A deterministic minimal homogeneous generating set of a dual submodule."""
    ring = D.ring
    field = ring.field
    gens = []
    for n in sorted(D.pieces):
        s = D.piece(n)
        if not s.dim:
            continue
        rows = []
        for i in range(ring.nvars):
            w = ring.weights[i]
            below = D.piece(n - w)
            rows.extend(_contract_step(ring, D.shifts, n - w, i, r) for r in below.rows)
        covered = echelon(field, rows, dual_dim(ring, D.shifts, n))
        for row in s.rows:
            if not covered.contains(row):
                gens.append(InverseElement.from_vector(ring, n, row, D.shifts))
                covered = covered + echelon(field, [row], covered.ncols)
    return gens
