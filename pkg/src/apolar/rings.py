"""Weighted graded polynomial rings and exact linear algebra.

The ring is k[X_1, ..., X_r] where the variable X_i carries a positive
integer weight w_i, so the degree-d piece A_d is spanned by the monomials
of weighted degree d.  Within one degree, monomials are ordered
lexicographically on exponent vectors, largest first; that order fixes the
column indexing of every matrix produced here and makes all downstream
computations reproducible bit for bit.

Coefficients live in an exact field: the rationals (``fractions.Fraction``)
or a prime field GF(p) (plain ints reduced mod p).  Subspaces of a graded
piece are stored in reduced row-echelon form, so two subspaces are equal
exactly when their stored matrices are identical.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


class MathDomainError(Exception):
    """A computation left its mathematical domain.

    Raised for non-Artinian quotients, non-Gorenstein ambients where one is
    required, zero polynomials asked for a degree, and similar.
    """


class BoundExceededError(MathDomainError):
    """A truncation bound was too small to certify the requested answer."""


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % q for q in range(2, isqrt(n) + 1))


class Field:
    """The rationals (``p is None``) or the prime field GF(p).

    Elements are ``Fraction`` instances over the rationals and plain ints in
    ``range(p)`` over GF(p).  All arithmetic is routed through the field
    object, so callers never branch on the coefficient domain.
    """

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None and not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def char(self) -> int:
        return 0 if self.p is None else self.p

    def of(self, x):
        """Coerce an int, Fraction, or string like ``"2/3"`` into the field."""
        if self.p is None:
            return Fraction(x)
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.p, x.denominator % self.p)
        return int(x) % self.p

    @property
    def zero(self):
        return _QZERO if self.p is None else 0

    @property
    def one(self):
        return _QONE if self.p is None else 1

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if self.p is None:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / Fraction(a)
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0

    def coeff_str(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


_QZERO = Fraction(0)
_QONE = Fraction(1)

#: The field of rational numbers.
QQ = Field()


def GF(p: int) -> Field:
    """The prime field with p elements."""
    return Field(p)


# ---------------------------------------------------------------------------
# Monomials.  A monomial is a plain tuple of nonnegative exponents; all the
# per-degree bookkeeping is memoized on (weights, degree).

Monomial = tuple  # exponent vectors; weighted degree = sum(w_i * e_i)


@functools.lru_cache(maxsize=None)
def _monomials_by_degree(weights: tuple, d: int) -> tuple:
    """All monomials of weighted degree d, lex-largest exponent vector first."""
    if d < 0:
        return ()
    out = []
    r = len(weights)

    def rec(i: int, rem: int, acc: tuple) -> None:
        if i == r - 1:
            e, leftover = divmod(rem, weights[i])
            if leftover == 0:
                out.append(acc + (e,))
            return
        w = weights[i]
        for e in range(rem // w, -1, -1):
            rec(i + 1, rem - e * w, acc + (e,))

    rec(0, d, ())
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _monomial_positions(weights: tuple, d: int) -> dict:
    return {m: i for i, m in enumerate(_monomials_by_degree(weights, d))}


@dataclass(frozen=True)
class GradedRing:
    """k[X_1..X_r] with positive integer weights on the variables."""

    var_names: tuple
    weights: tuple
    field: Field

    def __post_init__(self):
        object.__setattr__(self, "var_names", tuple(self.var_names))
        object.__setattr__(self, "weights", tuple(self.weights))
        if len(self.var_names) != len(self.weights):
            raise ValueError("one weight per variable required")
        if not self.var_names:
            raise ValueError("at least one variable required")
        if len(set(self.var_names)) != len(self.var_names):
            raise ValueError("variable names must be pairwise distinct")
        if any(not isinstance(w, int) or w < 1 for w in self.weights):
            raise ValueError("weights must be positive integers")

    @classmethod
    def standard(cls, field: Field, names) -> "GradedRing":
        """Standard grading (all weights 1); ``names`` is a list or a count."""
        if isinstance(names, int):
            names = tuple(f"x{i + 1}" for i in range(names))
        names = tuple(names)
        return cls(names, (1,) * len(names), field)

    @property
    def nvars(self) -> int:
        return len(self.var_names)

    def wdeg(self, expts) -> int:
        return sum(w * e for w, e in zip(self.weights, expts))

    def monomials(self, d: int) -> tuple:
        return _monomials_by_degree(self.weights, d)

    def dim(self, d: int) -> int:
        return len(_monomials_by_degree(self.weights, d))

    def monomial_index(self, d: int, expts) -> int:
        return _monomial_positions(self.weights, d)[tuple(expts)]

    def monomial_str(self, expts, inverse: bool = False) -> str:
        parts = []
        for name, e in zip(self.var_names, expts):
            if e == 0:
                continue
            shown = -e if inverse else e
            parts.append(name if shown == 1 else f"{name}^{shown}")
        return "*".join(parts) if parts else "1"

    def variable(self, i: int) -> "Polynomial":
        expts = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {expts: self.field.one})

    def __repr__(self):
        ws = "" if all(w == 1 for w in self.weights) else f" weights={self.weights}"
        return f"{self.field}[{','.join(self.var_names)}]{ws}"


def monomials_of_degree(ring: GradedRing, d: int) -> tuple:
    """The canonical ordered monomial basis of the degree-d piece."""
    return ring.monomials(d)


def graded_dim(ring: GradedRing, d: int) -> int:
    """dim of the degree-d graded piece."""
    return ring.dim(d)


class Polynomial:
    """A polynomial with exact coefficients; zero coefficients are not stored."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: GradedRing, terms=()):
        field = ring.field
        data = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for m, c in items:
            m = tuple(m)
            if len(m) != ring.nvars or any(e < 0 for e in m):
                raise ValueError(f"bad exponent vector {m}")
            c = field.of(c)
            if m in data:
                c = field.add(data[m], c)
            if field.is_zero(c):
                data.pop(m, None)
            else:
                data[m] = c
        self.ring = ring
        self.terms = data

    @classmethod
    def zero(cls, ring: GradedRing) -> "Polynomial":
        return cls(ring, {})

    @classmethod
    def one(cls, ring: GradedRing) -> "Polynomial":
        return cls(ring, {(0,) * ring.nvars: ring.field.one})

    @classmethod
    def monomial(cls, ring: GradedRing, expts, coeff=1) -> "Polynomial":
        return cls(ring, {tuple(expts): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        degs = {self.ring.wdeg(m) for m in self.terms}
        return len(degs) <= 1

    def degree(self) -> int:
        """Weighted degree of a nonzero homogeneous polynomial."""
        degs = {self.ring.wdeg(m) for m in self.terms}
        if not degs:
            raise MathDomainError("the zero polynomial has no degree")
        if len(degs) > 1:
            raise MathDomainError("polynomial is not homogeneous")
        return degs.pop()

    def homogeneous_components(self) -> dict:
        parts = {}
        for m, c in self.terms.items():
            parts.setdefault(self.ring.wdeg(m), {})[m] = c
        return {d: Polynomial(self.ring, t) for d, t in sorted(parts.items())}

    def coefficient_vector(self, d: int) -> tuple:
        """Coefficients on the canonical basis of the degree-d piece."""
        field = self.ring.field
        vec = [field.zero] * self.ring.dim(d)
        for m, c in self.terms.items():
            if self.ring.wdeg(m) != d:
                raise MathDomainError(f"term of degree {self.ring.wdeg(m)} in degree-{d} vector")
            vec[self.ring.monomial_index(d, m)] = c
        return tuple(vec)

    @classmethod
    def from_vector(cls, ring: GradedRing, d: int, vec) -> "Polynomial":
        mons = ring.monomials(d)
        return cls(ring, {m: c for m, c in zip(mons, vec)})

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        merged = dict(self.terms)
        return Polynomial(self.ring, list(merged.items()) + list(other.terms.items()))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, {m: f.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other):
        f = self.ring.field
        if isinstance(other, Polynomial):
            out = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = tuple(a + b for a, b in zip(m1, m2))
                    c = f.mul(c1, c2)
                    out[m] = f.add(out[m], c) if m in out else c
            return Polynomial(self.ring, out)
        c0 = f.of(other)
        return Polynomial(self.ring, {m: f.mul(c, c0) for m, c in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = Polynomial.one(self.ring)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def _sorted_terms(self):
        ring = self.ring
        return sorted(
            self.terms.items(),
            key=lambda mc: (ring.wdeg(mc[0]), ring.monomial_index(ring.wdeg(mc[0]), mc[0])),
        )

    def __str__(self):
        if not self.terms:
            return "0"
        ring, field = self.ring, self.ring.field
        chunks = []
        for m, c in self._sorted_terms():
            mono = ring.monomial_str(m)
            if mono == "1":
                body = field.coeff_str(c)
            elif c == field.one:
                body = mono
            elif field.p is None and c == -field.one:
                body = f"-{mono}"
            else:
                body = f"{field.coeff_str(c)}*{mono}"
            chunks.append(body)
        out = chunks[0]
        for ch in chunks[1:]:
            out += f" - {ch[1:]}" if ch.startswith("-") else f" + {ch}"
        return out

    def __repr__(self):
        return f"<{self}>"


# ---------------------------------------------------------------------------
# Exact matrices and canonical subspaces.  Matrices are tuples/lists of rows.


def rref(field: Field, rows, ncols: int):
    """Reduced row echelon form.  Returns (rows, pivot_columns) as tuples."""
    p = field.p
    mat = [list(r) for r in rows if any(x != 0 for x in r)]
    pivots = []
    row = 0
    if p is not None:
        for col in range(ncols):
            sel = next((i for i in range(row, len(mat)) if mat[i][col] % p), None)
            if sel is None:
                continue
            mat[row], mat[sel] = mat[sel], mat[row]
            inv = pow(mat[row][col], -1, p)
            mat[row] = [x * inv % p for x in mat[row]]
            prow = mat[row]
            for i in range(len(mat)):
                f = mat[i][col]
                if i != row and f:
                    mat[i] = [(x - f * y) % p for x, y in zip(mat[i], prow)]
            pivots.append(col)
            row += 1
            if row == len(mat):
                break
    else:
        for col in range(ncols):
            sel = next((i for i in range(row, len(mat)) if mat[i][col] != 0), None)
            if sel is None:
                continue
            mat[row], mat[sel] = mat[sel], mat[row]
            inv = 1 / Fraction(mat[row][col])
            mat[row] = [x * inv for x in mat[row]]
            prow = mat[row]
            for i in range(len(mat)):
                f = mat[i][col]
                if i != row and f:
                    mat[i] = [x - f * y for x, y in zip(mat[i], prow)]
            pivots.append(col)
            row += 1
            if row == len(mat):
                break
    mat = [r for r in mat if any(x != 0 for x in r)]
    return tuple(tuple(r) for r in mat), tuple(pivots)


class Subspace:
    """A subspace of k^n held in canonical reduced row-echelon form."""

    __slots__ = ("field", "ncols", "rows", "pivots")

    def __init__(self, field: Field, ncols: int, rows=(), *, _canonical=None):
        self.field = field
        self.ncols = ncols
        if _canonical is not None:
            self.rows, self.pivots = _canonical
        else:
            self.rows, self.pivots = rref(field, rows, ncols)

    @classmethod
    def zero(cls, field: Field, ncols: int) -> "Subspace":
        return cls(field, ncols, _canonical=((), ()))

    @classmethod
    def full(cls, field: Field, ncols: int) -> "Subspace":
        eye = tuple(
            tuple(field.one if i == j else field.zero for j in range(ncols))
            for i in range(ncols)
        )
        return cls(field, ncols, _canonical=(eye, tuple(range(ncols))))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec):
        """Subtract the projection onto this subspace's pivot structure."""
        field = self.field
        v = list(vec)
        for row, pc in zip(self.rows, self.pivots):
            f = v[pc]
            if not field.is_zero(f):
                nf = field.neg(f)
                v = [field.add(x, field.mul(nf, y)) for x, y in zip(v, row)]
        return tuple(v)

    def contains(self, vec) -> bool:
        return all(x == 0 for x in self.reduce(vec))

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def nonpivots(self) -> tuple:
        pset = set(self.pivots)
        return tuple(c for c in range(self.ncols) if c not in pset)

    def __add__(self, other: "Subspace") -> "Subspace":
        if other.ncols != self.ncols:
            raise ValueError("ambient dimension mismatch")
        return Subspace(self.field, self.ncols, self.rows + other.rows)

    def perp(self, gram=None) -> "Subspace":
        """Vectors orthogonal to this space; ``gram`` defaults to the identity."""
        rows = self.rows
        if gram is not None:
            rows = mat_mul(self.field, rows, gram)
        return kernel(self.field, rows, self.ncols)

    def intersect(self, other: "Subspace") -> "Subspace":
        if other.ncols != self.ncols:
            raise ValueError("ambient dimension mismatch")
        return (self.perp() + other.perp()).perp()

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self):
        return f"<Subspace dim {self.dim} of k^{self.ncols}>"


def echelon(field: Field, rows, ncols: int) -> Subspace:
    """Canonical row space of the given spanning rows."""
    return Subspace(field, ncols, rows)


def kernel(field: Field, matrix, ncols: int) -> Subspace:
    """Kernel of the linear map k^ncols -> k^m given by an m x ncols matrix."""
    rows, piv = rref(field, matrix, ncols)
    pset = set(piv)
    basis = []
    for free in range(ncols):
        if free in pset:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for k, pc in enumerate(piv):
            v[pc] = field.neg(rows[k][free])
        basis.append(v)
    return Subspace(field, ncols, basis)


def mat_mul(field: Field, a, b):
    """Matrix product over the field (rows x rows layout)."""
    if not a:
        return ()
    if not b:
        return tuple(() for _ in a)
    cols = list(zip(*b))
    out = []
    for arow in a:
        row = []
        for bcol in cols:
            acc = field.zero
            for x, y in zip(arow, bcol):
                if x != 0 and y != 0:
                    acc = field.add(acc, field.mul(x, y))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_vec(field: Field, a, v):
    out = []
    for row in a:
        acc = field.zero
        for x, y in zip(row, v):
            if x != 0 and y != 0:
                acc = field.add(acc, field.mul(x, y))
        out.append(acc)
    return tuple(out)


def zero_matrix(field: Field, nrows: int, ncols: int):
    return tuple(tuple(field.zero for _ in range(ncols)) for _ in range(nrows))


def transpose(a):
    return tuple(zip(*a)) if a else ()


def matrix_rank(field: Field, rows, ncols: int) -> int:
    return len(rref(field, rows, ncols)[0])


def mult_matrix(ring: GradedRing, f: Polynomial, d: int, e: int | None = None):
    """Matrix of multiplication by f from the degree-d piece to degree d+e.

    ``e`` defaults to the degree of f, which must then be homogeneous and
    nonzero; passing ``e`` explicitly shapes the zero map.
    """
    if e is None:
        e = f.degree()
    elif not f.is_zero() and f.degree() != e:
        raise MathDomainError("polynomial degree does not match the requested shift")
    field = ring.field
    src = ring.monomials(d)
    nrows = ring.dim(d + e)
    mat = [[field.zero] * len(src) for _ in range(nrows)]
    for j, m in enumerate(src):
        for lm, c in f.terms.items():
            target = tuple(a + b for a, b in zip(lm, m))
            i = ring.monomial_index(d + e, target)
            mat[i][j] = field.add(mat[i][j], c)
    return tuple(tuple(r) for r in mat)


class TruncatedAlgebra:
    """The truncation A/F^N: graded pieces of degree < N with their structure.

    The total space is the direct sum of the pieces, indexed degree-major in
    the canonical monomial order; ``var_step`` records where multiplication
    by each variable sends each basis monomial (or None past the bound).
    """

    __slots__ = ("ring", "bound", "dims", "offsets", "total_dim", "_steps")

    def __init__(self, ring: GradedRing, bound: int):
        if bound < 1:
            raise ValueError("bound must be at least 1")
        self.ring = ring
        self.bound = bound
        self.dims = tuple(ring.dim(d) for d in range(bound))
        offsets = []
        acc = 0
        for d in range(bound):
            offsets.append(acc)
            acc += self.dims[d]
        self.offsets = tuple(offsets)
        self.total_dim = acc
        self._steps = {}

    def index(self, d: int, j: int) -> int:
        return self.offsets[d] + j

    def degrees(self):
        return range(self.bound)

    def var_step(self, i: int, d: int):
        """For each basis monomial of degree d, its slot after multiplying by
        variable i: the index within degree d + w_i, or None past the bound."""
        key = (i, d)
        if key not in self._steps:
            ring = self.ring
            e = ring.weights[i]
            if d + e >= self.bound:
                step = tuple(None for _ in ring.monomials(d))
            else:
                step = tuple(
                    ring.monomial_index(
                        d + e, tuple(x + (1 if k == i else 0) for k, x in enumerate(m))
                    )
                    for m in ring.monomials(d)
                )
            self._steps[key] = step
        return self._steps[key]

    def multiply_by_var(self, i: int, vec):
        """Multiply a total-space vector by variable i, truncating at the bound."""
        field = self.ring.field
        out = [field.zero] * self.total_dim
        for d in range(self.bound):
            base = self.offsets[d]
            step = self.var_step(i, d)
            tbase = self.offsets[d + self.ring.weights[i]] if d + self.ring.weights[i] < self.bound else None
            if tbase is None:
                continue
            for j in range(self.dims[d]):
                c = vec[base + j]
                if c != 0:
                    t = step[j]
                    out[tbase + t] = field.add(out[tbase + t], c)
        return tuple(out)

    def embed(self, d: int, vec):
        """Place a degree-d coordinate vector into the total space."""
        field = self.ring.field
        out = [field.zero] * self.total_dim
        base = self.offsets[d]
        for j, c in enumerate(vec):
            out[base + j] = c
        return tuple(out)

    def component(self, vec, d: int):
        base = self.offsets[d]
        return tuple(vec[base + j] for j in range(self.dims[d]))

    def vector_of(self, f: Polynomial):
        """Total-space vector of a polynomial with all degrees below the bound."""
        field = self.ring.field
        out = [field.zero] * self.total_dim
        for m, c in f.terms.items():
            d = self.ring.wdeg(m)
            if d >= self.bound:
                raise BoundExceededError(f"degree {d} term beyond truncation bound {self.bound}")
            out[self.offsets[d] + self.ring.monomial_index(d, m)] = c
        return tuple(out)

    def polynomial_of(self, vec) -> Polynomial:
        terms = {}
        for d in range(self.bound):
            base = self.offsets[d]
            for j, m in enumerate(self.ring.monomials(d)):
                c = vec[base + j]
                if c != 0:
                    terms[m] = c
        return Polynomial(self.ring, terms)


def truncate_algebra(ring: GradedRing, bound: int) -> TruncatedAlgebra:
    """The truncated algebra with graded pieces of degree < bound."""
    return TruncatedAlgebra(ring, bound)
