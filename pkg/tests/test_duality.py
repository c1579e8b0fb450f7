"""Inverse systems, annihilators, and the filtered/graded correspondence."""

import random

import pytest

from apolar.duality import (
    FilteredIdeal,
    GradedIdeal,
    InverseElement,
    InverseSystem,
    annihilator_of_submodule,
    apolar_annihilator,
    associated_graded_ideal,
    associated_graded_submodule,
    catalecticant_matrix,
    contract,
    dual_minimal_generators,
    filtered_dual,
    generated_submodule,
    hom_into_dual_dims,
)
from apolar.rings import (
    GF,
    QQ,
    BoundExceededError,
    GradedRing,
    MathDomainError,
    Polynomial,
    matrix_rank,
)

R2 = GradedRing.standard(QQ, ("X1", "X2"))
W32 = GradedRing(("X1", "X2"), (3, 2), QQ)


def inv(ring, expts, c=1):
    return InverseElement.inverse_monomial(ring, expts, c)


def var(ring, i):
    return ring.variable(i)


class TestContract:
    def test_divides(self):
        f = inv(R2, (2, 1))
        assert contract(var(R2, 0), f) == inv(R2, (1, 1))

    def test_not_divides(self):
        f = inv(R2, (0, 3))
        assert contract(var(R2, 0), f).is_zero()

    def test_cyclic_image_of_mixed_generator(self):
        # (sum a_ij X1^i X2^j) . (X1^-2 + X2^-3)
        #   = a_00 F + a_10/X1 + a_01/X2^2 + a_02/X2 + (a_20 + a_03)
        F = inv(R2, (2, 0)) + inv(R2, (0, 3))
        psi = Polynomial(
            R2,
            {(0, 0): 1, (1, 0): 2, (0, 1): 3, (0, 2): 5, (2, 0): 7, (0, 3): 11, (1, 1): 13},
        )
        got = contract(psi, F)
        want = (
            F.scale(1)
            + inv(R2, (1, 0), 2)
            + inv(R2, (0, 2), 3)
            + inv(R2, (0, 1), 5)
            + inv(R2, (0, 0), 18)
        )
        assert got == want

    def test_degree_bookkeeping(self):
        f = inv(W32, (1, 1))
        assert f.degree() == -5
        assert contract(var(W32, 1), f).degree() == -3


class TestCyclicFilteredExample:
    """F = 1/X1^2 + 1/X2^3: the annihilator is (X1^2 - X2^3, X1X2), the
    module A.F has dimension 5, and the two determine each other."""

    def setup_method(self):
        self.F = inv(R2, (2, 0)) + inv(R2, (0, 3))
        self.D, self.I = filtered_dual(self.F, bound=5)

    def test_dims(self):
        assert self.D.space.dim == 5
        assert self.I.quotient_total_dim() == 5

    def test_annihilator_generators(self):
        g1 = var(R2, 0) ** 2 - var(R2, 1) ** 3
        g2 = var(R2, 0) * var(R2, 1)
        assert self.I.contains(g1)
        assert self.I.contains(g2)
        regen = FilteredIdeal.from_generators(self.I.algebra, [g1, g2])
        assert regen.space == self.I.space

    def test_ideal_is_closed(self):
        assert self.I.is_multiplication_closed()

    def test_associated_graded_ideal(self):
        G = associated_graded_ideal(self.I)
        x1, x2 = var(R2, 0), var(R2, 1)
        want = GradedIdeal.from_generators(R2, [x1 * x2, x1 * x1, x2 ** 4], 5)
        assert G == want
        assert [G.quotient_dim(d) for d in range(5)] == [1, 2, 1, 1, 0]

    def test_associated_graded_module(self):
        G = associated_graded_submodule(self.D)
        assert G.dims() == {-3: 1, -2: 1, -1: 2, 0: 1}
        gens = dual_minimal_generators(G)
        assert sorted(g.degree() for g in gens) == [-3, -1]
        assert gens[0] == inv(R2, (0, 3))
        assert inv(R2, (1, 0)) in gens

    def test_graded_duality_commutes(self):
        GI = associated_graded_ideal(self.I)
        GD = associated_graded_submodule(self.D)
        assert annihilator_of_submodule(GD, bound=5) == GI
        assert GD.is_contraction_closed()

    def test_weighted_regrading_is_gorenstein_graded(self):
        # with weights (3, 2) the same F is homogeneous of degree -6
        F = inv(W32, (2, 0)) + inv(W32, (0, 3))
        assert F.degree() == -6
        D = generated_submodule([F])
        assert D.dims() == {-6: 1, -4: 1, -3: 1, -2: 1, 0: 1}
        I = annihilator_of_submodule(D, bound=10)
        assert [I.quotient_dim(d) for d in range(7)] == [1, 0, 1, 1, 1, 0, 1]
        assert apolar_annihilator(I) == D
        assert len(dual_minimal_generators(D)) == 1


class TestGradedIdeal:
    def test_from_generators_monomial_ci(self):
        x, y = var(R2, 0), var(R2, 1)
        I = GradedIdeal.from_generators(R2, [x ** 3, y ** 3], 7)
        assert [I.quotient_dim(d) for d in range(7)] == [1, 2, 3, 2, 1, 0, 0]
        assert I.saturated_from == 5
        assert I.artinian_certified
        assert I.is_multiplication_closed()
        assert I.contains(x ** 4 + x ** 3 * y)
        assert not I.contains(x ** 2 * y)

    def test_uncertified_tail(self):
        x = var(W32, 0)
        I = GradedIdeal.from_generators(W32, [x], 5)
        # quotient k[X2] never vanishes, so no full tail exists
        assert I.saturated_from is None
        with pytest.raises(BoundExceededError):
            apolar_annihilator(I)

    def test_short_tail_not_certified(self):
        x1, x2 = var(W32, 0), var(W32, 1)
        I = GradedIdeal.from_generators(W32, [x1 * x1 - x2 ** 3, x1 * x2], 9)
        assert I.saturated_from == 7
        assert not I.artinian_certified  # tail shorter than the largest weight

    def test_inhomogeneous_generator_rejected(self):
        x, y = var(R2, 0), var(R2, 1)
        with pytest.raises(MathDomainError):
            GradedIdeal.from_generators(R2, [x * x - y], 4)


class TestAnnihilators:
    def test_monomial_ci_dual_is_cyclic(self):
        x, y = var(R2, 0), var(R2, 1)
        I = GradedIdeal.from_generators(R2, [x ** 3, y ** 3], 7)
        D = apolar_annihilator(I)
        assert D.dims() == {-4: 1, -3: 2, -2: 3, -1: 2, 0: 1}
        gens = dual_minimal_generators(D)
        assert gens == [inv(R2, (2, 2))]
        assert annihilator_of_submodule(D, bound=7) == I

    def test_generated_submodule_matches_contraction(self):
        f = inv(R2, (2, 2))
        D = generated_submodule([f])
        assert D.is_contraction_closed()
        assert D.piece(-2).dim == 3
        assert D.piece(0).dim == 1

    def test_generated_submodule_rejects_inhomogeneous(self):
        F = inv(R2, (2, 0)) + inv(R2, (0, 3))
        with pytest.raises(MathDomainError):
            generated_submodule([F])

    def test_hom_dims_match_dual_pieces(self):
        x, y = var(R2, 0), var(R2, 1)
        I = GradedIdeal.from_generators(R2, [x ** 3, y ** 3], 7)
        D = apolar_annihilator(I)
        for p in range(-4, 1):
            assert hom_into_dual_dims(I, p) == D.piece(p).dim
        assert hom_into_dual_dims(I, 1) == 0
        assert hom_into_dual_dims(I, -5) == 0


class TestCatalecticant:
    def test_square_ranks(self):
        f = inv(R2, (2, 2))
        D = generated_submodule([f])
        for p in range(-4, 1):
            mat = catalecticant_matrix(f, p)
            assert len(mat) == R2.dim(-p)
            assert matrix_rank(QQ, mat, R2.dim(p + 4)) == D.piece(p).dim

    def test_rank_one_quartic(self):
        # the divided power of a linear form: all coefficients 1 under
        # contraction, so every catalecticant has rank one
        f = InverseElement(R2, {m: 1 for m in R2.monomials(4)})
        mat = catalecticant_matrix(f, -2)
        assert matrix_rank(QQ, mat, R2.dim(2)) == 1


def _random_dual_elements(ring, rnd, count, lo):
    out = []
    for _ in range(count):
        n = rnd.randrange(lo, 0)
        basis = [m for m in ring.monomials(-n)]
        terms = {m: rnd.randrange(101) for m in basis if rnd.random() < 0.7}
        if terms and any(v for v in terms.values()):
            out.append(InverseElement(ring, terms))
    return out


class TestRoundTripProperty:
    def test_double_annihilator_is_identity(self):
        ring = GradedRing.standard(GF(101), 3)
        rnd = random.Random(20240817)
        done = 0
        while done < 40:
            gens = _random_dual_elements(ring, rnd, rnd.randrange(1, 3), -4)
            if not gens:
                continue
            D = generated_submodule(gens)
            I = annihilator_of_submodule(D)
            assert apolar_annihilator(I) == D
            assert D.is_contraction_closed()
            assert I.is_multiplication_closed()
            done += 1

    def test_quotient_and_dual_dimensions_agree(self):
        ring = GradedRing.standard(GF(101), 2)
        rnd = random.Random(99)
        for _ in range(30):
            gens = _random_dual_elements(ring, rnd, 2, -5)
            if not gens:
                continue
            D = generated_submodule(gens)
            I = annihilator_of_submodule(D)
            for p in range(I.bound):
                assert I.quotient_dim(p) == D.piece(-p).dim
