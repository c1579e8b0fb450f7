"""Hilbert functions, socle types, multilevel profiles, linkage, stability."""

import random

import pytest

from apolar.duality import (
    GradedIdeal,
    InverseElement,
    annihilator_of_submodule,
    apolar_annihilator,
    generated_submodule,
)
from apolar.invariants import (
    IntSeq,
    generator_type,
    hilbert_function,
    integrity,
    is_gorenstein,
    is_level,
    linkage,
    linkage_predicted_hilbert,
    multilevel_profile,
    socle,
    socle_report,
    stability_integrity,
    stable_from,
    symmetry_defect,
)
from apolar.rings import GF, QQ, GradedRing, MathDomainError, Polynomial

R2 = GradedRing.standard(QQ, ("X1", "X2"))
W32 = GradedRing(("X1", "X2"), (3, 2), QQ)


def var(ring, i):
    return ring.variable(i)


class TestIntSeq:
    def test_trimming_and_padding_equality(self):
        assert IntSeq([0, 0, 1, 2, 0]) == IntSeq([1, 2], offset=2)
        assert IntSeq([]) == IntSeq([0, 0, 0], offset=-5)

    def test_indexing(self):
        t = IntSeq([1, 3, 1])
        assert (t[-1], t[0], t[2], t[3]) == (0, 1, 1, 0)

    def test_arithmetic(self):
        a = IntSeq([1, 2, 3])
        b = IntSeq([1, 1], offset=1)
        assert a - b == IntSeq([1, 1, 2])
        assert a.shift(2)[2] == 1
        assert (a + a.scale(-1)) == IntSeq([])

    def test_window_and_items(self):
        t = IntSeq([5, 7], offset=-1)
        assert t.window(-2, 2) == (0, 5, 7, 0)
        assert t.items() == [(-1, 5), (0, 7)]
        assert t.sum() == 12

    def test_from_items_and_dict_round_trip(self):
        t = IntSeq.from_items({3: 1, 1: 2})
        assert t == IntSeq([2, 0, 1], offset=1)
        assert IntSeq.from_dict(t.to_dict()) == t

    def test_empty_support_raises(self):
        with pytest.raises(MathDomainError):
            IntSeq([]).first()


class TestMonomialNonGorenstein:
    """I = (X^2, XY, Y^3): symmetric Hilbert function under the standard
    weights, visibly non-Gorenstein under weights (3, 2)."""

    def setup_method(self):
        x, y = var(R2, 0), var(R2, 1)
        self.I = GradedIdeal.from_generators(R2, [x * x, x * y, y ** 3], 6)
        xw, yw = var(W32, 0), var(W32, 1)
        self.Iw = GradedIdeal.from_generators(W32, [xw * xw, xw * yw, yw ** 3], 11)

    def test_standard_hilbert_symmetric_yet_not_gorenstein(self):
        h = hilbert_function(self.I)
        assert h == IntSeq([1, 2, 1])
        assert symmetry_defect(h) == ()
        assert socle(self.I) == IntSeq([0, 1, 1])
        assert not is_gorenstein(self.I, via="socle")
        assert not is_gorenstein(self.I, via="dual")

    def test_weighted_hilbert_breaks_symmetry(self):
        h = hilbert_function(self.Iw)
        assert h == IntSeq([1, 0, 1, 1, 1])
        assert h[1] != h[4 - 1]
        assert 1 in symmetry_defect(h)
        assert not is_gorenstein(self.Iw, via="socle")
        assert not is_gorenstein(self.Iw, via="dual")

    def test_socle_report(self):
        rep = socle_report(self.I)
        assert rep.socle_degree == 2
        assert rep.total == 2
        assert not rep.is_level
        assert not rep.is_gorenstein


class TestWeightedGorenstein:
    """I = (X1^2 - X2^3, X1X2) under weights (3, 2) is graded Gorenstein."""

    def setup_method(self):
        x1, x2 = var(W32, 0), var(W32, 1)
        self.I = GradedIdeal.from_generators(W32, [x1 * x1 - x2 ** 3, x1 * x2], 10)

    def test_gorenstein_both_routes(self):
        assert is_gorenstein(self.I, via="socle")
        assert is_gorenstein(self.I, via="dual")
        rep = socle_report(self.I)
        assert rep.socle_degree == 6 and rep.is_level

    def test_hilbert_symmetric(self):
        h = hilbert_function(self.I)
        assert h == IntSeq([1, 0, 1, 1, 1, 0, 1])
        assert symmetry_defect(h) == ()

    def test_stability_matches_integrity(self):
        rep = stability_integrity(self.I)
        assert rep.integrity == 6
        assert rep.stable_from == -6


class TestGeneratorTypeAndProfile:
    def setup_method(self):
        # associated graded of the cyclic filtered example: generated by
        # 1/X2^3 and 1/X1
        self.D = generated_submodule(
            [
                InverseElement.inverse_monomial(R2, (0, 3)),
                InverseElement.inverse_monomial(R2, (1, 0)),
            ]
        )

    def test_generator_type(self):
        assert generator_type(self.D) == IntSeq([0, 1, 0, 1])

    def test_type_matches_socle_of_quotient(self):
        I = annihilator_of_submodule(self.D)
        assert socle(I) == generator_type(self.D)

    def test_multilevel_profile(self):
        prof = multilevel_profile(self.D)
        assert prof.socle_degree == 3
        assert prof.row(0) == IntSeq([1, 2, 1, 1])
        assert prof.row(1) == IntSeq([1, 2, 1, 1])
        assert prof.row(2) == IntSeq([1, 1, 1, 1])
        assert prof.row(3) == IntSeq([1, 1, 1, 1])
        assert prof.row(4) == IntSeq([])
        assert prof.type_from_profile == generator_type(self.D)

    def test_profile_rows_decrease(self):
        prof = multilevel_profile(self.D)
        for m in range(len(prof.rows) - 1):
            for p in range(prof.socle_degree + 1):
                assert prof.rows[m][p] >= prof.rows[m + 1][p]

    def test_level_detection(self):
        assert not is_level(self.D)
        ci_dual = generated_submodule([InverseElement.inverse_monomial(R2, (2, 2))])
        assert is_level(ci_dual)
        assert is_level(annihilator_of_submodule(ci_dual))

    def test_stability(self):
        assert stable_from(self.D) == -1
        assert integrity(annihilator_of_submodule(self.D)) == 1


class TestLinkage:
    def setup_method(self):
        x, y = var(R2, 0), var(R2, 1)
        self.x, self.y = x, y
        self.ambient = GradedIdeal.from_generators(R2, [x ** 3, y ** 3], 7)

    def test_link_of_principal_ideal(self):
        I = GradedIdeal.from_generators(R2, [self.x], 7)
        rep = linkage(self.ambient, I)
        assert rep.quotient_hilbert == IntSeq([1, 2, 2, 1])
        assert rep.link.contains(self.x ** 2)
        assert rep.is_cyclic
        assert rep.generator_degrees == (2,)

    def test_linkage_formula(self):
        I = GradedIdeal.from_generators(R2, [self.x], 7)
        rep = linkage(self.ambient, I)
        b = hilbert_function(self.ambient)
        h = hilbert_function(GradedIdeal.from_generators(R2, [self.x, self.y ** 3], 7))
        assert rep.quotient_hilbert == linkage_predicted_hilbert(b, h, 4)

    def test_double_linkage_returns_ideal(self):
        I = GradedIdeal.from_generators(R2, [self.x], 7)
        rep = linkage(self.ambient, I)
        again = linkage(self.ambient, rep.link)
        want = GradedIdeal.from_generators(R2, [self.x, self.y ** 3], 7)
        assert again.link == want

    def test_gorenstein_iff_cyclic_link(self):
        # A/(I, J) = k[y]/(y^3) is Gorenstein and the link is cyclic;
        # A/(m^2, J) is not, and its link needs two generators
        I2 = GradedIdeal.from_generators(
            R2, [self.x ** 2, self.x * self.y, self.y ** 2], 7
        )
        rep2 = linkage(self.ambient, I2)
        assert rep2.quotient_hilbert == IntSeq([1, 2, 3])
        assert not rep2.is_cyclic
        assert rep2.generator_degrees == (3, 3)
        assert rep2.link.contains(self.x ** 2 * self.y)
        assert rep2.link.contains(self.x * self.y ** 2)
        full = GradedIdeal.from_generators(
            R2, [self.x ** 2 * self.y, self.x * self.y ** 2, self.x ** 3, self.y ** 3], 7
        )
        assert rep2.link == full

    def test_non_gorenstein_ambient_rejected(self):
        bad = GradedIdeal.from_generators(
            R2, [self.x ** 2, self.x * self.y, self.y ** 3], 6
        )
        I = GradedIdeal.from_generators(R2, [self.x], 6)
        with pytest.raises(MathDomainError):
            linkage(bad, I)


def _random_system(ring, rnd):
    gens = []
    for _ in range(rnd.randrange(1, 3)):
        n = -rnd.randrange(1, 5)
        terms = {m: rnd.randrange(101) for m in ring.monomials(-n) if rnd.random() < 0.8}
        if any(terms.values()):
            gens.append(InverseElement(ring, terms))
    return generated_submodule(gens) if gens else None


class TestSeededProperties:
    def test_socle_type_duality_and_profiles(self):
        ring = GradedRing.standard(GF(101), 3)
        rnd = random.Random(41)
        done = 0
        while done < 25:
            D = _random_system(ring, rnd)
            if D is None:
                continue
            I = annihilator_of_submodule(D)
            t = generator_type(D)
            assert socle(I) == t
            assert hilbert_function(I) == hilbert_function(D)
            prof = multilevel_profile(D)
            assert prof.type_from_profile == t
            rep = stability_integrity(D)
            assert rep.integrity == t.first()
            assert rep.stable_from == -rep.integrity
            done += 1

    def test_double_link_restores_ideal(self):
        ring = GradedRing.standard(GF(101), 2)
        x, y = ring.variable(0), ring.variable(1)
        ambient = GradedIdeal.from_generators(ring, [x ** 4, y ** 4], 9)
        rnd = random.Random(7)
        done = 0
        while done < 10:
            d = rnd.randrange(1, 4)
            terms = {m: rnd.randrange(101) for m in ring.monomials(d)}
            f = Polynomial(ring, terms)
            if f.is_zero():
                continue
            I = GradedIdeal.from_generators(ring, [f, x ** 4, y ** 4], 9)
            rep = linkage(ambient, I)
            again = linkage(ambient, rep.link)
            assert again.link == I
            # Hilbert function reciprocity in both directions
            b = hilbert_function(ambient)
            assert rep.quotient_hilbert == linkage_predicted_hilbert(
                b, hilbert_function(I), 6
            )
            done += 1
