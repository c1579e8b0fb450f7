"""Surface-syntax round trips and error offsets.

The grammar is the inverse of ``str``: whatever a Polynomial, InverseElement,
or RingSpec prints must reparse to an equal object.  Errors are checked for
both the message and the byte offset they report.
"""

import random
from fractions import Fraction

import pytest

from apolar.duality import InverseElement
from apolar.invariants import IntSeq
from apolar.parsing import (
    ParseError,
    parse_expression,
    parse_expressions,
    parse_int_list,
    parse_point_list,
    parse_ring_spec,
    parse_socle_type,
)
from apolar.rings import GF, QQ, GradedRing, Polynomial

F7 = GF(7)
R2 = GradedRing(("x", "y"), (1, 1), QQ)
S2 = GradedRing(("x", "y"), (1, 1), F7)
W3 = GradedRing(("u", "v", "w"), (1, 2, 3), QQ)


class TestRingSpecs:
    def test_plain_rational_ring(self):
        spec = parse_ring_spec("QQ[x,y]")
        assert spec.p is None
        assert spec.names == ("x", "y")
        assert spec.weights == (1, 1)
        assert spec.ring() == R2

    def test_weighted_prime_field_ring(self):
        spec = parse_ring_spec("GF(7)[x:3, y:2]")
        assert spec.p == 7
        assert spec.weights == (3, 2)
        assert spec.field() == F7
        assert spec.ring() == GradedRing(("x", "y"), (3, 2), F7)

    def test_print_parse_is_the_identity(self):
        for text in ["QQ[x,y]", "GF(11)[u:2, v:3, w]", "QQ[a]", "GF(2)[x]"]:
            spec = parse_ring_spec(text)
            assert parse_ring_spec(str(spec)) == spec

    def test_printing_omits_weight_one(self):
        assert str(parse_ring_spec("QQ[x:1,y:2]")) == "QQ[x, y:2]"

    def test_rejects_composite_characteristic(self):
        with pytest.raises(ParseError) as exc:
            parse_ring_spec("GF(9)[x]")
        assert "not prime" in exc.value.message
        assert exc.value.offset == 3

    def test_rejects_duplicate_variables(self):
        with pytest.raises(ParseError) as exc:
            parse_ring_spec("QQ[x,x]")
        assert "duplicate" in exc.value.message
        assert exc.value.offset == 5

    def test_rejects_zero_weight(self):
        with pytest.raises(ParseError, match="positive"):
            parse_ring_spec("QQ[x:0]")

    def test_rejects_unknown_field(self):
        with pytest.raises(ParseError) as exc:
            parse_ring_spec("ZZ[x]")
        assert exc.value.offset == 0

    def test_rejects_trailing_input(self):
        with pytest.raises(ParseError) as exc:
            parse_ring_spec("QQ[x] extra")
        assert "trailing" in exc.value.message
        assert exc.value.offset == 6


class TestExpressionRoundTrips:
    def test_documented_annihilator_pair(self):
        gens = parse_expressions("x^2 - y^3, x*y", R2)
        assert [str(g) for g in gens] == ["x^2 - y^3", "x*y"]
        assert gens[0] == Polynomial(
            R2, {(2, 0): Fraction(1), (0, 3): Fraction(-1)}
        )

    def test_fraction_coefficients(self):
        p = parse_expression("-2/3*x + y^2", R2)
        assert p == Polynomial(R2, {(1, 0): Fraction(-2, 3), (0, 2): Fraction(1)})
        assert str(p) == "-2/3*x + y^2"

    def test_terms_merge_and_cancel(self):
        assert parse_expression("x + x", R2) == parse_expression("2*x", R2)
        assert parse_expression("x - x", R2) == Polynomial(R2, {})
        assert str(parse_expression("1/2*x + 1/2*x", R2)) == "x"

    def test_products_of_coefficients_and_variables(self):
        # '*' just multiplies factors, so 2*3*x*x is one term 6*x^2.
        assert parse_expression("2*3*x*x", R2) == parse_expression("6*x^2", R2)

    def test_prime_field_coefficients_reduce(self):
        assert parse_expression("10*x", S2) == parse_expression("3*x", S2)
        assert parse_expression("7*x", S2) == Polynomial(S2, {})
        assert str(parse_expression("3 + 13*x*y", S2)) == "3 + 6*x*y"

    def test_inverse_mode_builds_dual_elements(self):
        F = parse_expression("x^-2 + y^-3", R2, mode="inverse")
        assert F == InverseElement(
            R2, {(0, (2, 0)): Fraction(1), (0, (0, 3)): Fraction(1)}
        )
        assert str(F) == "x^-2 + y^-3"
        G = parse_expression("-1/2*x^-2 + 4*y^-3", R2, mode="inverse")
        assert str(G) == "-1/2*x^-2 + 4*y^-3"

    def test_constants_parse_in_both_modes(self):
        assert parse_expression("5", R2) == Polynomial(R2, {(0, 0): Fraction(5)})
        assert parse_expression("0", R2) == Polynomial(R2, {})
        assert parse_expression("0", R2, mode="inverse") == InverseElement(R2, {})

    def test_leading_sign(self):
        assert parse_expression("-x + y", R2) == parse_expression("y - x", R2)
        assert parse_expression("+x", R2) == parse_expression("x", R2)

    def test_weighted_ring_monomials(self):
        p = parse_expression("u*w - v^2", W3)
        # weights (1, 2, 3): both terms sit in weighted degree 4
        assert p.degree() == 4


class TestExpressionErrors:
    def test_unknown_variable_reports_its_offset(self):
        with pytest.raises(ParseError) as exc:
            parse_expression("x + q*y", R2)
        assert "unknown variable 'q'" in exc.value.message
        assert exc.value.offset == 4

    def test_wrong_sign_for_polynomial_mode(self):
        with pytest.raises(ParseError) as exc:
            parse_expression("y + x^-2", R2)
        assert "negative exponent in a polynomial" in exc.value.message
        assert exc.value.offset == 4

    def test_wrong_sign_for_inverse_mode(self):
        with pytest.raises(ParseError) as exc:
            parse_expression("x^-2 + y", R2, mode="inverse")
        assert "positive exponent in a dual element" in exc.value.message
        assert exc.value.offset == 7

    def test_mixed_sign_exponents_in_one_term(self):
        with pytest.raises(ParseError) as exc:
            parse_expression("x*y^-1", R2, mode="inverse")
        assert "mixed-sign" in exc.value.message
        assert exc.value.offset == 0

    def test_zero_denominator(self):
        with pytest.raises(ParseError) as exc:
            parse_expression("1/0*x", R2)
        assert "zero denominator" in exc.value.message
        assert exc.value.offset == 2

    def test_empty_expression(self):
        with pytest.raises(ParseError, match="empty expression"):
            parse_expression("", R2)

    def test_trailing_input(self):
        with pytest.raises(ParseError) as exc:
            parse_expression("x )", R2)
        assert exc.value.offset == 2

    def test_unexpected_character(self):
        with pytest.raises(ParseError) as exc:
            parse_expression("x + @", R2)
        assert "unexpected character" in exc.value.message
        assert exc.value.offset == 4

    def test_dangling_star(self):
        with pytest.raises(ParseError) as exc:
            parse_expression("x + *y", R2)
        assert "expected a coefficient or variable" in exc.value.message
        assert exc.value.offset == 4

    def test_list_errors_carry_global_offsets(self):
        # 'q' sits at byte 3 of the whole list, not byte 0 of its chunk.
        with pytest.raises(ParseError) as exc:
            parse_expressions("x, q", R2)
        assert exc.value.offset == 3

    def test_empty_list_entry(self):
        with pytest.raises(ParseError, match="empty expression in list"):
            parse_expressions("x,, y", R2)


class TestFlagSyntaxes:
    def test_socle_type(self):
        assert parse_socle_type("3:1,4:2") == IntSeq.from_items({3: 1, 4: 2})
        assert parse_socle_type(" 3 : 1 ") == IntSeq.from_items({3: 1})
        assert parse_socle_type("") == IntSeq(())

    def test_socle_type_rejects_repeats(self):
        with pytest.raises(ParseError) as exc:
            parse_socle_type("3:1,3:2")
        assert "repeated" in exc.value.message
        assert exc.value.offset == 4

    def test_int_list(self):
        assert parse_int_list("1,-2,3") == [1, -2, 3]
        with pytest.raises(ParseError, match="expected an integer"):
            parse_int_list("1,")

    def test_point_list(self):
        assert parse_point_list("1,0; 0,1; 2,-3") == [(1, 0), (0, 1), (2, -3)]


class TestBulkRoundTrip:
    """1000 random elements: parse(str(x)) == x, and printing is stable."""

    def _random_terms(self, rng, ring):
        terms = {}
        for _ in range(rng.randrange(5)):
            expts = tuple(rng.randrange(5) for _ in range(ring.nvars))
            if ring.field is QQ:
                num = rng.choice([k for k in range(-9, 10) if k])
                coeff = ring.field.of(Fraction(num, rng.randrange(1, 10)))
            else:
                coeff = ring.field.of(rng.randrange(1, 7))
            terms[expts] = coeff
        return terms

    def test_polynomials_survive_printing(self):
        rng = random.Random(20260825)
        for ring in (R2, S2, W3):
            for _ in range(250):
                p = Polynomial(ring, self._random_terms(rng, ring))
                text = str(p)
                q = parse_expression(text, ring)
                assert q == p
                assert str(q) == text

    def test_dual_elements_survive_printing(self):
        rng = random.Random(823)
        for ring in (R2, S2):
            for _ in range(125):
                terms = {
                    (0, expts): c
                    for expts, c in self._random_terms(rng, ring).items()
                }
                F = InverseElement(ring, terms)
                text = str(F)
                G = parse_expression(text, ring, mode="inverse")
                assert G == F
                assert str(G) == text
