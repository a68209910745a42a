"""Tests for polyring: parsing, printing, arithmetic and monomial orders"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.errors import (
    InvalidArgumentError, NotDivisibleError, PolynomialSyntaxError, RingMismatchError,
    UnknownVariableError, ZeroPolynomialError,
)
from polyring.orders import GREVLEX, LEX, Block, Ordering, WeightedGrevLex
from polyring.parser import detect_variables, parse_poly
from polyring.poly import DegreeInfo, Poly, degree_info, divide_exact, poly_arith
from polyring.rational import format_rational, rational
from polyring.ring import RingSpec, fresh_name
from strategies import XYZ, exponents, polys

XY = RingSpec(("x", "y"))
X = RingSpec(("x",))


def p(text, ring=XY):
    return parse_poly(text, ring)


class TestRational:
    """Rational coefficients"""

    def test_parse_and_format(self):
        assert format_rational(rational("6/4")) == "3/2"
        assert format_rational(rational(-3, 6)) == "-1/2"
        assert format_rational(rational("7")) == "7"

    def test_rejects_zero_denominator(self):
        with pytest.raises(InvalidArgumentError):
            rational("1/0")

    def test_rejects_garbage(self):
        with pytest.raises(InvalidArgumentError):
            rational("one")


class TestRingSpec:
    """Ring descriptors"""

    def test_of_splits_names(self):
        assert RingSpec.of("x, y").names == ("x", "y")

    def test_duplicate_names_rejected(self):
        with pytest.raises(InvalidArgumentError):
            RingSpec(("x", "x"))

    def test_fresh_name_avoids_clash(self):
        assert fresh_name(RingSpec(("t", "t1", "x"))) == "t2"
        assert fresh_name(XY) == "t"


class TestParserAndPrinter:
    """Polynomial text format"""

    def test_descending_grevlex_print(self):
        assert str(p("x^2-y^3")) == "-y^3+x^2"
        assert str(p("(x+y)^2")) == "x^2+2*x*y+y^2"

    def test_rational_coefficients(self):
        assert str(p("x*y + 1/2*x")) == "x*y+1/2*x"
        assert str(p("-3/2*x + 1")) == "-3/2*x+1"

    def test_implicit_multiplication(self):
        assert p("3x y") == p("3*x*y")

    def test_zero_prints_as_zero(self):
        assert str(p("x - x")) == "0"

    def test_syntax_error_offset(self):
        with pytest.raises(PolynomialSyntaxError) as exc_info:
            p("x+")
        assert exc_info.value.offset == 2
        assert exc_info.value.code == 8

    def test_zero_denominator_offset(self):
        with pytest.raises(PolynomialSyntaxError) as exc_info:
            p("1/0")
        assert exc_info.value.offset == 2

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariableError) as exc_info:
            p("x+z")
        assert exc_info.value.offset == 2
        assert exc_info.value.data["name"] == "z"

    def test_detect_variables(self):
        assert detect_variables("3x^2 + y*x1") == ["x", "x1", "y"]

    @settings(max_examples=100)
    @given(polys())
    def test_print_then_parse(self, f):
        """Printed text parses back to the same polynomial"""
        assert parse_poly(str(f), XYZ) == f


class TestArithmetic:
    """Ring operations"""

    def test_ring_mismatch(self):
        with pytest.raises(RingMismatchError):
            p("x") + p("x", X)

    def test_derivative(self):
        assert p("x^3*y+y^2").derivative(0) == p("3*x^2*y")
        assert p("x^3*y+y^2").derivative(1) == p("x^3+2*y")

    def test_substitute_partial(self):
        g = p("x*y+y").substitute({1: 2})
        assert g.ring == X
        assert g == parse_poly("2*x+2", X)

    def test_substitute_full_stays_in_ring(self):
        g = p("x*y+y").substitute({0: 1, 1: 3})
        assert g.ring == XY
        assert g == 6
        assert hash(g) == hash(6)
        with pytest.raises(InvalidArgumentError):
            RingSpec(())

    def test_constants_hash_like_numbers(self):
        assert p("3") == 3
        assert hash(p("3")) == hash(3)
        assert hash(Poly.constant(XY, rational(1, 2))) == hash(rational(1, 2))
        assert hash(Poly.zero(XY)) == hash(0)
        assert {p("3"): "three"}[3] == "three"

    @given(polys(), polys())
    def test_equal_polys_hash_equal(self, a, b):
        if a == b:
            assert hash(a) == hash(b)
        assert hash(a - a) == hash(0)

    def test_degree_info(self):
        assert degree_info(p("x^4+y^5+x*y^4")) == DegreeInfo(5, 4)
        assert degree_info(p("x^2-y^3")) == DegreeInfo(3, 2)
        assert degree_info(p("5")) == DegreeInfo(0, 0)

    def test_degree_info_of_zero(self):
        with pytest.raises(ZeroPolynomialError):
            degree_info(Poly.zero(XY))

    def test_evaluate(self):
        assert p("x^2-y^3").evaluate(["1/2", 1]) == rational(-3, 4)

    def test_translate(self):
        assert p("x^2").translate([1, 0]) == p("x^2+2*x+1")
        assert parse_poly("x-1", X).translate([1]) == parse_poly("x", X)

    def test_divide_exact(self):
        assert divide_exact(p("x^2-y^2"), p("x-y")) == p("x+y")

    def test_divide_exact_remainder(self):
        with pytest.raises(NotDivisibleError):
            divide_exact(p("x^2+1"), p("x"))

    def test_zero_has_no_leading_monomial(self):
        with pytest.raises(ZeroPolynomialError):
            Poly.zero(XY).leading_monomial(GREVLEX)

    def test_poly_arith_dispatch(self):
        assert poly_arith("power", p("x+1"), 2) == p("x^2+2*x+1")
        with pytest.raises(InvalidArgumentError):
            poly_arith("div", p("x"), 2)

    @settings(max_examples=1000, deadline=None)
    @given(polys(), polys(), polys())
    def test_ring_axioms(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert (a - a).is_zero()

    @settings(max_examples=100)
    @given(polys(), polys(), st.integers(min_value=0, max_value=2))
    def test_leibniz_rule(self, a, b, i):
        assert (a * b).derivative(i) == a.derivative(i) * b + a * b.derivative(i)


class TestMonomialOrders:
    """Orders are total and compatible with multiplication"""

    def test_grevlex_examples(self):
        assert GREVLEX.compare((2, 0), (1, 1)) == Ordering.GT
        assert GREVLEX.compare((1, 1), (0, 2)) == Ordering.GT
        assert GREVLEX.compare((0, 3), (2, 0)) == Ordering.GT

    def test_lex_examples(self):
        assert LEX.compare((1, 0), (0, 5)) == Ordering.GT

    def test_block_eliminates_front(self):
        order = Block(1)
        assert order.compare((1, 0, 0), (0, 4, 4)) == Ordering.GT

    def test_weighted_rejects_negative(self):
        with pytest.raises(InvalidArgumentError):
            WeightedGrevLex((1, -1))

    @settings(max_examples=200)
    @given(exponents(3), exponents(3), exponents(3),
           st.sampled_from([GREVLEX, LEX, Block(1), WeightedGrevLex((0, 1, 1))]))
    def test_multiplicative(self, a, b, c, order):
        shifted = lambda m: tuple(x + y for x, y in zip(m, c))
        assert order.compare(a, b) == order.compare(shifted(a), shifted(b))
        if a != b:
            assert order.compare(a, b) != Ordering.EQ
