"""Tests for truncated annihilators, genericity, local multiplicities and kappa"""
from itertools import islice
from math import gcd

import pytest

from annihilator.curve import (
    CurveInput, curve_multiplicity, curve_multiplicity_at, reiffen, singular_locus, validate_curve,
)
from annihilator.genericity import check_genericity, conormal_ideal, ladder
from annihilator.kappa import kappa_and_annihilator
from annihilator.multiplicity import (
    UNDEFINED, is_finite, local_multiplicity_at_origin, m_d, multiplicity_on_plane, restrict_to_plane,
)
from annihilator.reports import TruncationReport, annihilators_equal
from annihilator.truncation import (
    Truncation, compute_truncation, derivative_numerators, multi_indices, truncated_annihilator,
)
from core.config import KappaConfig
from core.errors import (
    ConstantCurveError, CurveMissesOriginError, GenericityNotFoundError, InvalidArgumentError,
    InvariantViolationError, NotSquarefreeError, OrderCapExceededError, ReiffenParameterError,
    SingularAwayFromOriginError,
)
from groebner.dimension import INFINITE
from groebner.ideal import Ideal
from polyring.parser import parse_poly
from polyring.rational import rational
from polyring.ring import RingSpec
from weyl.char_ideal import char_ideal
from weyl.element import parse_operator
from weyl.groebner import WeylIdeal, is_left_groebner_basis
from weyl.twisted import TwistedPower, apply_to_twisted_power

XY = RingSpec(("x", "y"))
X = RingSpec(("x",))

# generators of Ann(f_{4,5}^-1): two of order 1, one of order 2
F45_GENERATORS = [
    "4*x^2*dx+5*x*y*dx+3*x*y*dy+4*y^2*dy+16*x+20*y",
    "16*x*y^2*dx+4*y^3*dx+12*y^3*dy-125*x*y*dx-4*x^2*dy+5*x*y*dy-100*y^2*dy+64*y^2-500*y",
    "16*y^3*dx^2-16*y^3*dx*dy+125*x*y*dx^2-35*x*y*dx*dy+100*y^2*dx*dy+12*x^2*dy^2-2*x*y*dy^2-24*y^2*dy^2"
    "+112*x*y*dx-36*y^2*dx+84*y^2*dy-930*x*dx+625*y*dx+26*x*dy-893*y*dy+448*y-3720",
]


def p(text, ring=XY):
    return parse_poly(text, ring)


def op(text, ring=XY):
    return parse_operator(text, ring)


def left(*texts, ring=XY):
    return WeylIdeal(ring, [op(t, ring) for t in texts])


@pytest.fixture(scope="module")
def f45_result():
    return kappa_and_annihilator(reiffen(4, 5))


@pytest.fixture(scope="module")
def cusp_result():
    return kappa_and_annihilator(p("x^2-y^3"))


class TestCurves:
    """Reiffen curves, multiplicities and validation"""

    def test_reiffen(self):
        assert reiffen(4, 5) == p("x^4+y^5+x*y^4")
        assert reiffen(7, 8) == p("x^7+y^8+x*y^7")

    @pytest.mark.parametrize("pq", [(4, 4), (3, 4), (5, 3)])
    def test_reiffen_parameters(self, pq):
        with pytest.raises(ReiffenParameterError) as exc_info:
            reiffen(*pq)
        assert exc_info.value.code == 8

    def test_curve_multiplicity(self):
        assert curve_multiplicity(p("x^2-y^3")) == 2
        assert curve_multiplicity(reiffen(4, 5)) == 4
        assert curve_multiplicity(p("x*y")) == 2

    def test_curve_multiplicity_at(self):
        assert curve_multiplicity_at(p("x^2-y^3"), [1, 1]) == 1
        assert curve_multiplicity_at(p("x^2-y^3"), [1, 0]) == 0

    def test_singular_locus(self):
        assert len(singular_locus(p("x^2-y^3")).generators) == 3

    def test_valid_singular(self):
        curve = validate_curve(p("x^2-y^3"))
        assert isinstance(curve, CurveInput)
        assert curve.singular_at_origin
        assert validate_curve(reiffen(4, 5)).singular_at_origin

    def test_valid_smooth(self):
        assert not validate_curve(p("x+y^2")).singular_at_origin

    def test_misses_origin(self):
        with pytest.raises(CurveMissesOriginError) as exc_info:
            validate_curve(p("x^2-y^3+1"))
        assert exc_info.value.code == 4
        assert exc_info.value.message == "curve does not pass through the origin"

    def test_constant(self):
        with pytest.raises(ConstantCurveError) as exc_info:
            validate_curve(p("3"))
        assert exc_info.value.code == 2

    def test_not_squarefree(self):
        with pytest.raises(NotSquarefreeError) as exc_info:
            validate_curve(p("(x-y)^2"))
        assert exc_info.value.code == 3

    def test_singular_away_from_origin(self):
        """y^2 = x(x-1)^2 has a node at (1,0)"""
        with pytest.raises(SingularAwayFromOriginError) as exc_info:
            validate_curve(p("y^2-x*(x-1)^2"))
        assert exc_info.value.code == 5
        assert exc_info.value.data["witness"]

    def test_needs_two_variables(self):
        with pytest.raises(InvalidArgumentError):
            validate_curve(p("x", X))


class TestTruncation:
    """Ann^(d)(f^a) from syzygies"""

    def test_multi_indices(self):
        assert multi_indices(2, 2) == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
        assert multi_indices(1, 3) == [(0,), (1,), (2,), (3,)]

    def test_numerators_of_cusp(self):
        assert derivative_numerators(p("x^2-y^3"), -1, 1) == [
            ((0, 0), p("x^2-y^3")), ((1, 0), p("-2*x")), ((0, 1), p("3*y^2")),
        ]

    def test_numerators_of_positive_power(self):
        assert derivative_numerators(p("x", X), 3, 1) == [((0,), p("x", X)), ((1,), p("3", X))]
        assert derivative_numerators(p("x", X), -1, 0) == [((0,), p("1", X))]

    def test_numerators_reject_constants(self):
        with pytest.raises(InvalidArgumentError):
            derivative_numerators(p("2"), -1, 1)

    def test_cusp_order_one(self):
        computed = truncated_annihilator(p("x^2-y^3"), -1, 1)
        expected = left("3*x*dx+2*y*dy+6", "3*y^2*dx+2*x*dy", "y^3*dy-x^2*dy+3*y^2")
        assert computed.equals(expected)

    def test_truncations_of_positive_power(self):
        """Ann^(1) = Ann^(2) = Ann^(3) = <x dx - 3> and dx^4 appears at order 4"""
        f = p("x", X)
        euler = left("x*dx-3", ring=X)
        for d in (1, 2, 3):
            assert truncated_annihilator(f, 3, d).equals(euler)
        assert truncated_annihilator(f, 3, 4).equals(left("x*dx-3", "dx^4", ring=X))

    def test_generators_annihilate(self):
        f = p("x^2-y^3")
        for g in truncated_annihilator(f, -1, 2).generators:
            assert apply_to_twisted_power(g, TwistedPower.power(f, -1)).is_zero()
            assert g.operator_order() <= 2

    def test_chain_inclusion(self):
        f = reiffen(4, 5)
        assert truncated_annihilator(f, -1, 2).contains_ideal(truncated_annihilator(f, -1, 1))

    def test_seeded_truncation_matches(self):
        f = p("x^2-y^3")
        first = compute_truncation(f, -1, 1)
        assert compute_truncation(f, -1, 2, previous=first).ideal.equals(compute_truncation(f, -1, 2).ideal)

    def test_seed_must_be_previous_order(self):
        f = p("x^2-y^3")
        with pytest.raises(InvalidArgumentError):
            compute_truncation(f, -1, 3, previous=compute_truncation(f, -1, 1))

    def test_printed_generators_of_f45(self):
        f = reiffen(4, 5)
        computed = truncated_annihilator(f, -1, 1)
        for text in F45_GENERATORS[:2]:
            g = op(text)
            assert apply_to_twisted_power(g, TwistedPower.power(f, -1)).is_zero()
            assert computed.contains(g)
        assert not computed.contains(op(F45_GENERATORS[2]))


class TestGenericity:
    """Planes over the origin"""

    def test_cusp(self):
        assert check_genericity(p("x^2-y^3"), 0, 1)
        assert not check_genericity(p("x^2-y^3"), 1, 0)
        assert check_genericity(p("x^2-y^3"), 1, 1)

    def test_zero_direction_rejected(self):
        with pytest.raises(InvalidArgumentError):
            check_genericity(p("x^2-y^3"), 0, 0)

    def test_conormal_contains_curve(self):
        ideal = conormal_ideal(p("x^2-y^3"))
        assert ideal.ring.names == ("x", "y", "xi", "eta")
        assert ideal.contains(parse_poly("x^2-y^3", ideal.ring))

    def test_ladder_prefix(self):
        assert list(islice(ladder(), 8)) == [(0, 1), (1, 0), (1, 1), (1, -1), (2, 1), (1, 2), (2, -1), (1, -2)]

    def test_ladder_directions_distinct(self):
        points = list(islice(ladder(), 60))
        assert len(set(points)) == len(points)
        assert all(gcd(a, b) == 1 for a, b in points)

    @pytest.mark.parametrize("p_value", [
        4, 5,
        pytest.param(6, marks=pytest.mark.slow),
        pytest.param(7, marks=pytest.mark.slow),
        pytest.param(8, marks=pytest.mark.slow),
    ])
    def test_reiffen_vertical_plane(self, p_value):
        assert check_genericity(reiffen(p_value, p_value + 1), 0, 1)


class TestLocalMultiplicity:
    """Multiplicity of the origin-primary component"""

    def test_examples(self):
        assert local_multiplicity_at_origin(Ideal(XY, [p("x"), p("y")])) == 1
        assert local_multiplicity_at_origin(Ideal(XY, [p("x*(x-1)"), p("y")])) == 1
        assert local_multiplicity_at_origin(Ideal(XY, [p("x^2"), p("y")])) == 2

    def test_origin_not_on_variety(self):
        assert local_multiplicity_at_origin(Ideal(XY, [p("x-1"), p("y")])) == 0

    def test_curve_through_origin(self):
        assert local_multiplicity_at_origin(Ideal(XY, [p("x")])) == UNDEFINED
        assert not is_finite(UNDEFINED)
        assert not is_finite(INFINITE)
        assert is_finite(3)

    def test_restrict_to_plane(self):
        char = char_ideal(left("x*dx+1", "dy"))
        restricted = restrict_to_plane(char, (0, 1))
        assert restricted.ring == XY
        assert restricted.is_unit()
        # xi = 1 leaves <x>, a line through the origin
        assert multiplicity_on_plane(char, (1, 0)) == UNDEFINED

    def test_reiffen_45(self):
        assert m_d(reiffen(4, 5), -1, 1, (0, 1)) == 4
        assert m_d(reiffen(4, 5), -1, 2, (0, 1)) == 3

    @pytest.mark.slow
    def test_reiffen_67(self):
        assert m_d(reiffen(6, 7), -1, 3, (0, 1)) == 5


class TestReports:
    """Per-order reports"""

    def test_order_above_d_rejected(self):
        with pytest.raises(InvariantViolationError):
            TruncationReport(1, [op("dx^2")], [], 0, (rational(0), rational(1)))

    def test_verify_annihilates(self):
        report = TruncationReport(1, [op("dx")], [], 0, (rational(0), rational(1)))
        with pytest.raises(InvariantViolationError):
            report.verify_annihilates(p("x^2-y^3"), -1)


class TestKappa:
    """The annihilator order of plane curves"""

    def test_cusp(self, cusp_result):
        assert cusp_result.kappa == 1
        assert cusp_result.m_trace == [1]
        assert cusp_result.curve_multiplicity == 2
        assert cusp_result.genericity_point == (rational(0), rational(1))
        assert cusp_result.holonomic and not cusp_result.smooth

    def test_cusp_annihilator(self, cusp_result):
        expected = left("3*x*dx+2*y*dy+6", "3*y^2*dx+2*x*dy", "y^3*dy-x^2*dy+3*y^2")
        assert annihilators_equal(cusp_result.annihilator, expected)

    def test_cusp_generators_are_reduced(self, cusp_result):
        printed = cusp_result.annihilator_generators()
        assert len(printed) == 3
        assert "y^3*dy-x^2*dy+3*y^2" in printed
        assert is_left_groebner_basis(cusp_result.annihilator.gens(), 2)
        assert cusp_result.trace[0].generators == cusp_result.annihilator.gens()

    def test_f45(self, f45_result):
        assert f45_result.kappa == 2
        assert f45_result.m_trace == [4, 3]
        assert f45_result.curve_multiplicity == 4

    def test_f45_annihilator(self, f45_result):
        f = reiffen(4, 5)
        for text in F45_GENERATORS:
            assert f45_result.annihilator.contains(op(text))
            assert apply_to_twisted_power(op(text), TwistedPower.power(f, -1)).is_zero()
        assert annihilators_equal(f45_result.annihilator, left(*F45_GENERATORS))
        assert len(f45_result.annihilator_generators()) == 3
        for g in f45_result.annihilator.generators:
            assert apply_to_twisted_power(g, TwistedPower.power(f, -1)).is_zero()

    def test_result_dict(self, f45_result):
        data = f45_result.to_dict()
        assert data["f"] == str(reiffen(4, 5))
        assert data["a"] == -1
        assert data["genericity_point"] == ["0", "1"]
        assert [row["m"] for row in data["trace"]] == [4, 3]
        assert [row["d"] for row in data["trace"]] == [1, 2]
        assert data["annihilator"] == [str(g) for g in f45_result.annihilator.groebner_basis()]
        assert all(row["elapsed_ms"] >= 0 for row in data["trace"])
        assert "total" in data["timings_ms"]

    def test_independent_of_q(self, f45_result):
        other = kappa_and_annihilator(reiffen(4, 6))
        assert other.kappa == f45_result.kappa
        assert other.m_trace == f45_result.m_trace

    def test_independent_of_point(self, cusp_result):
        other = kappa_and_annihilator(p("x^2-y^3"), KappaConfig(point=(rational(1), rational(1))))
        assert other.kappa == cusp_result.kappa
        assert annihilators_equal(other.annihilator, cusp_result.annihilator)

    def test_reuse_syzygies(self, f45_result):
        reused = kappa_and_annihilator(reiffen(4, 5), KappaConfig(reuse_syzygies=True))
        assert reused.m_trace == f45_result.m_trace
        assert annihilators_equal(reused.annihilator, f45_result.annihilator)

    def test_per_order_timings(self, f45_result):
        assert len(f45_result.d_timings_ms) == len(f45_result.m_trace) == f45_result.kappa
        assert all(ms > 0 for ms in f45_result.d_timings_ms)

    def test_annihilation_checked_without_invariants(self, monkeypatch):
        f = p("x^2-y^3")
        wrong = Truncation(f, -1, 1, left("dx", "dy"))
        monkeypatch.setattr("annihilator.kappa.compute_truncation", lambda *args: wrong)
        with pytest.raises(InvariantViolationError) as exc_info:
            kappa_and_annihilator(f, KappaConfig(check_invariants=False))
        assert exc_info.value.code == 10

    def test_smooth_curve(self):
        result = kappa_and_annihilator(p("x+y^2"))
        assert result.smooth
        assert result.kappa == 1

    def test_order_cap(self):
        with pytest.raises(OrderCapExceededError) as exc_info:
            kappa_and_annihilator(reiffen(4, 5), KappaConfig(max_d=1))
        assert exc_info.value.code == 6
        assert exc_info.value.data["trace"] == [{"d": 1, "m": 4}]

    def test_non_generic_point_override(self):
        with pytest.raises(GenericityNotFoundError) as exc_info:
            kappa_and_annihilator(p("x^2-y^3"), KappaConfig(point=(rational(1), rational(0))))
        assert exc_info.value.code == 7
        assert exc_info.value.data["rejected"] == ["1,0"]

    def test_invalid_curve(self):
        with pytest.raises(CurveMissesOriginError):
            kappa_and_annihilator(p("x^2-y^3+1"))

    @pytest.mark.parametrize("p_value,kappa,trace", [
        pytest.param(5, 2, [6, 4], marks=pytest.mark.slow),
        pytest.param(6, 3, [8, 6, 5], marks=pytest.mark.slow),
        pytest.param(7, 4, [10, 8, 7, 6], marks=pytest.mark.slow),
        pytest.param(8, 4, [12, 10, 9, 7], marks=pytest.mark.slow),
    ])
    def test_reiffen_sequence(self, p_value, kappa, trace):
        result = kappa_and_annihilator(reiffen(p_value, p_value + 1))
        assert result.kappa == kappa
        assert result.m_trace == trace
