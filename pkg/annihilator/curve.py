"""Plane curve inputs: the Reiffen family, multiplicities and validation"""
from dataclasses import dataclass
from typing import Sequence

from core.errors import (
    ConstantCurveError, CurveMissesOriginError, InvalidArgumentError, NotSquarefreeError,
    ReiffenParameterError, SingularAwayFromOriginError,
)
from core.logging_config import get_logger
from groebner.ideal import Ideal
from groebner.operations import is_squarefree, saturate_by_ideal
from polyring.poly import Poly
from polyring.ring import RingSpec

logger = get_logger("annihilator.curve")

PLANE = RingSpec(("x", "y"))


@dataclass(frozen=True)
class CurveInput:
    """A validated curve f with f(0,0) = 0 and no singular points off the origin"""

    f: Poly
    exponent: int = -1
    singular_at_origin: bool = True

    @property
    def ring(self) -> RingSpec:
        return self.f.ring


def reiffen(p: int, q: int, ring: RingSpec = PLANE) -> Poly:
    """x^p + y^q + x*y^(q-1)"""
    if p < 4 or q < p + 1:
        raise ReiffenParameterError(p, q)
    return Poly(ring, {(p, 0): 1, (0, q): 1, (1, q - 1): 1})


def curve_multiplicity(f: Poly) -> int:
    """Order of vanishing at the origin"""
    if f.is_zero():
        raise ConstantCurveError(f)
    if f.constant_coefficient() != 0:
        raise CurveMissesOriginError(f)
    return f.min_total_degree()


def curve_multiplicity_at(f: Poly, point: Sequence[object]) -> int:
    """Order of vanishing at point (0 when f(point) != 0)"""
    shifted = f.translate(point)
    if shifted.is_zero():
        raise ConstantCurveError(f)
    return shifted.min_total_degree()


def singular_locus(f: Poly) -> Ideal:
    """<f, df/dx_1, ..., df/dx_n>"""
    return Ideal(f.ring, [f] + [f.derivative(i) for i in range(f.ring.arity)])


def validate_curve(f: Poly, exponent: int = -1) -> CurveInput:
    if f.ring.arity != 2:
        raise InvalidArgumentError("f", "a polynomial in two variables", str(f.ring))
    if f.is_zero() or f.is_constant():
        raise ConstantCurveError(f)
    if not is_squarefree(f):
        raise NotSquarefreeError(f)
    if f.constant_coefficient() != 0:
        raise CurveMissesOriginError(f)

    ring = f.ring
    away = saturate_by_ideal(singular_locus(f), [Poly.variable(ring, 0), Poly.variable(ring, 1)])
    if not away.is_unit():
        raise SingularAwayFromOriginError(f, away.gens())

    origin = ring.zero_vector()
    singular = all(f.derivative(i).evaluate(origin) == 0 for i in range(ring.arity))
    logger.debug(f"validated {f}: origin {'singular' if singular else 'smooth'}")
    return CurveInput(f, exponent, singular)
