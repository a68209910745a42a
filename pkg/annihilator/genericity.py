"""Genericity of the plane {xi = a, eta = b} for the conormal variety at the origin"""
from math import gcd
from typing import Iterator, Tuple

from core.errors import InvalidArgumentError
from core.logging_config import get_logger
from groebner.ideal import Ideal
from groebner.modules import syzygies
from groebner.operations import saturate_by_ideal
from polyring.poly import Poly
from polyring.rational import Rational, rational
from weyl.element import symbol_ring

logger = get_logger("annihilator.genericity")

Point = Tuple[Rational, Rational]


def _lift(p: Poly, target) -> Poly:
    zeros = (0,) * (target.arity - p.ring.arity)
    return Poly.from_terms(target, {m + zeros: c for m, c in p.terms()})


def conormal_ideal(f: Poly) -> Ideal:
    """<u*xi + v*eta : u f_x + v f_y = 0> + <f> in Q[x, y, xi, eta]"""
    ring = f.ring
    target = symbol_ring(ring)
    xi = Poly.variable(target, 2)
    eta = Poly.variable(target, 3)
    relations = syzygies([f.derivative(0), f.derivative(1)])
    gens = [_lift(f, target)]
    for rel in relations:
        gens.append(_lift(rel[0], target) * xi + _lift(rel[1], target) * eta)
    return Ideal(target, gens)


def check_genericity(f: Poly, a: object, b: object) -> bool:
    """True when (0, 0, a, b) lies outside the closure of the conormal over the curve minus the origin"""
    a, b = rational(a), rational(b)
    if not a and not b:
        raise InvalidArgumentError("point", "a nonzero direction", "0,0")
    ideal = conormal_ideal(f)
    target = ideal.ring
    closure = saturate_by_ideal(ideal, [Poly.variable(target, 0), Poly.variable(target, 1)])
    point = (0, 0, a, b)
    generic = any(g.evaluate(point) != 0 for g in closure.groebner_basis())
    logger.debug(f"genericity of ({a},{b}) for {f}: {generic}")
    return generic


def ladder() -> Iterator[Tuple[int, int]]:
    """(0,1), (1,0), (1,1), (1,-1), (2,1), (1,2), (2,-1), (1,-2), (3,1), ...

    One representative per direction, small heights first.
    """
    yield 0, 1
    yield 1, 0
    yield 1, 1
    yield 1, -1
    h = 2
    while True:
        for k in range(1, h):
            if gcd(h, k) == 1:
                yield h, k
                yield k, h
                yield h, -k
                yield k, -h
        h += 1
