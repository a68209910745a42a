"""Characteristic ideals gr(I) in the symbol ring"""
from dataclasses import dataclass
from typing import List

from groebner.dimension import krull_dimension
from groebner.ideal import Ideal
from polyring.poly import Poly
from polyring.ring import RingSpec
from weyl.element import WeylElement, symbol_ring
from weyl.groebner import WeylIdeal


@dataclass(frozen=True)
class CharIdeal:
    """gr(I) in Q[x, xi]"""

    ring: RingSpec
    ideal: Ideal

    @property
    def generators(self) -> List[Poly]:
        return self.ideal.gens()

    def dimension(self) -> int:
        return krull_dimension(self.ideal)

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.generators) + ">"


def char_ideal(ideal: WeylIdeal) -> CharIdeal:
    """Principal symbols of a left Groebner basis under the (0, e) order

    The order refines the weight, so these symbols generate gr(I).
    """
    target = symbol_ring(ideal.ring)
    symbols = [g.principal_symbol() for g in ideal.groebner_basis()]
    return CharIdeal(target, Ideal(target, symbols))


def is_holonomic(ideal: WeylIdeal) -> bool:
    """dim gr(I) = n, or I is the unit ideal"""
    if ideal.is_unit():
        return True
    return char_ideal(ideal).dimension() == ideal.ring.arity


def rational_annihilator(f: Poly, a: int) -> List[WeylElement]:
    """The operators f*d_i - a*df/dx_i, each killing f^a"""
    ring = f.ring
    ops = []
    for i in range(ring.arity):
        ops.append(WeylElement.from_poly(f) * WeylElement.d(ring, i)
                   - WeylElement.from_poly(f.derivative(i).scale(a)))
    return ops
