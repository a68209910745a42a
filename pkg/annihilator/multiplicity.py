"""Local multiplicity m^(d) at the origin without primary decomposition"""
from typing import Sequence, Union

from annihilator.truncation import truncated_annihilator
from core.logging_config import get_logger
from groebner.dimension import INFINITE, quotient_vector_space_dim
from groebner.ideal import Ideal
from groebner.operations import saturate_by_ideal, saturate_by_poly
from polyring.poly import Poly
from polyring.rational import rational
from weyl.char_ideal import CharIdeal, char_ideal

logger = get_logger("annihilator.multiplicity")

UNDEFINED = "undefined"

Multiplicity = Union[int, str]


def local_multiplicity_at_origin(ideal: Ideal) -> Multiplicity:
    """Length of the origin-primary component of a plane ideal

    0 when the origin is not on V(J); "undefined" when a positive-dimensional
    component passes through the origin.
    """
    if not ideal.vanishes_at_origin():
        return 0
    ring = ideal.ring
    coordinates = [Poly.variable(ring, i) for i in range(ring.arity)]
    away = saturate_by_ideal(ideal, coordinates)
    # every element of J : m^inf vanishes at 0 iff all its generators do
    unit = next((s for s in away.groebner_basis() if s.constant_coefficient() != 0), None)
    if unit is None:
        return UNDEFINED
    local, k = saturate_by_poly(ideal, unit)
    length = quotient_vector_space_dim(local)
    logger.debug(f"local multiplicity: separator {unit} (k={k}) -> {length}")
    return length


def restrict_to_plane(char: CharIdeal, point: Sequence[object]) -> Ideal:
    """Substitute xi -> a, eta -> b into the generators of gr(I)"""
    n = char.ring.arity // 2
    assignment = {n + i: rational(v) for i, v in enumerate(point)}
    restricted = [g.substitute(assignment) for g in char.generators]
    base = char.ring.without(assignment)
    return Ideal(base, [g for g in restricted if not g.is_zero()])


def multiplicity_on_plane(char: CharIdeal, point: Sequence[object]) -> Multiplicity:
    return local_multiplicity_at_origin(restrict_to_plane(char, point))


def m_d(f: Poly, a: int, d: int, point: Sequence[object]) -> Multiplicity:
    """m^(d): multiplicity at (0, 0) of gr(Ann^(d)(f^a)) cut by the plane at point"""
    return multiplicity_on_plane(char_ideal(truncated_annihilator(f, a, d)), point)


def is_finite(value: Multiplicity) -> bool:
    return value not in (INFINITE, UNDEFINED)
