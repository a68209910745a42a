"""Intersection, elimination, colon ideals, saturation and squarefreeness"""
from typing import Sequence, Tuple

from core.errors import InvalidArgumentError, RingMismatchError, ZeroPolynomialError
from core.logging_config import get_logger
from groebner.ideal import Ideal
from polyring.orders import Block
from polyring.poly import Poly, divide_exact
from polyring.ring import RingSpec, fresh_name

logger = get_logger("groebner.operations")


def _reindex(p: Poly, target: RingSpec, positions: Sequence[int]) -> Poly:
    """Move variable i of p to position positions[i] of target (unused slots get 0)"""
    out = {}
    width = target.arity
    for m, c in p.to_dict().items():
        k = [0] * width
        for i, e in enumerate(m):
            k[positions[i]] = e
        out[tuple(k)] = c
    return Poly.from_terms(target, out)


def eliminate(ideal: Ideal, front: Sequence[int]) -> Ideal:
    """I intersected with the subring of the variables not in front

    The result lives in the ring with the eliminated variables removed.
    """
    ring = ideal.ring
    drop = sorted(set(front))
    for i in drop:
        ring.check_index(i)
    keep = [i for i in range(ring.arity) if i not in drop]
    if not drop:
        return ideal
    if not keep:
        raise InvalidArgumentError("front", "a proper subset of the variables", drop)

    # eliminated variables first, then a block order
    permuted = RingSpec(tuple(ring.names[i] for i in drop + keep))
    positions = [0] * ring.arity
    for new, old in enumerate(drop + keep):
        positions[old] = new
    lifted = Ideal(permuted, [_reindex(g, permuted, positions) for g in ideal.generators])
    k = len(drop)
    basis = lifted.groebner_basis(Block(k))
    target = ring.without(drop)
    survivors = []
    for g in basis:
        if g.variables_used() and min(g.variables_used()) < k:
            continue
        survivors.append(Poly.from_terms(target, {m[k:]: c for m, c in g.to_dict().items()}))
    logger.debug(f"eliminate {[ring.names[i] for i in drop]}: {len(basis)} -> {len(survivors)}")
    return Ideal(target, survivors)


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """I cap J as the t-free part of tI + (1-t)J"""
    if a.ring != b.ring:
        raise RingMismatchError(a.ring, b.ring)
    ring = a.ring
    if a.is_zero() or b.is_zero():
        return Ideal.zero(ring)
    if a.is_unit():
        return b
    if b.is_unit():
        return a
    extended = ring.with_front([fresh_name(ring)])
    shift = list(range(1, extended.arity))
    t = Poly.variable(extended, 0)
    one_minus_t = 1 - t
    gens = [t * _reindex(g, extended, shift) for g in a.generators]
    gens += [one_minus_t * _reindex(g, extended, shift) for g in b.generators]
    return eliminate(Ideal(extended, gens), [0])


def ideal_quotient(ideal: Ideal, g: Poly) -> Ideal:
    """I : g, as (I cap <g>) / g"""
    if g.is_zero():
        raise ZeroPolynomialError("ideal_quotient")
    if g.ring != ideal.ring:
        raise RingMismatchError(ideal.ring, g.ring)
    if g.is_constant():
        return ideal
    meet = intersect(ideal, Ideal(ideal.ring, [g]))
    return Ideal(ideal.ring, [divide_exact(h, g) for h in meet.groebner_basis()])


def saturate_by_poly(ideal: Ideal, g: Poly) -> Tuple[Ideal, int]:
    """I : g^infinity and the exponent k at which the quotients stabilize"""
    current = ideal
    k = 0
    while True:
        following = ideal_quotient(current, g)
        if following.equals(current):
            return current, k
        current = following
        k += 1


def saturate_by_ideal(ideal: Ideal, gens: Sequence[Poly]) -> Ideal:
    """I : <gens>^infinity as the intersection of the I : g^infinity"""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise InvalidArgumentError("gens", "nonzero generators", "[]")
    result = None
    for g in gens:
        sat, _ = saturate_by_poly(ideal, g)
        result = sat if result is None else intersect(result, sat)
    return result


def lcm(a: Poly, b: Poly) -> Poly:
    meet = intersect(Ideal(a.ring, [a]), Ideal(b.ring, [b])).groebner_basis()
    return meet[0]


def gcd(a: Poly, b: Poly) -> Poly:
    """gcd up to a scalar: ab / lcm(a, b)"""
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.is_constant() or b.is_constant():
        return Poly.one(a.ring)
    return divide_exact(a * b, lcm(a, b))


def is_squarefree(f: Poly) -> bool:
    """gcd(f, df/dx_1, ..., df/dx_n) is constant"""
    if f.is_zero() or f.is_constant():
        raise InvalidArgumentError("f", "nonconstant polynomial", str(f))
    common = f
    for i in range(f.ring.arity):
        common = gcd(common, f.derivative(i))
        if common.is_constant():
            return True
    return common.is_constant()
