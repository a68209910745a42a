"""Ideals of Q[x_1..x_n] with cached reduced Groebner bases"""
from typing import Dict, Iterable, List, Sequence, Tuple

from core.errors import RingMismatchError
from groebner.engine import BasisElement, CommutativeTerms, buchberger, is_groebner, reduce_terms
from polyring.orders import GREVLEX, MonomialOrder
from polyring.poly import Poly
from polyring.ring import RingSpec
from utils.cache_manager import get_groebner_cache


class Ideal:
    """Ideal given by generators; zero generators are dropped

    The reduced Groebner basis is computed on demand per order and written
    once; concurrent callers may both compute it, the first stored result wins.
    """

    def __init__(self, ring: RingSpec, generators: Iterable[Poly] = ()):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError(ring, g.ring)
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators: Tuple[Poly, ...] = tuple(gens)
        self._gb: Dict[MonomialOrder, Tuple[Poly, ...]] = {}

    @classmethod
    def unit(cls, ring: RingSpec) -> "Ideal":
        return cls(ring, [Poly.one(ring)])

    @classmethod
    def zero(cls, ring: RingSpec) -> "Ideal":
        return cls(ring, [])

    def groebner_basis(self, order: MonomialOrder = GREVLEX) -> List[Poly]:
        cached = self._gb.get(order)
        if cached is None:
            cached = self._gb.setdefault(order, tuple(_compute_gb(self.ring, self.generators, order)))
        return list(cached)

    def gens(self) -> List[Poly]:
        """Minimal generators for printing: the reduced grevlex basis, descending"""
        return self.groebner_basis(GREVLEX)

    def leading_monomials(self, order: MonomialOrder = GREVLEX) -> List[Tuple[int, ...]]:
        return [g.leading_monomial(order) for g in self.groebner_basis(order)]

    def normal_form(self, p: Poly, order: MonomialOrder = GREVLEX) -> Poly:
        return normal_form(p, self.groebner_basis(order), order)

    def contains(self, p: Poly) -> bool:
        if p.ring != self.ring:
            raise RingMismatchError(self.ring, p.ring)
        return self.normal_form(p).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def equals(self, other: "Ideal") -> bool:
        if other.ring != self.ring:
            raise RingMismatchError(self.ring, other.ring)
        return self.groebner_basis() == other.groebner_basis()

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self) -> bool:
        return not self.generators

    def vanishes_at_origin(self) -> bool:
        """origin in V(I)"""
        return all(g.constant_coefficient() == 0 for g in self.generators)

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatchError(self.ring, other.ring)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatchError(self.ring, other.ring)
        return Ideal(self.ring, [a * b for a in self.generators for b in other.generators])

    def __repr__(self) -> str:
        return f"Ideal({', '.join(str(g) for g in self.generators)})"


def _compute_gb(ring: RingSpec, generators: Sequence[Poly], order: MonomialOrder) -> List[Poly]:
    cache = get_groebner_cache()
    key = (ring, tuple(generators), order)
    hit = cache.get(key)
    if hit is not None:
        return list(hit)
    algebra = CommutativeTerms(order)
    basis = buchberger([g.to_dict() for g in generators], algebra)
    result = tuple(Poly.from_terms(ring, b.terms) for b in basis)
    return list(cache.set(key, result))


def groebner_basis(ideal: Ideal, order: MonomialOrder = GREVLEX) -> List[Poly]:
    return ideal.groebner_basis(order)


def normal_form(p: Poly, gb: Sequence[Poly], order: MonomialOrder = GREVLEX) -> Poly:
    """Remainder of p modulo a Groebner basis (need not be monic)"""
    algebra = CommutativeTerms(order)
    basis = []
    for g in gb:
        if g.ring != p.ring:
            raise RingMismatchError(p.ring, g.ring)
        if g.is_zero():
            continue
        basis.append(BasisElement(g.leading_monomial(order), g.monic(order).to_dict()))
    return Poly.from_terms(p.ring, reduce_terms(p.to_dict(), basis, algebra))


def membership(p: Poly, ideal: Ideal) -> bool:
    return ideal.contains(p)


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    return a.equals(b)


def ideal_contains_ideal(a: Ideal, b: Ideal) -> bool:
    return a.contains_ideal(b)


def is_groebner_basis(gb: Sequence[Poly], order: MonomialOrder = GREVLEX) -> bool:
    algebra = CommutativeTerms(order)
    basis = [BasisElement(g.leading_monomial(order), g.monic(order).to_dict()) for g in gb if not g.is_zero()]
    return is_groebner(basis, algebra)
