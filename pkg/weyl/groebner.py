"""Left Groebner bases in A_n for the order-filtration weight (0, e)"""
from typing import Iterable, List, Optional, Tuple

from core.errors import RingMismatchError
from core.logging_config import get_logger
from groebner.engine import BasisElement, EngineStats, TermAlgebra, buchberger, is_groebner, reduce_terms
from polyring.orders import MonomialOrder
from polyring.rational import ONE
from polyring.ring import RingSpec
from utils.cache_manager import get_groebner_cache
from weyl.element import WeylElement, left_multiply_terms, weyl_order

logger = get_logger("weyl.groebner")


class WeylTerms(TermAlgebra):
    """Left multiplication by x^alpha d^beta

    Commutator corrections have lower operator order, so under weyl_order the
    leading monomial of m*g is m times the leading monomial of g. The product
    criterion does not hold here; only the chain criterion is used.
    """

    product_criterion = False

    def __init__(self, n: int, order: Optional[MonomialOrder] = None):
        self.n = n
        self.order = order or weyl_order(n)

    def key(self, m):
        return self.order.key(m)

    def shift(self, f, q, c):
        return left_multiply_terms(q, c, f, self.n)


def _compute_left_gb(ring: RingSpec, generators: Tuple[WeylElement, ...],
                     stats: Optional[EngineStats]) -> Tuple[WeylElement, ...]:
    cache = get_groebner_cache()
    key = ("weyl", ring, generators)
    hit = cache.get(key)
    if hit is not None:
        return hit
    algebra = WeylTerms(ring.arity)
    basis = buchberger([g.to_dict() for g in generators], algebra, stats=stats)
    result = tuple(WeylElement.from_terms(ring, b.terms) for b in basis)
    logger.debug(f"left GB: {len(generators)} generators -> {len(result)} elements")
    return cache.set(key, result)


def _as_basis(gb: Iterable[WeylElement]) -> List[BasisElement]:
    return [BasisElement(g.leading_monomial(), g.monic().to_dict()) for g in gb if not g.is_zero()]


class WeylIdeal:
    """Left ideal of A_n; the reduced left Groebner basis is cached write-once"""

    def __init__(self, ring: RingSpec, generators: Iterable[WeylElement] = ()):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError(ring, g.ring)
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators: Tuple[WeylElement, ...] = tuple(gens)
        self._gb: Optional[Tuple[WeylElement, ...]] = None
        self.stats = EngineStats()

    def groebner_basis(self) -> List[WeylElement]:
        if self._gb is None:
            self._gb = _compute_left_gb(self.ring, self.generators, self.stats)
        return list(self._gb)

    def gens(self) -> List[WeylElement]:
        """Minimal generators for printing: the reduced left basis, descending"""
        return self.groebner_basis()

    def normal_form(self, p: WeylElement) -> WeylElement:
        if p.ring != self.ring:
            raise RingMismatchError(self.ring, p.ring)
        algebra = WeylTerms(self.ring.arity)
        return WeylElement.from_terms(
            self.ring, reduce_terms(p.to_dict(), _as_basis(self.groebner_basis()), algebra))

    def contains(self, p: WeylElement) -> bool:
        return self.normal_form(p).is_zero()

    def contains_ideal(self, other: "WeylIdeal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def equals(self, other: "WeylIdeal") -> bool:
        if other.ring != self.ring:
            raise RingMismatchError(self.ring, other.ring)
        return self.groebner_basis() == other.groebner_basis()

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0] == WeylElement.one(self.ring)

    def is_zero(self) -> bool:
        return not self.generators

    def __repr__(self) -> str:
        return f"WeylIdeal({', '.join(str(g) for g in self.generators)})"


def weyl_groebner(ideal: WeylIdeal) -> List[WeylElement]:
    return ideal.groebner_basis()


def weyl_membership(p: WeylElement, ideal: WeylIdeal) -> bool:
    return ideal.contains(p)


def weyl_ideal_equal(a: WeylIdeal, b: WeylIdeal) -> bool:
    return a.equals(b)


def is_left_groebner_basis(gb: Iterable[WeylElement], n: int) -> bool:
    return is_groebner(_as_basis(gb), WeylTerms(n))


def left_multiple(m: Tuple[int, ...], g: WeylElement) -> WeylElement:
    """x^alpha d^beta * g"""
    return WeylElement.from_terms(g.ring, left_multiply_terms(m, ONE, g.to_dict(), g.ring.arity))
