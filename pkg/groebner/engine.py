"""Buchberger kernel shared by ideals, submodules and Weyl left ideals

Elements are plain dicts {monomial: coefficient}. What a "monomial" is and
how an element is multiplied by one is delegated to a TermAlgebra, so the
same pair queue, criteria, reduction and interreduction serve
    - commutative ideals         (CommutativeTerms)
    - submodules of R^N          (ModuleTerms, position over term)
    - left ideals of A_n         (weyl.groebner.WeylTerms)
"""
import heapq
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from core.logging_config import get_logger
from polyring.orders import MonomialOrder
from polyring.rational import ONE, Rational

logger = get_logger("groebner.engine")

Monomial = Tuple[int, ...]
TermDict = Dict[Monomial, Rational]


class TermAlgebra(ABC):
    """Monomial arithmetic needed by the Buchberger kernel

    Subclasses must define:
        key(m)         - flat int tuple, larger means greater in the term order
        shift(f, q, c) - c * (q . f) for a multiplier q returned by quotient()

    product_criterion: bool - coprime leading monomials may be skipped
        (valid for commutative ideals only)
    """

    product_criterion: bool = False

    @abstractmethod
    def key(self, m: Monomial) -> Tuple[int, ...]:
        pass

    @abstractmethod
    def shift(self, f: TermDict, q: Monomial, c: Rational) -> TermDict:
        pass

    def divides(self, a: Monomial, b: Monomial) -> bool:
        return all(x <= y for x, y in zip(a, b))

    def quotient(self, b: Monomial, a: Monomial) -> Monomial:
        return tuple(y - x for x, y in zip(a, b))

    def lcm(self, a: Monomial, b: Monomial) -> Optional[Monomial]:
        return tuple(max(x, y) for x, y in zip(a, b))

    def coprime(self, a: Monomial, b: Monomial) -> bool:
        return all(not (x and y) for x, y in zip(a, b))

    def leading(self, f: TermDict) -> Monomial:
        return max(f, key=self.key)


class CommutativeTerms(TermAlgebra):
    """Q[x_1..x_n] under a monomial order"""

    product_criterion = True

    def __init__(self, order: MonomialOrder):
        self.order = order

    def key(self, m):
        return self.order.key(m)

    def shift(self, f, q, c):
        return {tuple(a + b for a, b in zip(m, q)): v * c for m, v in f.items()}


class ModuleTerms(TermAlgebra):
    """Free module R^N, monomials (slot,) + exponents, position over term

    Lower slots are greater, so slot 0 leads whenever it is nonzero.
    """

    def __init__(self, order: MonomialOrder):
        self.order = order

    def key(self, m):
        return (-m[0],) + self.order.key(m[1:])

    def divides(self, a, b):
        return a[0] == b[0] and all(x <= y for x, y in zip(a[1:], b[1:]))

    def quotient(self, b, a):
        return tuple(y - x for x, y in zip(a[1:], b[1:]))

    def lcm(self, a, b):
        if a[0] != b[0]:
            return None
        return (a[0],) + tuple(max(x, y) for x, y in zip(a[1:], b[1:]))

    def coprime(self, a, b):
        return False

    def shift(self, f, q, c):
        return {(m[0],) + tuple(a + b for a, b in zip(m[1:], q)): v * c for m, v in f.items()}


@dataclass
class BasisElement:
    lm: Monomial
    terms: TermDict


@dataclass
class EngineStats:
    pairs_created: int = 0
    pairs_reduced: int = 0
    skipped_product: int = 0
    skipped_chain: int = 0
    zero_reductions: int = 0


def _neg(key: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(-k for k in key)


def _find_reducer(m: Monomial, basis: Sequence[BasisElement], algebra: TermAlgebra) -> Optional[BasisElement]:
    for g in basis:
        if algebra.divides(g.lm, m):
            return g
    return None


def reduce_terms(f: TermDict, basis: Sequence[BasisElement], algebra: TermAlgebra) -> TermDict:
    """Full normal form of f modulo a list of monic basis elements

    No term of the result is divisible by a leading monomial of the basis.
    """
    work = dict(f)
    heap = [(_neg(algebra.key(m)), m) for m in work]
    heapq.heapify(heap)
    remainder: TermDict = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = work.get(m)
        if c is None:
            continue
        g = _find_reducer(m, basis, algebra)
        if g is None:
            del work[m]
            remainder[m] = c
            continue
        q = algebra.quotient(m, g.lm)
        for k, v in algebra.shift(g.terms, q, -c).items():
            old = work.get(k)
            if old is None:
                work[k] = v
                heapq.heappush(heap, (_neg(algebra.key(k)), k))
            else:
                value = old + v
                if value:
                    work[k] = value
                else:
                    del work[k]
    return remainder


def make_monic(f: TermDict, algebra: TermAlgebra) -> BasisElement:
    lm = algebra.leading(f)
    lc = f[lm]
    if lc == 1:
        return BasisElement(lm, dict(f))
    inv = ONE / lc
    return BasisElement(lm, {m: v * inv for m, v in f.items()})


def s_polynomial(a: BasisElement, b: BasisElement, lcm: Monomial, algebra: TermAlgebra) -> TermDict:
    out = algebra.shift(a.terms, algebra.quotient(lcm, a.lm), ONE)
    for m, v in algebra.shift(b.terms, algebra.quotient(lcm, b.lm), -ONE).items():
        value = out.get(m, 0) + v
        if value:
            out[m] = value
        else:
            out.pop(m, None)
    return out


def interreduce(basis: Sequence[BasisElement], algebra: TermAlgebra) -> List[BasisElement]:
    """Reduced basis: minimal leading monomials, reduced tails, descending order"""
    minimal = [
        g for i, g in enumerate(basis)
        if not any(j != i and algebra.divides(h.lm, g.lm) and (h.lm != g.lm or j < i)
                   for j, h in enumerate(basis))
    ]
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        tail = {m: v for m, v in g.terms.items() if m != g.lm}
        tail = reduce_terms(tail, others, algebra)
        tail[g.lm] = g.terms[g.lm]
        reduced.append(BasisElement(g.lm, tail))
    reduced.sort(key=lambda g: algebra.key(g.lm), reverse=True)
    return reduced


def buchberger(generators: Sequence[TermDict], algebra: TermAlgebra, seed: Sequence[TermDict] = (),
               stats: Optional[EngineStats] = None) -> List[BasisElement]:
    """Reduced Groebner basis of the object generated by generators (and seed)

    Normal selection strategy (smallest lcm first, ties by pair index) keeps the
    output deterministic. The chain criterion is always on; the product
    criterion only when the algebra allows it.
    """
    stats = stats if stats is not None else EngineStats()
    basis: List[BasisElement] = []
    heap: List[Tuple[Tuple[int, ...], int, int, Monomial]] = []
    pending = set()

    def add(h: TermDict) -> None:
        g = make_monic(h, algebra)
        idx = len(basis)
        basis.append(g)
        for i in range(idx):
            lcm = algebra.lcm(basis[i].lm, g.lm)
            if lcm is None:
                continue
            stats.pairs_created += 1
            if algebra.product_criterion and algebra.coprime(basis[i].lm, g.lm):
                stats.skipped_product += 1
                continue
            pending.add((i, idx))
            heapq.heappush(heap, (algebra.key(lcm), i, idx, lcm))

    for f in list(seed) + list(generators):
        if not f:
            continue
        h = reduce_terms(f, basis, algebra)
        if h:
            add(h)

    while heap:
        _, i, j, lcm = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        if _chain_skips(i, j, lcm, basis, pending, algebra):
            stats.skipped_chain += 1
            continue
        stats.pairs_reduced += 1
        h = reduce_terms(s_polynomial(basis[i], basis[j], lcm, algebra), basis, algebra)
        if h:
            add(h)
        else:
            stats.zero_reductions += 1

    logger.debug(f"buchberger: {len(basis)} elements, pairs={stats.pairs_created} "
                 f"reduced={stats.pairs_reduced} product={stats.skipped_product} "
                 f"chain={stats.skipped_chain}")
    return interreduce(basis, algebra)


def _chain_skips(i: int, j: int, lcm: Monomial, basis: Sequence[BasisElement],
                 pending: set, algebra: TermAlgebra) -> bool:
    for k, g in enumerate(basis):
        if k == i or k == j or not algebra.divides(g.lm, lcm):
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def is_groebner(basis: Sequence[BasisElement], algebra: TermAlgebra) -> bool:
    """Every S-pair reduces to zero"""
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            lcm = algebra.lcm(basis[i].lm, basis[j].lm)
            if lcm is None:
                continue
            if reduce_terms(s_polynomial(basis[i], basis[j], lcm, algebra), basis, algebra):
                return False
    return True
