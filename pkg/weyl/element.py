"""Differential operators in normal form x^alpha d^beta

A WeylElement over the commutative ring Q[x_1..x_n] stores terms keyed by the
concatenated exponent vector alpha + beta (length 2n). The same vectors are the
exponents of the symbol ring Q[x_1..x_n, xi_1..xi_n], so principal symbols are
read off without re-indexing.
"""
from functools import lru_cache
from math import comb, perm
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from core.errors import InvalidArgumentError, RingMismatchError, ZeroPolynomialError
from polyring.orders import MonomialOrder, WeightedGrevLex
from polyring.parser import ExpressionParser
from polyring.poly import Poly, format_terms
from polyring.rational import ONE, Rational, rational
from polyring.ring import RingSpec

WeylMonomial = Tuple[int, ...]
WeylTermDict = Dict[WeylMonomial, Rational]

_SYMBOL_NAMES = ("xi", "eta", "zeta")


def weyl_order(n: int) -> MonomialOrder:
    """Weight (0, e): operator order first, GrevLex on all 2n exponents as tiebreak"""
    return WeightedGrevLex((0,) * n + (1,) * n)


def operator_names(ring: RingSpec) -> Tuple[str, ...]:
    """Printed names: the variables, then d<var> for each derivation"""
    derivations = tuple("d" + name for name in ring.names)
    clash = set(derivations) & set(ring.names)
    if clash:
        raise InvalidArgumentError("variables", "names whose d-prefixed forms are unused",
                                   ",".join(sorted(clash)))
    return ring.names + derivations


def symbol_ring(ring: RingSpec) -> RingSpec:
    """Q[x_1..x_n, xi_1..xi_n]; xi, eta, zeta for up to three variables"""
    if ring.arity <= len(_SYMBOL_NAMES) and not set(_SYMBOL_NAMES) & set(ring.names):
        symbols = _SYMBOL_NAMES[:ring.arity]
    else:
        symbols = tuple(f"xi_{name}" for name in ring.names)
    return RingSpec(ring.names + symbols)


@lru_cache(maxsize=4096)
def _commute(b: int, c: int) -> Tuple[Tuple[int, int], ...]:
    """d^b x^c = sum_k coeff_k x^(c-k) d^(b-k), as (k, coeff_k)"""
    return tuple((k, comb(b, k) * perm(c, k)) for k in range(min(b, c) + 1))


def _monomial_product(m1: WeylMonomial, m2: WeylMonomial, n: int) -> List[Tuple[WeylMonomial, int]]:
    """(x^a d^b)(x^c d^e) in normal form, integer coefficients"""
    partial: List[Tuple[List[int], List[int], int]] = [([], [], 1)]
    for i in range(n):
        a, b = m1[i], m1[n + i]
        c, e = m2[i], m2[n + i]
        expanded = []
        for xs, ds, coeff in partial:
            for k, v in _commute(b, c):
                expanded.append((xs + [a + c - k], ds + [b + e - k], coeff * v))
        partial = expanded
    return [(tuple(xs + ds), coeff) for xs, ds, coeff in partial]


class WeylElement:
    """Element of A_n in normal form; immutable"""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Optional[Mapping[Sequence[int], object]] = None):
        clean: WeylTermDict = {}
        width = 2 * ring.arity
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != width or any(e < 0 for e in m):
                raise InvalidArgumentError("exponent vector", f"{width} nonnegative ints", m)
            c = rational(c)
            if c:
                clean[m] = clean.get(m, 0) + c
        self.ring = ring
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    @classmethod
    def from_terms(cls, ring: RingSpec, clean: WeylTermDict) -> "WeylElement":
        w = cls.__new__(cls)
        w.ring = ring
        w._terms = {m: c for m, c in clean.items() if c}
        w._hash = None
        return w

    @classmethod
    def zero(cls, ring: RingSpec) -> "WeylElement":
        return cls.from_terms(ring, {})

    @classmethod
    def constant(cls, ring: RingSpec, c: object) -> "WeylElement":
        return cls(ring, {(0,) * (2 * ring.arity): c})

    @classmethod
    def one(cls, ring: RingSpec) -> "WeylElement":
        return cls.constant(ring, 1)

    @classmethod
    def x(cls, ring: RingSpec, index: int) -> "WeylElement":
        ring.check_index(index)
        m = [0] * (2 * ring.arity)
        m[index] = 1
        return cls.from_terms(ring, {tuple(m): ONE})

    @classmethod
    def d(cls, ring: RingSpec, index: int) -> "WeylElement":
        ring.check_index(index)
        m = [0] * (2 * ring.arity)
        m[ring.arity + index] = 1
        return cls.from_terms(ring, {tuple(m): ONE})

    @classmethod
    def from_poly(cls, p: Poly) -> "WeylElement":
        """Multiplication by a polynomial"""
        zeros = (0,) * p.ring.arity
        return cls.from_terms(p.ring, {m + zeros: c for m, c in p.terms()})

    @classmethod
    def from_coefficients(cls, ring: RingSpec, coefficients: Iterable[Tuple[Sequence[int], Poly]]) -> "WeylElement":
        """sum c_beta(x) d^beta; already normal form"""
        out: WeylTermDict = {}
        for beta, c in coefficients:
            beta = tuple(beta)
            for m, v in c.terms():
                k = m + beta
                out[k] = out.get(k, 0) + v
        return cls.from_terms(ring, out)

    # -- inspection ---------------------------------------------------------

    def terms(self, order: Optional[MonomialOrder] = None) -> List[Tuple[WeylMonomial, Rational]]:
        order = order or weyl_order(self.ring.arity)
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def to_dict(self) -> WeylTermDict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def operator_order(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("operator_order")
        n = self.ring.arity
        return max(sum(m[n:]) for m in self._terms)

    def principal_symbol(self) -> Poly:
        """Top-order part with d_i replaced by the symbol variables; 0 for 0"""
        target = symbol_ring(self.ring)
        if not self._terms:
            return Poly.zero(target)
        n = self.ring.arity
        top = self.operator_order()
        return Poly.from_terms(target, {m: c for m, c in self._terms.items() if sum(m[n:]) == top})

    def coefficient_polys(self) -> Dict[WeylMonomial, Poly]:
        """beta -> c_beta(x) with self = sum c_beta d^beta"""
        n = self.ring.arity
        grouped: Dict[WeylMonomial, Dict] = {}
        for m, c in self._terms.items():
            grouped.setdefault(m[n:], {})[m[:n]] = c
        return {beta: Poly.from_terms(self.ring, t) for beta, t in grouped.items()}

    def leading_monomial(self, order: Optional[MonomialOrder] = None) -> WeylMonomial:
        if not self._terms:
            raise ZeroPolynomialError("leading_monomial")
        order = order or weyl_order(self.ring.arity)
        return max(self._terms, key=order.key)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other: object) -> "WeylElement":
        if isinstance(other, WeylElement):
            if other.ring != self.ring:
                raise RingMismatchError(self.ring, other.ring)
            return other
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatchError(self.ring, other.ring)
            return WeylElement.from_poly(other)
        return WeylElement.constant(self.ring, other)

    def __add__(self, other: object) -> "WeylElement":
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return WeylElement.from_terms(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "WeylElement":
        return WeylElement.from_terms(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> "WeylElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> "WeylElement":
        return self._coerce(other) - self

    def __mul__(self, other: object) -> "WeylElement":
        if not isinstance(other, (WeylElement, Poly)):
            return self.scale(other)
        return weyl_multiply(self, self._coerce(other))

    def __rmul__(self, other: object) -> "WeylElement":
        if not isinstance(other, (WeylElement, Poly)):
            return self.scale(other)
        return weyl_multiply(self._coerce(other), self)

    def scale(self, c: object) -> "WeylElement":
        c = rational(c)
        return WeylElement.from_terms(self.ring, {m: v * c for m, v in self._terms.items()})

    def __pow__(self, k: int) -> "WeylElement":
        if not isinstance(k, int) or k < 0:
            raise InvalidArgumentError("exponent", "nonnegative integer", k)
        result = WeylElement.one(self.ring)
        for _ in range(k):
            result = result * self
        return result

    def monic(self) -> "WeylElement":
        if not self._terms:
            return self
        return self.scale(ONE / self._terms[self.leading_monomial()])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WeylElement):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self == WeylElement.constant(self.ring, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        return format_terms(self.terms(), operator_names(self.ring))

    def __repr__(self) -> str:
        return f"WeylElement({self}, {self.ring})"


def left_multiply_terms(m: WeylMonomial, c: Rational, terms: Mapping[WeylMonomial, Rational],
                        n: int) -> WeylTermDict:
    """c * x^alpha d^beta * (sum of terms), normal form"""
    out: WeylTermDict = {}
    for k, v in terms.items():
        scale = c * v
        for mono, coeff in _monomial_product(m, k, n):
            value = out.get(mono, 0) + scale * coeff
            if value:
                out[mono] = value
            else:
                out.pop(mono, None)
    return out


def weyl_multiply(p: WeylElement, q: WeylElement) -> WeylElement:
    """P * Q in normal form, using d^b x^c = sum_k C(b,k) c!/(c-k)! x^(c-k) d^(b-k)"""
    if p.ring != q.ring:
        raise RingMismatchError(p.ring, q.ring)
    n = p.ring.arity
    out: WeylTermDict = {}
    for m1, c1 in p.to_dict().items():
        for mono, v in left_multiply_terms(m1, c1, q.to_dict(), n).items():
            value = out.get(mono, 0) + v
            if value:
                out[mono] = value
            else:
                out.pop(mono, None)
    return WeylElement.from_terms(p.ring, out)


def operator_order(q: WeylElement) -> int:
    return q.operator_order()


def principal_symbol(q: WeylElement) -> Poly:
    return q.principal_symbol()


def parse_operator(text: str, ring: RingSpec) -> WeylElement:
    """Parse operator text; factors are multiplied in A_n, so dx*x reads as x*dx+1"""
    names = operator_names(ring)
    n = ring.arity
    symbols = {name: WeylElement.x(ring, i) for i, name in enumerate(names[:n])}
    symbols.update({name: WeylElement.d(ring, i) for i, name in enumerate(names[n:])})
    return ExpressionParser(text, symbols, lambda c: WeylElement.constant(ring, c)).parse()
