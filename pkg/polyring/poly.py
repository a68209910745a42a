"""Sparse multivariate polynomials over Q"""
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.monomials import monomial_div, monomial_mul

from core.errors import (
    InvalidArgumentError, NotDivisibleError, RingMismatchError, ZeroPolynomialError,
)
from polyring.orders import MonomialOrder, grevlex_key
from polyring.rational import ONE, Rational, format_rational, rational
from polyring.ring import ExponentVector, RingSpec

TermDict = Dict[ExponentVector, Rational]


def format_monomial(m: Sequence[int], names: Sequence[str]) -> str:
    factors = []
    for name, e in zip(names, m):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def format_terms(items: Iterable[Tuple[Sequence[int], Rational]], names: Sequence[str]) -> str:
    """Bit-exact rendering: explicit '*', '^' exponents, a/b coefficients, no spaces"""
    parts = []
    for m, c in items:
        mono = format_monomial(m, names)
        if not mono:
            term = format_rational(c)
        elif c == 1:
            term = mono
        elif c == -1:
            term = "-" + mono
        else:
            term = f"{format_rational(c)}*{mono}"
        if parts and not term.startswith("-"):
            term = "+" + term
        parts.append(term)
    return "".join(parts) if parts else "0"


class Poly:
    """Immutable polynomial: a map exponent vector -> nonzero rational

    Terms are stored in descending GrevLex order; any other order is applied
    per call (leading_monomial(order), items(order)).
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Optional[Mapping[Sequence[int], object]] = None):
        clean: TermDict = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != ring.arity or any(e < 0 for e in m):
                raise InvalidArgumentError("exponent vector", f"{ring.arity} nonnegative ints", m)
            c = rational(c)
            if c:
                clean[m] = clean.get(m, 0) + c
        self._set(ring, clean)

    def _set(self, ring: RingSpec, clean: TermDict) -> None:
        self.ring = ring
        self._terms = {m: clean[m] for m in sorted(clean, key=grevlex_key, reverse=True) if clean[m]}
        self._hash = None

    @classmethod
    def from_terms(cls, ring: RingSpec, clean: TermDict) -> "Poly":
        """Wrap a dict of nonzero rationals without re-validating it"""
        p = cls.__new__(cls)
        p._set(ring, clean)
        return p

    @classmethod
    def zero(cls, ring: RingSpec) -> "Poly":
        return cls.from_terms(ring, {})

    @classmethod
    def constant(cls, ring: RingSpec, c: object) -> "Poly":
        return cls(ring, {ring.zero_vector(): c})

    @classmethod
    def one(cls, ring: RingSpec) -> "Poly":
        return cls.constant(ring, 1)

    @classmethod
    def variable(cls, ring: RingSpec, var: Union[int, str]) -> "Poly":
        index = ring.index(var) if isinstance(var, str) else var
        return cls.from_terms(ring, {ring.unit_vector(index): ONE})

    @classmethod
    def monomial(cls, ring: RingSpec, m: Sequence[int], c: object = 1) -> "Poly":
        return cls(ring, {tuple(m): c})

    # -- inspection ---------------------------------------------------------

    def terms(self) -> List[Tuple[ExponentVector, Rational]]:
        return list(self._terms.items())

    def items(self, order: Optional[MonomialOrder] = None) -> List[Tuple[ExponentVector, Rational]]:
        if order is None:
            return self.terms()
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def to_dict(self) -> TermDict:
        return dict(self._terms)

    def coefficient(self, m: Sequence[int]) -> Rational:
        return self._terms.get(tuple(m), rational(0))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_coefficient(self) -> Rational:
        return self.coefficient(self.ring.zero_vector())

    def leading_monomial(self, order: MonomialOrder) -> ExponentVector:
        if not self._terms:
            raise ZeroPolynomialError("leading_monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Rational:
        return self._terms[self.leading_monomial(order)]

    def total_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("total_degree")
        return max(sum(m) for m in self._terms)

    def min_total_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("min_total_degree")
        return min(sum(m) for m in self._terms)

    def variables_used(self) -> List[int]:
        return [i for i in range(self.ring.arity) if any(m[i] for m in self._terms)]

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other: object) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatchError(self.ring, other.ring)
            return other
        return Poly.constant(self.ring, other)

    def __add__(self, other: object) -> "Poly":
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Poly.from_terms(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly.from_terms(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other: object) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        other = self._coerce(other)
        out: TermDict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = monomial_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly.from_terms(self.ring, out)

    __rmul__ = __mul__

    def scale(self, c: object) -> "Poly":
        c = rational(c)
        if not c:
            return Poly.zero(self.ring)
        return Poly.from_terms(self.ring, {m: v * c for m, v in self._terms.items()})

    def mul_monomial(self, m: Sequence[int], c: object = 1) -> "Poly":
        c = rational(c)
        return Poly.from_terms(self.ring, {monomial_mul(k, m): v * c for k, v in self._terms.items()})

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise InvalidArgumentError("exponent", "nonnegative integer", n)
        result = Poly.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monic(self, order: MonomialOrder) -> "Poly":
        if not self._terms:
            return self
        return self.scale(ONE / self.leading_coefficient(order))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self == Poly.constant(self.ring, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                # equal to a plain number, so hash like one
                self._hash = hash(self.constant_coefficient())
            else:
                self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- calculus and substitution -------------------------------------------

    def derivative(self, index: int) -> "Poly":
        self.ring.check_index(index)
        out: TermDict = {}
        for m, c in self._terms.items():
            e = m[index]
            if e:
                out[m[:index] + (e - 1,) + m[index + 1:]] = c * e
        return Poly.from_terms(self.ring, out)

    def substitute(self, assignment: Mapping[int, object]) -> "Poly":
        """Plug rationals into some variables; result lives in the remaining ring

        A ring has at least one variable, so a full assignment returns the value
        as a constant of this ring; it compares and hashes equal to the number.
        """
        values = {}
        for i, v in assignment.items():
            self.ring.check_index(i)
            values[i] = rational(v)
        if len(values) == self.ring.arity:
            return Poly.constant(self.ring, self.evaluate([values[i] for i in range(self.ring.arity)]))
        target = self.ring.without(values)
        keep = [i for i in range(self.ring.arity) if i not in values]
        out: TermDict = {}
        for m, c in self._terms.items():
            for i, v in values.items():
                if m[i]:
                    c = c * v ** m[i]
            if c:
                k = tuple(m[i] for i in keep)
                out[k] = out.get(k, 0) + c
        return Poly.from_terms(target, out)

    def evaluate(self, point: Sequence[object]) -> Rational:
        if len(point) != self.ring.arity:
            raise InvalidArgumentError("point", f"{self.ring.arity} coordinates", len(point))
        values = [rational(v) for v in point]
        total = rational(0)
        for m, c in self._terms.items():
            for v, e in zip(values, m):
                if e:
                    c = c * v ** e
            total += c
        return total

    def translate(self, shift: Sequence[object]) -> "Poly":
        """p(x + shift)"""
        if len(shift) != self.ring.arity:
            raise InvalidArgumentError("shift", f"{self.ring.arity} coordinates", len(shift))
        shifted = [Poly.variable(self.ring, i) + rational(s) for i, s in enumerate(shift)]
        powers: Dict[Tuple[int, int], Poly] = {}
        total = Poly.zero(self.ring)
        for m, c in self._terms.items():
            term = Poly.constant(self.ring, c)
            for i, e in enumerate(m):
                if e:
                    if (i, e) not in powers:
                        powers[(i, e)] = shifted[i] ** e
                    term = term * powers[(i, e)]
            total = total + term
        return total

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        return format_terms(self._terms.items(), self.ring.names)

    def __repr__(self) -> str:
        return f"Poly({self}, {self.ring})"


@dataclass(frozen=True)
class DegreeInfo:
    total_degree: int
    min_total_degree: int


def degree_info(p: Poly) -> DegreeInfo:
    return DegreeInfo(p.total_degree(), p.min_total_degree())


def partial_derivative(p: Poly, index: int) -> Poly:
    return p.derivative(index)


def poly_arith(op: str, a: Poly, b: object) -> Poly:
    """Dispatch for add, sub, mul, scale and power"""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    if op == "power":
        return a ** b
    raise InvalidArgumentError("op", "add, sub, mul, scale or power", op)


def divide_exact(p: Poly, g: Poly) -> Poly:
    """Quotient p/g, raising NotDivisibleError on a nonzero remainder"""
    if g.ring != p.ring:
        raise RingMismatchError(p.ring, g.ring)
    if g.is_zero():
        raise ZeroPolynomialError("division")
    lm_g = max(g._terms, key=grevlex_key)
    lc_g = g._terms[lm_g]
    rest = dict(p._terms)
    quotient: TermDict = {}
    while rest:
        lm = max(rest, key=grevlex_key)
        shift = monomial_div(lm, lm_g)
        if shift is None:
            raise NotDivisibleError(p, g)
        c = rest[lm] / lc_g
        quotient[shift] = c
        for m, v in g._terms.items():
            k = monomial_mul(m, shift)
            value = rest.get(k, 0) - c * v
            if value:
                rest[k] = value
            else:
                rest.pop(k, None)
    return Poly.from_terms(p.ring, quotient)
