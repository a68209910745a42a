"""The action of A_n on g * f^k"""
from dataclasses import dataclass
from typing import Dict, Tuple

from core.errors import InvalidArgumentError, RingMismatchError
from polyring.poly import Poly
from weyl.element import WeylElement


@dataclass(frozen=True)
class TwistedPower:
    """g * f^k with exact bookkeeping: g is never divided by f"""

    f: Poly
    g: Poly
    k: int

    def __post_init__(self):
        if self.f.ring != self.g.ring:
            raise RingMismatchError(self.f.ring, self.g.ring)
        if self.f.is_constant():
            raise InvalidArgumentError("f", "nonconstant polynomial", str(self.f))

    @classmethod
    def power(cls, f: Poly, k: int) -> "TwistedPower":
        """1 * f^k"""
        return cls(f, Poly.one(f.ring), k)

    def is_zero(self) -> bool:
        return self.g.is_zero()

    def numerator_at(self, k: int) -> Poly:
        """h with g*f^self.k = h*f^k, for k <= self.k"""
        if k > self.k:
            raise InvalidArgumentError("k", f"<= {self.k}", k)
        return self.g * self.f ** (self.k - k)

    def equivalent(self, other: "TwistedPower") -> bool:
        """Equal as rational functions (same f)"""
        if self.f != other.f:
            raise InvalidArgumentError("f", str(self.f), str(other.f))
        k = min(self.k, other.k)
        return self.numerator_at(k) == other.numerator_at(k)

    def derivative(self, index: int) -> "TwistedPower":
        """d_i (g f^k) = (g_i f + k g f_i) f^(k-1)"""
        g_i = self.g.derivative(index)
        f_i = self.f.derivative(index)
        return TwistedPower(self.f, g_i * self.f + self.g * f_i * self.k, self.k - 1)

    def __str__(self) -> str:
        return f"({self.g})*({self.f})^{self.k}"


def derivative_table(t: TwistedPower, max_order: int) -> Dict[Tuple[int, ...], TwistedPower]:
    """d^beta . t for every |beta| <= max_order, built one derivation at a time"""
    n = t.f.ring.arity
    table = {(0,) * n: t}
    frontier = [(0,) * n]
    for _ in range(max_order):
        following = []
        for beta in frontier:
            for i in range(n):
                step = beta[:i] + (beta[i] + 1,) + beta[i + 1:]
                if step not in table:
                    table[step] = table[beta].derivative(i)
                    following.append(step)
        frontier = following
    return table


def apply_to_twisted_power(q: WeylElement, t: TwistedPower) -> TwistedPower:
    """Q . (g f^k) = N * f^(k - ord Q); Q annihilates t iff N = 0"""
    if q.ring != t.f.ring:
        raise RingMismatchError(q.ring, t.f.ring)
    if q.is_zero():
        return TwistedPower(t.f, Poly.zero(t.f.ring), t.k)
    order = q.operator_order()
    target = t.k - order
    coefficients = q.coefficient_polys()
    derivatives = derivative_table(t, order)
    total = Poly.zero(t.f.ring)
    for beta, c in coefficients.items():
        total = total + c * derivatives[beta].numerator_at(target)
    return TwistedPower(t.f, total, target)
