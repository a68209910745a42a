"""Monomial orders

Every order is a frozen value exposing key(m): a flat integer tuple such that
a > b in the order iff key(a) > key(b) as tuples. Orders are supplied per
computation, never attached to polynomials.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from core.errors import InvalidArgumentError
from polyring.ring import ExponentVector


class Ordering(Enum):
    LT = -1
    EQ = 0
    GT = 1


def grevlex_key(m: ExponentVector) -> Tuple[int, ...]:
    return (sum(m),) + tuple(-e for e in reversed(m))


class MonomialOrder(ABC):
    """Base class for term orders on exponent vectors"""

    name: str = None

    @abstractmethod
    def key(self, m: ExponentVector) -> Tuple[int, ...]:
        pass

    def compare(self, a: ExponentVector, b: ExponentVector) -> Ordering:
        if len(a) != len(b):
            raise InvalidArgumentError("exponent vectors", "same arity", f"{len(a)} vs {len(b)}")
        ka, kb = self.key(a), self.key(b)
        if ka == kb:
            return Ordering.EQ
        return Ordering.GT if ka > kb else Ordering.LT


@dataclass(frozen=True)
class Lex(MonomialOrder):
    name = "lex"

    def key(self, m):
        return tuple(m)


@dataclass(frozen=True)
class GrevLex(MonomialOrder):
    name = "grevlex"

    def key(self, m):
        return grevlex_key(m)


@dataclass(frozen=True)
class WeightedGrevLex(MonomialOrder):
    """Nonnegative weight vector first, GrevLex as tiebreak"""

    weights: Tuple[int, ...]
    name = "wgrevlex"

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        if any(w < 0 for w in self.weights):
            raise InvalidArgumentError("weights", "nonnegative integers", self.weights)

    def key(self, m):
        if len(m) != len(self.weights):
            raise InvalidArgumentError("exponent vector", f"arity {len(self.weights)}", len(m))
        return (sum(w * e for w, e in zip(self.weights, m)),) + grevlex_key(m)


@dataclass(frozen=True)
class Block(MonomialOrder):
    """GrevLex on the first k variables, ties broken by GrevLex on the rest"""

    k: int
    name = "block"

    def __post_init__(self):
        if self.k < 0:
            raise InvalidArgumentError("k", "nonnegative integer", self.k)

    def key(self, m):
        return grevlex_key(m[:self.k]) + grevlex_key(m[self.k:])


def compare(order: MonomialOrder, a: ExponentVector, b: ExponentVector) -> Ordering:
    return order.compare(a, b)


GREVLEX = GrevLex()
LEX = Lex()
