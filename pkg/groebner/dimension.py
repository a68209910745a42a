"""Krull dimension and vector-space dimension from the initial ideal"""
from itertools import combinations, product
from typing import List, Sequence, Tuple, Union

from groebner.ideal import Ideal
from polyring.orders import GREVLEX, MonomialOrder

INFINITE = "infinite"

Dimension = Union[int, str]


def _initial_monomials(ideal: Ideal, order: MonomialOrder = GREVLEX) -> List[Tuple[int, ...]]:
    return ideal.leading_monomials(order)


def krull_dimension(ideal: Ideal, order: MonomialOrder = GREVLEX) -> int:
    """Size of a largest independent set of variables modulo in(I); -1 for <1>

    Every global order gives the same answer.
    """
    n = ideal.ring.arity
    if ideal.is_zero():
        return n
    if ideal.is_unit():
        return -1
    lms = _initial_monomials(ideal, order)
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in lms]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            chosen = set(subset)
            if not any(s <= chosen for s in supports):
                return size
    return 0


def _staircase_bounds(lms: Sequence[Tuple[int, ...]], n: int) -> List[int]:
    """Exponent bound per variable from pure powers, or -1 when unbounded"""
    bounds = []
    for i in range(n):
        pure = [m[i] for m in lms if m[i] and all(e == 0 for j, e in enumerate(m) if j != i)]
        bounds.append(min(pure) if pure else -1)
    return bounds


def standard_monomials(ideal: Ideal) -> List[Tuple[int, ...]]:
    """Monomials outside in(I); empty when I is not zero-dimensional"""
    if ideal.is_zero():
        return []
    lms = _initial_monomials(ideal)
    bounds = _staircase_bounds(lms, ideal.ring.arity)
    if any(b < 0 for b in bounds):
        return []
    return [m for m in product(*(range(b) for b in bounds))
            if not any(all(x <= y for x, y in zip(lm, m)) for lm in lms)]


def quotient_vector_space_dim(ideal: Ideal) -> Dimension:
    """dim_Q R/I: number of standard monomials, or "infinite" """
    if ideal.is_zero():
        return INFINITE
    if ideal.is_unit():
        return 0
    bounds = _staircase_bounds(_initial_monomials(ideal), ideal.ring.arity)
    if any(b < 0 for b in bounds):
        return INFINITE
    return len(standard_monomials(ideal))
