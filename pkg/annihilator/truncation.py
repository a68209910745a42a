"""Truncated annihilators Ann^(d)(f^a) from syzygies of derivative numerators"""
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from core.errors import InvalidArgumentError
from core.logging_config import get_logger
from groebner.modules import ModuleVector, syzygies
from polyring.poly import Poly
from weyl.element import WeylElement
from weyl.groebner import WeylIdeal
from weyl.twisted import TwistedPower, derivative_table

logger = get_logger("annihilator.truncation")

MultiIndex = Tuple[int, ...]


def multi_indices(n: int, d: int) -> List[MultiIndex]:
    """|alpha| <= d, by degree then lex descending: 00, 10, 01, 20, 11, 02, ..."""
    def of_degree(k: int, width: int) -> List[MultiIndex]:
        if width == 1:
            return [(k,)]
        return [(i,) + rest for i in range(k, -1, -1) for rest in of_degree(k - i, width - 1)]

    return [alpha for k in range(d + 1) for alpha in of_degree(k, n)]


def derivative_numerators(f: Poly, a: int, d: int) -> List[Tuple[MultiIndex, Poly]]:
    """N_alpha with d^alpha . f^a = N_alpha * f^(a-d)"""
    if f.is_zero() or f.is_constant():
        raise InvalidArgumentError("f", "nonconstant polynomial", str(f))
    if d < 0:
        raise InvalidArgumentError("d", "nonnegative integer", d)
    table = derivative_table(TwistedPower.power(f, a), d)
    return [(alpha, table[alpha].numerator_at(a - d)) for alpha in multi_indices(f.ring.arity, d)]


@dataclass
class Truncation:
    """Ann^(d)(f^a) together with the syzygies it came from"""

    f: Poly
    exponent: int
    d: int
    ideal: WeylIdeal
    syzygies: List[ModuleVector] = field(default_factory=list)
    indices: List[MultiIndex] = field(default_factory=list)


def operator_from_syzygy(c: ModuleVector, indices: Sequence[MultiIndex]) -> WeylElement:
    """sum_alpha c_alpha(x) d^alpha"""
    return WeylElement.from_coefficients(c.ring, zip(indices, c.components))


def compute_truncation(f: Poly, a: int, d: int, previous: "Truncation" = None) -> Truncation:
    """Ann^(d)(f^a); previous (order d-1) syzygies seed the module computation"""
    numerators = derivative_numerators(f, a, d)
    indices = [alpha for alpha, _ in numerators]
    seed = []
    if previous is not None:
        if previous.f != f or previous.exponent != a or previous.d != d - 1:
            raise InvalidArgumentError("previous", f"order {d - 1} truncation of the same f^a",
                                       f"order {previous.d}")
        # N_alpha at order d is f times N_alpha at order d-1, and the index list extends
        seed = [s.padded(len(indices)) for s in previous.syzygies]
    syz = syzygies([p for _, p in numerators], seed=seed)
    ops = [operator_from_syzygy(c, indices) for c in syz]
    logger.debug(f"Ann^({d}) of ({f})^{a}: {len(indices)} numerators, {len(ops)} generators")
    return Truncation(f, a, d, WeylIdeal(f.ring, ops), syz, indices)


def truncated_annihilator(f: Poly, a: int, d: int) -> WeylIdeal:
    return compute_truncation(f, a, d).ideal
