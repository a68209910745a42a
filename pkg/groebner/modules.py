"""Vectors in R^N and syzygy modules"""
from typing import Iterable, List, Optional, Sequence, Tuple

from core.errors import InvalidArgumentError, RingMismatchError
from core.logging_config import get_logger
from groebner.engine import EngineStats, ModuleTerms, TermDict, buchberger
from polyring.orders import GREVLEX, MonomialOrder
from polyring.poly import Poly
from polyring.rational import ONE
from polyring.ring import RingSpec

logger = get_logger("groebner.modules")


class ModuleVector:
    """Element of the free module R^N"""

    __slots__ = ("ring", "components")

    def __init__(self, ring: RingSpec, components: Iterable[Poly]):
        comps = tuple(components)
        for c in comps:
            if c.ring != ring:
                raise RingMismatchError(ring, c.ring)
        self.ring = ring
        self.components: Tuple[Poly, ...] = comps

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i: int) -> Poly:
        return self.components[i]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def dot(self, values: Sequence[Poly]) -> Poly:
        """sum c_i * v_i"""
        if len(values) != len(self.components):
            raise InvalidArgumentError("values", f"{len(self.components)} entries", len(values))
        total = Poly.zero(self.ring)
        for c, v in zip(self.components, values):
            if not c.is_zero():
                total = total + c * v
        return total

    def padded(self, length: int) -> "ModuleVector":
        """Same vector in R^length, new slots zero"""
        if length < len(self.components):
            raise InvalidArgumentError("length", f">= {len(self.components)}", length)
        zero = Poly.zero(self.ring)
        return ModuleVector(self.ring, self.components + (zero,) * (length - len(self.components)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.ring == other.ring and self.components == other.components

    def __hash__(self) -> int:
        return hash((self.ring, self.components))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"

    def __repr__(self) -> str:
        return f"ModuleVector{self}"


def _embed(slot: int, p: Poly) -> TermDict:
    return {(slot,) + m: c for m, c in p.to_dict().items()}


def _extract(ring: RingSpec, terms: TermDict, length: int) -> ModuleVector:
    parts: List[TermDict] = [{} for _ in range(length)]
    for m, c in terms.items():
        parts[m[0] - 1][m[1:]] = c
    return ModuleVector(ring, (Poly.from_terms(ring, t) for t in parts))


def syzygies(values: Sequence[Poly], seed: Sequence[ModuleVector] = (),
             order: MonomialOrder = GREVLEX, stats: Optional[EngineStats] = None) -> List[ModuleVector]:
    """Generators of {c in R^N : sum c_i v_i = 0}

    Works in R + R^N with position over term (slot 0 greatest): the reduced
    Groebner basis of {(v_i, e_i)} restricted to elements with zero slot 0
    generates the syzygy module. Known syzygies may be passed as seed; they
    only shortcut the computation.
    """
    if not values:
        raise InvalidArgumentError("values", "at least one polynomial", 0)
    ring = values[0].ring
    for v in values:
        if v.ring != ring:
            raise RingMismatchError(ring, v.ring)
    n = len(values)
    unit = ring.zero_vector()

    generators = []
    for i, v in enumerate(values):
        terms = _embed(0, v)
        terms[(i + 1,) + unit] = ONE
        generators.append(terms)

    seeds = []
    for s in seed:
        if len(s) != n:
            raise InvalidArgumentError("seed", f"vectors of length {n}", len(s))
        terms: TermDict = {}
        for i, c in enumerate(s.components):
            terms.update(_embed(i + 1, c))
        if terms:
            seeds.append(terms)

    basis = buchberger(generators, ModuleTerms(order), seed=seeds, stats=stats)
    result = [_extract(ring, b.terms, n) for b in basis if b.lm[0] != 0]
    logger.debug(f"syzygies: {n} entries, {len(result)} generators, {len(seeds)} seeded")
    return result
