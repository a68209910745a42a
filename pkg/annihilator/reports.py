"""Per-order reports and the final result of the annihilator-order iteration"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from annihilator.multiplicity import Multiplicity
from core.errors import InvariantViolationError
from polyring.poly import Poly
from polyring.rational import Rational, format_rational
from weyl.element import WeylElement
from weyl.groebner import WeylIdeal
from weyl.twisted import TwistedPower, apply_to_twisted_power


@dataclass
class TruncationReport:
    """One step d of the iteration"""

    d: int
    generators: List[WeylElement]
    char_generators: List[Poly]
    m_d: Multiplicity
    point: Tuple[Rational, Rational]
    char_dimension: int = -1
    timings_ms: Dict[str, float] = field(default_factory=dict)
    elapsed_ms: float = 0.0

    def __post_init__(self):
        for g in self.generators:
            if g.operator_order() > self.d:
                raise InvariantViolationError("truncation order",
                                              f"{g} has order {g.operator_order()} > {self.d}")

    def verify_annihilates(self, f: Poly, exponent: int) -> None:
        t = TwistedPower.power(f, exponent)
        for g in self.generators:
            if not apply_to_twisted_power(g, t).is_zero():
                raise InvariantViolationError("annihilation", f"{g} does not kill ({f})^{exponent}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "m": self.m_d,
            "point": [format_rational(c) for c in self.point],
            "generators": [str(g) for g in self.generators],
            "char_ideal": [str(g) for g in self.char_generators],
            "char_dimension": self.char_dimension,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


@dataclass
class KappaResult:
    """kappa(f^-1), Ann(f^-1) and the trace that led there"""

    f: Poly
    kappa: int
    annihilator: WeylIdeal
    curve_multiplicity: int
    trace: List[TruncationReport]
    genericity_point: Tuple[Rational, Rational]
    exponent: int = -1
    smooth: bool = False
    holonomic: bool = True
    points_tried: List[Tuple[Rational, Rational]] = field(default_factory=list)

    @property
    def m_trace(self) -> List[Multiplicity]:
        return [r.m_d for r in self.trace]

    @property
    def d_timings_ms(self) -> List[float]:
        """Wall-clock per order d, aligned with m_trace"""
        return [r.elapsed_ms for r in self.trace]

    @property
    def timings_ms(self) -> Dict[str, float]:
        totals: Dict[str, float] = {}
        for r in self.trace:
            for stage, ms in r.timings_ms.items():
                totals[stage] = totals.get(stage, 0.0) + ms
        totals["total"] = sum(totals.values())
        return totals

    def annihilator_generators(self) -> List[str]:
        return [str(g) for g in self.annihilator.gens()]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "f": str(self.f),
            "a": self.exponent,
            "kappa": self.kappa,
            "curve_multiplicity": self.curve_multiplicity,
            "genericity_point": [format_rational(c) for c in self.genericity_point],
            "smooth": self.smooth,
            "holonomic": self.holonomic,
            "points_tried": [[format_rational(c) for c in p] for p in self.points_tried],
            "trace": [r.to_dict() for r in self.trace],
            "annihilator": self.annihilator_generators(),
            "timings_ms": {k: round(v, 3) for k, v in self.timings_ms.items()},
        }


def annihilators_equal(a: WeylIdeal, b: WeylIdeal) -> bool:
    return a.equals(b)
