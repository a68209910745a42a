"""The annihilator order kappa(f^-1) and Ann(f^-1) for a plane curve

Truncations Ann^(d)(f^-1) are computed for d = 1, 2, ... and the loop stops at
the first d where the characteristic ideal, cut by a generic plane over the
origin, has multiplicity m - 1 at the origin (m the multiplicity of the curve).
"""
from itertools import islice
from time import perf_counter
from typing import Iterator, List, Optional, Tuple

from annihilator.curve import curve_multiplicity, validate_curve
from annihilator.genericity import check_genericity, ladder
from annihilator.multiplicity import UNDEFINED, is_finite, multiplicity_on_plane
from annihilator.reports import KappaResult, TruncationReport
from annihilator.truncation import Truncation, compute_truncation
from core.config import KappaConfig
from core.errors import GenericityNotFoundError, InvariantViolationError, OrderCapExceededError
from core.logging_config import get_logger
from polyring.poly import Poly
from polyring.rational import Rational, format_rational, rational
from weyl.char_ideal import CharIdeal, char_ideal

logger = get_logger("annihilator.kappa")

EXPONENT = -1

Point = Tuple[Rational, Rational]


def _label(point: Point) -> Tuple[str, str]:
    return format_rational(point[0]), format_rational(point[1])


class PointSource:
    """Genericity points in ladder order, or the single configured point"""

    def __init__(self, f: Poly, config: KappaConfig):
        self.f = f
        self.config = config
        self.tried: List[Point] = []
        if config.point is not None:
            candidates: Iterator = iter([config.point])
        else:
            candidates = islice(ladder(), config.ladder_size)
        self._candidates = candidates

    def next_generic(self) -> Point:
        for a, b in self._candidates:
            point = (rational(a), rational(b))
            self.tried.append(point)
            if check_genericity(self.f, *point):
                logger.info(f"genericity point {','.join(_label(point))}")
                return point
            logger.warning(f"point {','.join(_label(point))} is not generic for {self.f}")
        raise GenericityNotFoundError([_label(p) for p in self.tried])


def _ms(start: float) -> float:
    return (perf_counter() - start) * 1000.0


def _truncate(f: Poly, d: int, previous: Optional[Truncation],
              config: KappaConfig) -> Tuple[Truncation, CharIdeal, int, dict]:
    timings = {}
    start = perf_counter()
    seed = previous if config.reuse_syzygies else None
    truncation = compute_truncation(f, EXPONENT, d, seed)
    timings["syzygies"] = _ms(start)
    start = perf_counter()
    char = char_ideal(truncation.ideal)
    timings["weyl_gb"] = _ms(start)
    start = perf_counter()
    dimension = char.dimension()
    timings["dimension"] = _ms(start)
    return truncation, char, dimension, timings


def _check_step(f: Poly, m: int, report: TruncationReport, truncation: Truncation,
                previous: Optional[Truncation], trace: List[TruncationReport]) -> None:
    n = f.ring.arity
    if previous is not None and not truncation.ideal.contains_ideal(previous.ideal):
        raise InvariantViolationError("chain", f"Ann^({report.d - 1}) is not contained in Ann^({report.d})")
    if not truncation.ideal.is_unit() and not n <= report.char_dimension <= 2 * n:
        raise InvariantViolationError("Bernstein bounds", f"dim gr(Ann^({report.d})) = {report.char_dimension}")
    if is_finite(report.m_d):
        if report.m_d < m - 1:
            raise InvariantViolationError("multiplicity bound", f"m^({report.d}) = {report.m_d} < {m - 1}")
        earlier = [r.m_d for r in trace if r.point == report.point and is_finite(r.m_d)]
        if earlier and report.m_d > earlier[-1]:
            raise InvariantViolationError("monotonicity", f"m^({report.d}) = {report.m_d} > {earlier[-1]}")


def kappa_and_annihilator(f: Poly, config: Optional[KappaConfig] = None) -> KappaResult:
    """kappa(f^-1) and Ann(f^-1) for a curve singular at most at the origin"""
    config = config or KappaConfig.from_env()
    curve = validate_curve(f, EXPONENT)
    m = curve_multiplicity(f)
    points = PointSource(f, config)
    point = points.next_generic()

    trace: List[TruncationReport] = []
    previous: Optional[Truncation] = None
    undefined_run = 0
    d = 1
    while d <= config.max_d:
        step_start = perf_counter()
        truncation, char, dimension, timings = _truncate(f, d, previous, config)

        start = perf_counter()
        value = multiplicity_on_plane(char, point)
        while value == UNDEFINED and not config.skip_ladder:
            undefined_run += 1
            if undefined_run < config.undefined_retry_limit:
                break
            logger.warning(f"m^({d}) undefined {undefined_run} times at {','.join(_label(point))}, "
                           f"moving to the next point")
            point = points.next_generic()
            undefined_run = 0
            value = multiplicity_on_plane(char, point)
        if value != UNDEFINED:
            undefined_run = 0
        timings["multiplicity"] = _ms(start)

        report = TruncationReport(d, truncation.ideal.gens(), char.generators, value, point,
                                  dimension, timings)
        report.verify_annihilates(f, EXPONENT)
        if config.check_invariants:
            _check_step(f, m, report, truncation, previous, trace)
        report.elapsed_ms = _ms(step_start)
        trace.append(report)
        logger.info(f"d={d}: {len(report.generators)} generators, m^(d)={value}, "
                    f"dim gr={dimension}, {report.elapsed_ms:.1f} ms")

        if value == m - 1 or not curve.singular_at_origin:
            holonomic = truncation.ideal.is_unit() or dimension == f.ring.arity
            if config.check_invariants and curve.singular_at_origin and not holonomic:
                raise InvariantViolationError("holonomicity", f"dim gr(Ann) = {dimension} at d={d}")
            if not curve.singular_at_origin:
                logger.info(f"{f} is smooth; reporting Ann^(1)")
            return KappaResult(
                f=f, kappa=d, annihilator=truncation.ideal, curve_multiplicity=m, trace=trace,
                genericity_point=point, exponent=EXPONENT, smooth=not curve.singular_at_origin,
                holonomic=holonomic, points_tried=list(points.tried),
            )
        previous = truncation
        d += 1

    raise OrderCapExceededError(config.max_d, [{"d": r.d, "m": r.m_d} for r in trace])
