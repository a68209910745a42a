"""Operator commands: ann, char-ideal"""
from typing import Any, Dict

from annihilator.multiplicity import multiplicity_on_plane, restrict_to_plane
from annihilator.truncation import truncated_annihilator
from core.errors import InvalidArgumentError
from core.logging_config import get_logger
from polyring.rational import format_rational
from utils.report_formatter import ReportFormatter
from utils.validators import Validators
from weyl.char_ideal import char_ideal
from .base import Command
from .helpers import parse_input, run_blocking
from .registry import register

logger = get_logger("commands.operators")


@register
class AnnCommand(Command):
    """Generators of the truncated annihilator Ann^(d)(f^a)"""

    name = "ann"
    description = "Generators of the truncated annihilator Ann^(d)(f^a)"
    flags = ("poly", "vars", "exponent", "order", "json")

    requires_poly = True
    requires_order = True

    async def execute(self) -> Dict[str, Any]:
        f = parse_input(self.run)
        d = Validators.validate_order(self.run.order)
        a = self.run.exponent
        ideal = await run_blocking(truncated_annihilator, f, a, d)
        gens = [str(g) for g in ideal.gens()]
        logger.info(f"Ann^({d}) of ({f})^{a}: {len(gens)} generators")
        data = {"f": str(f), "a": a, "d": d, "generators": gens}
        return {"success": True, "result": data,
                "text": ReportFormatter.generators(f"Ann^({d})(f^{a}):", gens)}


@register
class CharIdealCommand(Command):
    """Characteristic ideal of Ann^(d)(f^a), optionally cut by a plane"""

    name = "char-ideal"
    description = "Characteristic ideal gr(Ann^(d)(f^a)), its dimension, and m^(d) at --point"
    flags = ("poly", "vars", "exponent", "order", "point", "json")

    requires_poly = True
    requires_order = True

    async def execute(self) -> Dict[str, Any]:
        f = parse_input(self.run)
        d = Validators.validate_order(self.run.order)
        a = self.run.exponent
        ideal = await run_blocking(truncated_annihilator, f, a, d)
        char = await run_blocking(char_ideal, ideal)
        data = {
            "f": str(f),
            "a": a,
            "d": d,
            "char_ideal": [str(g) for g in char.generators],
            "dimension": char.dimension(),
        }
        if self.run.point is not None:
            if f.ring.arity != 2:
                raise InvalidArgumentError("point", "a curve in two variables", str(f.ring))
            data["point"] = [format_rational(c) for c in self.run.point]
            data["restricted"] = [str(g) for g in restrict_to_plane(char, self.run.point).gens()]
            data["m"] = multiplicity_on_plane(char, self.run.point)
        return {"success": True, "result": data, "text": ReportFormatter.char_ideal(data)}
