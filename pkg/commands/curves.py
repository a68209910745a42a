"""Curve commands: kappa, genericity, reiffen"""
from itertools import islice
from typing import Any, Dict

from annihilator.curve import reiffen, validate_curve
from annihilator.genericity import check_genericity, ladder
from annihilator.kappa import kappa_and_annihilator
from core.errors import GenericityNotFoundError, MissingArgumentError
from core.logging_config import get_logger
from polyring.rational import format_rational, rational
from utils.report_formatter import ReportFormatter
from .base import Command
from .helpers import parse_curve, run_blocking
from .registry import register

logger = get_logger("commands.curves")


@register
class KappaCommand(Command):
    """kappa(f^-1) and generators of Ann(f^-1)"""

    name = "kappa"
    description = "Compute the annihilator order kappa(f^-1) and Ann(f^-1) of a plane curve"
    flags = ("poly", "vars", "point", "max_d", "json", "reuse")

    requires_poly = True

    async def execute(self) -> Dict[str, Any]:
        f = parse_curve(self.run)
        config = self.run.kappa_config()
        logger.info(f"kappa: f={f}, max_d={config.max_d}")
        result = await run_blocking(kappa_and_annihilator, f, config)
        data = result.to_dict()
        return {"success": True, "result": data, "text": ReportFormatter.kappa(data)}


@register
class GenericityCommand(Command):
    """Genericity verdict for a plane over the origin"""

    name = "genericity"
    description = "Check whether the plane xi=a, eta=b is generic for the curve at the origin"
    flags = ("poly", "vars", "point", "json")

    requires_poly = True

    async def execute(self) -> Dict[str, Any]:
        f = parse_curve(self.run)
        validate_curve(f)
        if self.run.point is not None:
            point = self.run.point
            generic = await run_blocking(check_genericity, f, *point)
            rejected = [] if generic else [point]
        else:
            rejected = []
            point = None
            for a, b in islice(ladder(), self.run.kappa_config().ladder_size):
                candidate = (rational(a), rational(b))
                if await run_blocking(check_genericity, f, *candidate):
                    point = candidate
                    break
                rejected.append(candidate)
            if point is None:
                raise GenericityNotFoundError([tuple(format_rational(c) for c in p) for p in rejected])
            generic = True

        data = {
            "f": str(f),
            "point": [format_rational(c) for c in point],
            "generic": generic,
            "rejected": [[format_rational(c) for c in p] for p in rejected],
        }
        verdict = "generic" if generic else "not generic"
        text = f"point {','.join(data['point'])} is {verdict} for {f}"
        return {"success": True, "result": data, "text": text}


@register
class ReiffenCommand(Command):
    """Print f_{p,q} = x^p + y^q + x*y^(q-1)"""

    name = "reiffen"
    description = "Print the Reiffen curve x^p+y^q+x*y^(q-1)"
    flags = ("p", "q", "json")

    async def execute(self) -> Dict[str, Any]:
        if self.run.p is None:
            raise MissingArgumentError("-p")
        p = self.run.p
        q = self.run.q if self.run.q is not None else p + 1
        f = reiffen(p, q)
        return {"success": True, "result": {"p": p, "q": q, "f": str(f)}, "text": str(f)}
