"""Shared helpers for commands: input parsing and running engine calls off the event loop"""
import asyncio
from functools import partial
from typing import Any, Callable

from polyring.parser import parse_poly
from polyring.poly import Poly
from utils.validators import Validators
from .context import RunConfig


def parse_curve(run: RunConfig) -> Poly:
    """-f in the ring of --vars (default x,y)"""
    ring = Validators.validate_variables(run.variables, default=Validators.DEFAULT_VARIABLES)
    return parse_poly(run.poly, ring)


def parse_input(run: RunConfig) -> Poly:
    """-f in the ring of --vars, or of the identifiers it uses"""
    ring = Validators.validate_variables(run.variables, text=run.poly)
    return parse_poly(run.poly, ring)


async def run_blocking(fn: Callable[..., Any], *args) -> Any:
    """Run a CPU-bound engine call in the default executor"""
    loop = asyncio.get_running_loop()
    return await loop.run_in_executor(None, partial(fn, *args))
