"""Base command class for CLI commands"""
import argparse
from abc import ABC, abstractmethod
from typing import Any, Dict, Tuple

from .context import CommandContext


class Command(ABC):
    """Abstract base class for CLI commands

    Subclasses must define class attributes:
        name: str - Subcommand name
        description: str - Help text
        flags: Tuple[str, ...] - Shared flags the subcommand accepts (see FLAGS)

    Dependency declarations (optional class attributes):
        requires_poly: bool = False - Command needs -f/--poly
        requires_order: bool = False - Command needs -d/--order
    """

    # Class attributes - must be overridden by subclasses
    name: str = None
    description: str = None
    flags: Tuple[str, ...] = ()

    # Dependency declarations - optional
    requires_poly: bool = False
    requires_order: bool = False

    def __init__(self, context: CommandContext):
        """Initialize command with execution context

        Args:
            context: CommandContext with the run configuration
        """
        context.validate_requirements(
            requires_poly=self.requires_poly,
            requires_order=self.requires_order
        )

        self.context = context
        self.run = context.run

    @abstractmethod
    async def execute(self) -> Dict[str, Any]:
        """Execute the command

        Returns:
            Dict with 'success', a JSON-ready 'result' and its rendering as 'text'
        """
        pass

    @classmethod
    def add_parser(cls, subparsers) -> argparse.ArgumentParser:
        """Register the subcommand and its flags

        Returns:
            The subcommand parser
        """
        parser = subparsers.add_parser(cls.name, help=cls.description, description=cls.description)
        for flag in cls.flags:
            args, kwargs = FLAGS[flag]
            parser.add_argument(*args, **kwargs)
        parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
        return parser


FLAGS: Dict[str, Tuple[Tuple[str, ...], Dict[str, Any]]] = {
    "poly": (("-f", "--poly"), {"help": "polynomial, e.g. \"x^4+y^5+x*y^4\""}),
    "vars": (("--vars",), {"dest": "variables", "help": "ring variables, e.g. x,y"}),
    "exponent": (("-a", "--exponent"), {"type": int, "default": -1, "help": "exponent a of f^a"}),
    "order": (("-d", "--order"), {"type": int, "help": "truncation order d"}),
    "point": (("--point",), {"help": "genericity point a,b (skips the ladder)"}),
    "max_d": (("--max-d",), {"type": int, "dest": "max_d", "help": "largest order tried"}),
    "json": (("--json",), {"action": "store_true", "help": "JSON output"}),
    "jobs": (("--jobs",), {"type": int, "help": "worker processes"}),
    "p": (("-p",), {"type": int, "help": "Reiffen parameter p"}),
    "q": (("-q",), {"type": int, "help": "Reiffen parameter q (default p+1)"}),
    "p_range": (("--p-range",), {"dest": "p_range", "default": "4..6", "help": "p values A..B"}),
    "q_offset": (("--q-offset",), {"dest": "q_offset", "help": "q = p + k for k in the list"}),
    "reuse": (("--reuse-syzygies",), {"action": "store_true", "dest": "reuse_syzygies", "default": None,
                                      "help": "seed order-d syzygies with order d-1"}),
}
