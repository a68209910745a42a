"""
Command execution context for dependency injection.

Provides the run configuration and shared resources a command might need,
so commands never read argparse namespaces or the environment directly.
"""

from concurrent.futures import Executor
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from core.config import KappaConfig
from core.errors import MissingArgumentError
from polyring.rational import Rational


@dataclass(frozen=True)
class RunConfig:
    """
    Flags of one CLI invocation.

    - poly: input polynomial text (-f/--poly)
    - variables: ring variables (--vars), None to infer
    - exponent: a in f^a (-a/--exponent)
    - order: truncation order d (-d/--order)
    - point: genericity point override (--point); implies no ladder
    - max_d: order cap (--max-d)
    - output: "text" or "json"
    - jobs: worker processes for experiments (--jobs)
    """

    command: str
    poly: Optional[str] = None
    variables: Optional[str] = None
    exponent: int = -1
    order: Optional[int] = None
    point: Optional[Tuple[Rational, Rational]] = None
    max_d: Optional[int] = None
    output: str = "text"
    jobs: int = 1
    p: Optional[int] = None
    q: Optional[int] = None
    p_values: List[int] = field(default_factory=list)
    q_offsets: List[int] = field(default_factory=lambda: [1])
    reuse_syzygies: Optional[bool] = None

    @property
    def skip_ladder(self) -> bool:
        return self.point is not None

    @property
    def json(self) -> bool:
        return self.output == "json"

    def kappa_config(self) -> KappaConfig:
        """Environment defaults overridden by explicit flags"""
        return KappaConfig.from_env(max_d=self.max_d, point=self.point,
                                    reuse_syzygies=self.reuse_syzygies)


@dataclass
class CommandContext:
    """
    Execution context for CLI commands.

    - run: the parsed flags
    - executor: worker pool for commands that fan out (experiment)
    """

    run: RunConfig
    executor: Optional[Executor] = None

    def validate_requirements(self, requires_poly: bool = False, requires_order: bool = False):
        """
        Validate that all required inputs are present.

        Raises:
            MissingArgumentError: If a required flag is missing
        """
        if requires_poly and not self.run.poly:
            raise MissingArgumentError("-f/--poly")

        if requires_order and self.run.order is None:
            raise MissingArgumentError("-d/--order")
