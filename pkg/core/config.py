"""Engine configuration with environment overrides"""
import os
from dataclasses import dataclass, replace
from typing import Optional, Tuple

from core.errors import InvalidArgumentError

Point = Tuple[object, object]


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise InvalidArgumentError(name, "integer", raw)


def _env_bool(name: str, default: bool) -> bool:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    return raw.strip().lower() in ("1", "true", "yes", "on")


@dataclass(frozen=True)
class KappaConfig:
    """Settings for the annihilator-order iteration

    Attributes:
        max_d: Largest truncation order tried before giving up
        point: Fixed genericity point (skips the ladder when set)
        ladder_size: Number of ladder points tried before giving up
        undefined_retry_limit: Consecutive undefined m^(d) before moving to the next point
        reuse_syzygies: Seed order-d syzygies with the order-(d-1) ones
        check_invariants: Verify chain inclusion, Bernstein and multiplicity bounds at runtime
            (annihilation is always checked)
    """

    max_d: int = 50
    point: Optional[Point] = None
    ladder_size: int = 16
    undefined_retry_limit: int = 3
    reuse_syzygies: bool = False
    check_invariants: bool = True

    def __post_init__(self):
        if self.max_d < 1:
            raise InvalidArgumentError("max_d", "integer >= 1", self.max_d)
        if self.ladder_size < 1:
            raise InvalidArgumentError("ladder_size", "integer >= 1", self.ladder_size)
        if self.undefined_retry_limit < 1:
            raise InvalidArgumentError("undefined_retry_limit", "integer >= 1",
                                       self.undefined_retry_limit)

    @property
    def skip_ladder(self) -> bool:
        return self.point is not None

    @classmethod
    def from_env(cls, **overrides) -> "KappaConfig":
        """Build from DMOD_* variables, then apply explicit overrides"""
        base = cls(
            max_d=_env_int("DMOD_MAX_D", cls.max_d),
            reuse_syzygies=_env_bool("DMOD_REUSE_SYZYGIES", cls.reuse_syzygies),
            check_invariants=_env_bool("DMOD_CHECK_INVARIANTS", cls.check_invariants),
        )
        overrides = {k: v for k, v in overrides.items() if v is not None}
        return replace(base, **overrides)


@dataclass(frozen=True)
class EngineConfig:
    """Settings for the Groebner kernel"""

    gb_cache_size: int = 256

    @classmethod
    def from_env(cls) -> "EngineConfig":
        return cls(gb_cache_size=_env_int("DMOD_GB_CACHE_SIZE", cls.gb_cache_size))
