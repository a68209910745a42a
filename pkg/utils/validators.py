"""Input validation utilities for command-line flags

Provides reusable validators for:
- Genericity points ("a,b" with rational coordinates)
- Truncation orders and caps
- Worker counts
- Reiffen parameter ranges ("A..B") and q offsets
- Variable lists
"""

from typing import List, Optional, Tuple

from core.errors import InvalidArgumentError, MissingArgumentError
from polyring.parser import detect_variables
from polyring.rational import Rational, rational
from polyring.ring import RingSpec


class Validators:
    """Collection of input validation methods"""

    # Constants
    MAX_ORDER = 200  # Largest truncation order accepted on the command line
    MAX_JOBS = 64
    DEFAULT_VARIABLES = ("x", "y")

    @staticmethod
    def validate_point(value: Optional[str], param_name: str = "point") -> Optional[Tuple[Rational, Rational]]:
        """Validate a genericity point "a,b"

        Args:
            value: Text such as "0,1" or "1/2,-3"
            param_name: Parameter name for error messages

        Returns:
            Pair of rationals, or None when value is None

        Raises:
            InvalidArgumentError: If the text is not two rationals or is (0,0)
        """
        if value is None:
            return None
        parts = [p.strip() for p in value.split(",")]
        if len(parts) != 2 or not all(parts):
            raise InvalidArgumentError(
                argument=param_name,
                expected="two rationals 'a,b'",
                received=value
            )
        a, b = rational(parts[0]), rational(parts[1])
        if not a and not b:
            raise InvalidArgumentError(
                argument=param_name,
                expected="a nonzero direction",
                received=value
            )
        return a, b

    @staticmethod
    def validate_order(value: Optional[int], param_name: str = "order", minimum: int = 0) -> int:
        """Validate a truncation order or cap

        Raises:
            MissingArgumentError: If value is None
            InvalidArgumentError: If value is outside [minimum, MAX_ORDER]
        """
        if value is None:
            raise MissingArgumentError(param_name)
        if not isinstance(value, int) or isinstance(value, bool):
            raise InvalidArgumentError(param_name, "integer", value)
        if not minimum <= value <= Validators.MAX_ORDER:
            raise InvalidArgumentError(
                argument=param_name,
                expected=f"integer between {minimum} and {Validators.MAX_ORDER}",
                received=value
            )
        return value

    @staticmethod
    def validate_jobs(value: Optional[int]) -> int:
        """Validate a worker count (default 1)"""
        if value is None:
            return 1
        if not 1 <= value <= Validators.MAX_JOBS:
            raise InvalidArgumentError(
                argument="jobs",
                expected=f"integer between 1 and {Validators.MAX_JOBS}",
                received=value
            )
        return value

    @staticmethod
    def validate_range(value: str, param_name: str = "p-range") -> List[int]:
        """Validate "A..B" (inclusive) or a single integer

        Raises:
            InvalidArgumentError: If the bounds are not integers or A > B
        """
        text = value.strip()
        low, sep, high = text.partition("..")
        try:
            start = int(low)
            stop = int(high) if sep else start
        except ValueError:
            raise InvalidArgumentError(param_name, "'A..B' with integers A <= B", value)
        if start > stop:
            raise InvalidArgumentError(param_name, "'A..B' with integers A <= B", value)
        return list(range(start, stop + 1))

    @staticmethod
    def validate_offsets(value: Optional[str]) -> List[int]:
        """Validate comma separated q offsets "k[,k...]" (default [1])"""
        if value is None:
            return [1]
        try:
            offsets = [int(part) for part in value.split(",") if part.strip()]
        except ValueError:
            raise InvalidArgumentError("q-offset", "comma separated positive integers", value)
        if not offsets or any(k < 1 for k in offsets):
            raise InvalidArgumentError("q-offset", "comma separated positive integers", value)
        return sorted(set(offsets))

    @staticmethod
    def validate_variables(value: Optional[str], text: Optional[str] = None,
                           default: Optional[Tuple[str, ...]] = None) -> RingSpec:
        """Ring from --vars, else from the identifiers in text, else default

        Raises:
            InvalidArgumentError: If the names are not distinct identifiers
        """
        if value:
            return RingSpec.of(value)
        if default is not None:
            return RingSpec(tuple(default))
        if text is not None:
            names = detect_variables(text)
            if names:
                return RingSpec(tuple(names))
        return RingSpec(Validators.DEFAULT_VARIABLES)
