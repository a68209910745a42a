"""
Exception hierarchy for the localization engine.

Provides typed exceptions carrying the CLI exit code, so that every failure
can be reported the same way on the command line and in JSON output.

Exit-code map (frozen):
    0 ok, 1 internal, 2 constant f, 3 not squarefree, 4 misses origin,
    5 singular away from origin, 6 order cap exceeded, 7 no generic point,
    8 invalid input/arguments, 9 algebra misuse, 10 invariant violation
"""

import traceback
from typing import Optional, Dict, Any


class DModError(Exception):
    """Base exception for all engine errors"""

    def __init__(self, message: str, code: int = 1, data: Optional[Dict[str, Any]] = None):
        """
        Initialize engine error.

        Args:
            message: Human-readable error message
            code: Process exit code used by the CLI
            data: Optional additional error data
        """
        super().__init__(message)
        self.message = message
        self.code = code
        self.data = data or {}

    def to_error_dict(self, include_stack: bool = False) -> Dict[str, Any]:
        """Convert to a JSON-serializable error record

        Args:
            include_stack: Include stack trace summary in error data

        Returns:
            Dict with code, message and optional data
        """
        error = {
            "code": self.code,
            "message": self.message
        }

        data = self.data.copy() if self.data else {}

        if include_stack and self.__traceback__:
            tb_lines = traceback.format_tb(self.__traceback__)
            data["traceback_summary"] = "".join(tb_lines[-3:])  # Last 3 frames

        if data:
            error["data"] = data

        return error


# Input errors (exit code 8)
class InputError(DModError):
    """Base class for malformed user input"""

    def __init__(self, message: str, code: int = 8, data: Optional[Dict[str, Any]] = None):
        super().__init__(message, code, data)


class PolynomialSyntaxError(InputError):
    """Polynomial or operator text does not match the grammar"""

    def __init__(self, text: str, offset: int, details: str):
        msg = f"Syntax error at offset {offset}: {details}"
        super().__init__(msg, data={"text": text, "offset": offset})
        self.offset = offset


class UnknownVariableError(InputError):
    """Identifier is not a variable of the ring"""

    def __init__(self, name: str, offset: int, known: Optional[list] = None):
        msg = f"Unknown variable '{name}' at offset {offset}"
        super().__init__(msg, data={"name": name, "offset": offset, "known": known or []})
        self.offset = offset


class InvalidArgumentError(InputError):
    """Invalid argument provided"""

    def __init__(self, argument: str, expected: str, received: Any):
        msg = f"Invalid argument '{argument}': expected {expected}, got {received}"
        super().__init__(msg, data={
            "argument": argument,
            "expected": expected,
            "received": str(received)
        })


class MissingArgumentError(InputError):
    """Required argument missing"""

    def __init__(self, argument: str):
        super().__init__(f"Missing required argument: {argument}", data={"argument": argument})


class ReiffenParameterError(InvalidArgumentError):
    """Reiffen family needs p >= 4 and q >= p+1"""

    def __init__(self, p: int, q: int):
        super().__init__("p,q", "p >= 4 and q >= p+1", f"p={p}, q={q}")


# Algebra misuse (exit code 9)
class AlgebraError(DModError):
    """Base class for invalid algebraic operations"""

    def __init__(self, message: str, code: int = 9, data: Optional[Dict[str, Any]] = None):
        super().__init__(message, code, data)


class RingMismatchError(AlgebraError):
    """Operands live in different rings"""

    def __init__(self, left: Any, right: Any):
        super().__init__(f"Ring mismatch: {left} vs {right}",
                         data={"left": str(left), "right": str(right)})


class ZeroPolynomialError(AlgebraError):
    """Operation undefined for the zero polynomial or operator"""

    def __init__(self, operation: str):
        super().__init__(f"{operation} is undefined for zero", data={"operation": operation})


class IndexOutOfRangeError(AlgebraError):
    """Variable index outside the ring arity"""

    def __init__(self, index: int, arity: int):
        super().__init__(f"Variable index {index} out of range for arity {arity}",
                         data={"index": index, "arity": arity})


class NotDivisibleError(AlgebraError):
    """Exact division left a nonzero remainder"""

    def __init__(self, dividend: Any, divisor: Any):
        super().__init__(f"{dividend} is not divisible by {divisor}",
                         data={"dividend": str(dividend), "divisor": str(divisor)})


# Curve validation (exit codes 2-5)
class CurveValidationError(DModError):
    """Base class for rejected curve inputs"""


class ConstantCurveError(CurveValidationError):
    """f is constant"""

    def __init__(self, f: Any):
        super().__init__(f"curve polynomial is constant: {f}", code=2, data={"f": str(f)})


class NotSquarefreeError(CurveValidationError):
    """f is not reduced"""

    def __init__(self, f: Any):
        super().__init__(f"curve polynomial is not squarefree: {f}", code=3, data={"f": str(f)})


class CurveMissesOriginError(CurveValidationError):
    """f(0,0) != 0"""

    def __init__(self, f: Any):
        super().__init__("curve does not pass through the origin", code=4, data={"f": str(f)})


class SingularAwayFromOriginError(CurveValidationError):
    """Singular points outside the origin"""

    def __init__(self, f: Any, witness: list):
        super().__init__("curve has singular points away from the origin", code=5,
                         data={"f": str(f), "witness": [str(g) for g in witness]})


# Pipeline errors (exit codes 6, 7, 10)
class OrderCapExceededError(DModError):
    """Stopping criterion not met within max-d"""

    def __init__(self, max_d: int, trace: Optional[list] = None):
        super().__init__(f"stopping criterion not met for d <= {max_d}", code=6,
                         data={"max_d": max_d, "trace": trace or []})


class GenericityNotFoundError(DModError):
    """No ladder point passes the genericity check"""

    def __init__(self, rejected: list):
        super().__init__(f"no generic point found among {len(rejected)} candidates", code=7,
                         data={"rejected": [f"{a},{b}" for a, b in rejected]})


class InvariantViolationError(DModError):
    """A runtime invariant of the pipeline failed"""

    def __init__(self, invariant: str, details: str):
        super().__init__(f"invariant '{invariant}' violated: {details}", code=10,
                         data={"invariant": invariant})
