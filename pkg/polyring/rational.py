"""Exact rational coefficients backed by sympy's QQ domain"""
from typing import Union

from sympy.polys.domains import QQ

from core.errors import InvalidArgumentError

# gmpy2.mpq when gmpy2 is installed, sympy's PythonMPQ otherwise; both keep
# numerator/denominator reduced with a positive denominator.
Rational = QQ.dtype
ONE = QQ.one

RationalLike = Union[int, str, "Rational"]


def rational(value: RationalLike, denominator: int = 1) -> Rational:
    """Convert an int, "p/q" string or rational into a Rational"""
    if isinstance(value, Rational) and denominator == 1:
        return value
    if isinstance(value, bool):
        raise InvalidArgumentError("rational", "integer or p/q", value)
    if isinstance(value, str):
        text = value.strip()
        num, _, den = text.partition("/")
        try:
            n = int(num)
            d = int(den) if den else 1
        except ValueError:
            raise InvalidArgumentError("rational", "integer or p/q", value)
        if d == 0:
            raise InvalidArgumentError("rational", "nonzero denominator", value)
        return QQ(n, d * denominator)
    if isinstance(value, int):
        if denominator == 0:
            raise InvalidArgumentError("rational", "nonzero denominator", denominator)
        return QQ(value, denominator)
    if isinstance(value, Rational):
        return value / denominator
    raise InvalidArgumentError("rational", "integer or p/q", value)


def numerator(c: Rational) -> int:
    return int(c.numerator)


def denominator(c: Rational) -> int:
    return int(c.denominator)


def format_rational(c: Rational) -> str:
    """Render as "n" or "n/d" (sign on the numerator)"""
    n, d = numerator(c), denominator(c)
    return str(n) if d == 1 else f"{n}/{d}"
