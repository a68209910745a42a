"""Recursive-descent parser for polynomial text

Grammar:
    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor ('*'? factor)*
    factor   := rational | identifier ('^' nat)? | '(' expr ')' ('^' nat)?
    rational := int ('/' posint)?

The parser is generic over the algebra: it combines symbol values with
+, -, * and ** only, so the same grammar serves commutative polynomials
and Weyl operators (where '*' is the noncommutative product).
"""
from typing import Callable, Generic, Mapping, TypeVar

from core.errors import PolynomialSyntaxError, UnknownVariableError
from polyring.poly import Poly
from polyring.rational import Rational, rational
from polyring.ring import RingSpec

T = TypeVar("T")


def _is_digit(ch: str) -> bool:
    return ch != "" and ch in "0123456789"


class ExpressionParser(Generic[T]):
    """Parse text into elements of an algebra given by symbol values"""

    def __init__(self, text: str, symbols: Mapping[str, T], constant: Callable[[Rational], T]):
        self.text = text
        self.symbols = symbols
        self.constant = constant
        self.pos = 0

    def parse(self) -> T:
        self._skip()
        if self.pos >= len(self.text):
            self._fail("empty expression")
        value = self._expr()
        self._skip()
        if self.pos < len(self.text):
            self._fail(f"unexpected character {self.text[self.pos]!r}")
        return value

    # -- helpers -----------------------------------------------------------

    def _offset(self) -> int:
        return len(self.text[:self.pos].encode("utf-8"))

    def _fail(self, details: str):
        raise PolynomialSyntaxError(self.text, self._offset(), details)

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _starts_factor(self, ch: str) -> bool:
        return _is_digit(ch) or ch.isalpha() or ch in "_("

    # -- grammar -----------------------------------------------------------

    def _expr(self) -> T:
        sign = self._peek()
        negate = False
        if sign in "+-" and sign:
            self.pos += 1
            negate = sign == "-"
        value = self._term()
        if negate:
            value = -value
        while True:
            op = self._peek()
            if op not in ("+", "-") or not op:
                return value
            self.pos += 1
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs

    def _term(self) -> T:
        value = self._factor()
        while True:
            ch = self._peek()
            if ch == "*":
                self.pos += 1
                value = value * self._factor()
            elif ch and self._starts_factor(ch):
                value = value * self._factor()
            else:
                return value

    def _factor(self) -> T:
        ch = self._peek()
        if not ch:
            self._fail("unexpected end of input")
        if _is_digit(ch):
            return self.constant(self._rational())
        if ch.isalpha() or ch == "_":
            start = self.pos
            name = self._identifier()
            if name not in self.symbols:
                self.pos = start
                raise UnknownVariableError(name, self._offset(), sorted(self.symbols))
            return self._maybe_power(self.symbols[name])
        if ch == "(":
            self.pos += 1
            value = self._expr()
            if self._peek() != ")":
                self._fail("expected ')'")
            self.pos += 1
            return self._maybe_power(value)
        self._fail(f"unexpected character {ch!r}")

    def _maybe_power(self, value: T) -> T:
        if self._peek() == "^":
            self.pos += 1
            self._skip()
            if not _is_digit(self._peek()):
                self._fail("expected a natural exponent after '^'")
            return value ** self._natural()
        return value

    def _natural(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and _is_digit(self.text[self.pos]):
            self.pos += 1
        return int(self.text[start:self.pos])

    def _rational(self) -> Rational:
        num = self._natural()
        if self.pos < len(self.text) and self.text[self.pos] == "/":
            self.pos += 1
            if self.pos >= len(self.text) or not _is_digit(self.text[self.pos]):
                self._fail("expected a positive denominator after '/'")
            den_pos = self.pos
            den = self._natural()
            if den == 0:
                self.pos = den_pos
                self._fail("zero denominator")
            return rational(num, den)
        return rational(num)

    def _identifier(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start:self.pos]


def parse_poly(text: str, ring: RingSpec) -> Poly:
    symbols = {name: Poly.variable(ring, i) for i, name in enumerate(ring.names)}
    return ExpressionParser(text, symbols, lambda c: Poly.constant(ring, c)).parse()


def detect_variables(text: str) -> list:
    """Identifiers occurring in text, sorted (used to infer a ring from input)"""
    names = set()
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isalpha() or ch == "_":
            start = i
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
            names.add(text[start:i])
        elif _is_digit(ch):
            # skip the whole number so "3x" yields x
            while i < len(text) and _is_digit(text[i]):
                i += 1
        else:
            i += 1
    return sorted(names)
