"""Polynomial ring descriptors"""
import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from core.errors import InvalidArgumentError, IndexOutOfRangeError

ExponentVector = Tuple[int, ...]

_IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class RingSpec:
    """Ordered variable names of Q[x_1..x_n]"""

    names: Tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise InvalidArgumentError("variables", "at least one variable", "()")
        if len(set(self.names)) != len(self.names):
            raise InvalidArgumentError("variables", "distinct names", ",".join(self.names))
        for name in self.names:
            if not _IDENTIFIER.match(name):
                raise InvalidArgumentError("variables", "identifiers", name)

    @classmethod
    def of(cls, names: "str | Iterable[str]") -> "RingSpec":
        """RingSpec.of("x,y") or RingSpec.of(["x", "y"])"""
        if isinstance(names, str):
            names = [n.strip() for n in names.split(",") if n.strip()]
        return cls(tuple(names))

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InvalidArgumentError("variable", f"one of {','.join(self.names)}", name)

    def check_index(self, index: int) -> None:
        if not 0 <= index < self.arity:
            raise IndexOutOfRangeError(index, self.arity)

    def without(self, indices: Iterable[int]) -> "RingSpec":
        """Ring with the given variables removed (order preserved)"""
        drop = set(indices)
        return RingSpec(tuple(n for i, n in enumerate(self.names) if i not in drop))

    def with_front(self, names: Sequence[str]) -> "RingSpec":
        """Ring with extra variables prepended (used by elimination tricks)"""
        return RingSpec(tuple(names) + self.names)

    def zero_vector(self) -> ExponentVector:
        return (0,) * self.arity

    def unit_vector(self, index: int) -> ExponentVector:
        self.check_index(index)
        return tuple(1 if i == index else 0 for i in range(self.arity))

    def __str__(self) -> str:
        return f"QQ[{','.join(self.names)}]"


def fresh_name(ring: RingSpec, stem: str = "t") -> str:
    """A variable name not used by ring"""
    name = stem
    counter = 0
    while name in ring.names:
        counter += 1
        name = f"{stem}{counter}"
    return name
