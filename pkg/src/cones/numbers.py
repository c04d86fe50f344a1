# Exact arithmetic in Q(sqrt 2)
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from src.utils.io import formatRational

Rational = Union[Fraction, int]


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


@dataclass(frozen=True)
class NumberQSqrt2:
    """a + b*sqrt2 with a, b rational.

    Ordering is decided without floating point: when a and b have opposite
    signs, the sign of the sum is the sign of whichever of a^2 and 2b^2 is
    larger (they are never equal unless both vanish).
    """

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def of(cls, value: Union["NumberQSqrt2", Rational]) -> "NumberQSqrt2":
        return value if isinstance(value, NumberQSqrt2) else cls(Fraction(value))

    @property
    def isRational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0 or sa == sb:
            return sa or sb
        if sa == 0:
            return sb
        return sa if self.a * self.a > 2 * self.b * self.b else sb

    def __add__(self, other) -> "NumberQSqrt2":
        other = NumberQSqrt2.of(other)
        return NumberQSqrt2(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "NumberQSqrt2":
        return NumberQSqrt2(-self.a, -self.b)

    def __sub__(self, other) -> "NumberQSqrt2":
        return self + -NumberQSqrt2.of(other)

    def __rsub__(self, other) -> "NumberQSqrt2":
        return NumberQSqrt2.of(other) - self

    def __mul__(self, other) -> "NumberQSqrt2":
        other = NumberQSqrt2.of(other)
        return NumberQSqrt2(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def _compare(self, other) -> int:
        return (self - NumberQSqrt2.of(other)).sign()

    def __lt__(self, other) -> bool:
        return self._compare(other) < 0

    def __le__(self, other) -> bool:
        return self._compare(other) <= 0

    def __gt__(self, other) -> bool:
        return self._compare(other) > 0

    def __ge__(self, other) -> bool:
        return self._compare(other) >= 0

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = NumberQSqrt2.of(other)
        if not isinstance(other, NumberQSqrt2):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __str__(self) -> str:
        if self.b == 0:
            return formatRational(self.a)
        root = "sqrt2" if abs(self.b) == 1 else f"{formatRational(abs(self.b))}*sqrt2"
        if self.a == 0:
            return root if self.b > 0 else f"-{root}"
        return f"{formatRational(self.a)}{'+' if self.b > 0 else '-'}{root}"


SQRT2 = NumberQSqrt2(0, 1)
