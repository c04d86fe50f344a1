"""Infinite backends with decidable order: Z+, (Z+)^r and Q+."""
from fractions import Fraction
from itertools import product
from math import gcd
from typing import List, Optional, Sequence, Tuple

from src.core.backend import MonoidBackend
from src.utils.io import formatRational


class NaturalNumbers(MonoidBackend):
    """Z+ under addition; the ball of bound b is {0, ..., b}."""

    def __init__(self, name: Optional[str] = None):
        super().__init__(name or "Z+")

    @property
    def zero(self) -> int:
        return 0

    def add(self, x: int, y: int) -> int:
        return x + y

    def contains(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool) and x >= 0

    def enumerate(self, bound: Optional[int] = None) -> List[int]:
        return list(range((bound or 0) + 1))

    def downSet(self, x: int) -> Sequence[int]:
        return range(x + 1)

    def exactLeq(self, x: int, y: int) -> Tuple[bool, Optional[int]]:
        return (True, y - x) if x <= y else (False, None)

    def exactPropto(self, x: int, y: int) -> bool:
        return x == 0 or y > 0


class FreeCommutativeMonoid(MonoidBackend):
    """(Z+)^rank; balls are the vectors of total degree <= bound."""

    def __init__(self, rank: int, name: Optional[str] = None):
        if rank < 1:
            raise ValueError(f"Rank must be positive, got {rank}")
        super().__init__(name or f"(Z+)^{rank}")
        self.rank = rank

    @property
    def zero(self) -> Tuple[int, ...]:
        return (0,) * self.rank

    def add(self, x, y) -> Tuple[int, ...]:
        return tuple(a + b for a, b in zip(x, y))

    def contains(self, x) -> bool:
        return (
            isinstance(x, tuple)
            and len(x) == self.rank
            and all(isinstance(a, int) and a >= 0 for a in x)
        )

    def enumerate(self, bound: Optional[int] = None) -> List[Tuple[int, ...]]:
        bound = bound or 0
        vectors = [
            v
            for v in product(range(bound + 1), repeat=self.rank)
            if sum(v) <= bound
        ]
        # graded-lexicographic
        return sorted(vectors, key=lambda v: (sum(v), tuple(-a for a in v)))

    def downSet(self, x) -> List[Tuple[int, ...]]:
        return sorted(
            product(*(range(a + 1) for a in x)),
            key=lambda v: (sum(v), tuple(-a for a in v)),
        )

    def exactLeq(self, x, y):
        if all(a <= b for a, b in zip(x, y)):
            return True, tuple(b - a for a, b in zip(x, y))
        return False, None

    def exactPropto(self, x, y) -> bool:
        # x <= n*y for large n iff supp(x) is inside supp(y)
        return all(b > 0 for a, b in zip(x, y) if a > 0)


class NonnegativeRationals(MonoidBackend):
    """Q+ under addition.

    The ball of bound b lists the reduced fractions with denominator at
    most b and value at most b, denominator first, then numerator.
    """

    def __init__(self, name: Optional[str] = None):
        super().__init__(name or "Q+")

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    def add(self, x, y) -> Fraction:
        return Fraction(x) + Fraction(y)

    def eq(self, x, y) -> bool:
        return Fraction(x) == Fraction(y)

    def contains(self, x) -> bool:
        return (
            isinstance(x, (int, Fraction))
            and not isinstance(x, bool)
            and x >= 0
        )

    def enumerate(self, bound: Optional[int] = None) -> List[Fraction]:
        bound = max(bound or 1, 1)
        elements = []
        for denominator in range(1, bound + 1):
            for numerator in range(bound * denominator + 1):
                if gcd(numerator, denominator) == 1:
                    elements.append(Fraction(numerator, denominator))
        return elements

    def format(self, x) -> str:
        return formatRational(x)

    def exactLeq(self, x, y):
        x, y = Fraction(x), Fraction(y)
        return (True, y - x) if x <= y else (False, None)

    def exactPropto(self, x, y) -> bool:
        return x == 0 or y > 0

    def divide(self, x, n: int) -> Fraction:
        return Fraction(x) / n
